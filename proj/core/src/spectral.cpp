#include "qsc/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qsc {

namespace {

double off_diag_frobenius(const ComplexMatrix& a) {
    const std::size_t n = a.dim();
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

// One Jacobi rotation zeroing a(p,q).  The 2x2 block [[alpha, beta],
// [conj(beta), gamma]] is diagonalized by the unitary [[c, s e^{i phi}],
// [-s e^{-i phi}, c]] with phi = arg(beta) and the usual stable tangent
// choice for the real problem with off-diagonal |beta|.
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
    const cplx beta = a(p, q);
    const double ab = std::abs(beta);
    if (ab == 0.0) return;

    const double alpha = a(p, p).real();
    const double gamma = a(q, q).real();
    const double tau = (gamma - alpha) / (2.0 * ab);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const cplx phase = beta / ab;
    const cplx sigma = t * c * phase;

    const std::size_t n = a.dim();
    // Columns p and q of both a and v.
    for (std::size_t i = 0; i < n; ++i) {
        const cplx aip = a(i, p);
        const cplx aiq = a(i, q);
        a(i, p) = c * aip - std::conj(sigma) * aiq;
        a(i, q) = sigma * aip + c * aiq;
        const cplx vip = v(i, p);
        const cplx viq = v(i, q);
        v(i, p) = c * vip - std::conj(sigma) * viq;
        v(i, q) = sigma * vip + c * viq;
    }
    // Rows p and q of a (J^+ from the left).
    for (std::size_t j = 0; j < n; ++j) {
        const cplx apj = a(p, j);
        const cplx aqj = a(q, j);
        a(p, j) = c * apj - sigma * aqj;
        a(q, j) = std::conj(sigma) * apj + c * aqj;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = cplx(a(p, p).real(), 0.0);
    a(q, q) = cplx(a(q, q).real(), 0.0);
}

} // namespace

Spectrum eigh(const ComplexMatrix& a, double herm_tol) {
    const std::size_t n = a.dim();
    if (n == 0) throw std::invalid_argument("empty matrix");
    if (!is_hermitian(a, herm_tol)) throw std::invalid_argument("eigh: input not self-adjoint");

    // Work on the hermitized copy so roundoff asymmetry cannot leak in.
    ComplexMatrix w(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            w(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));

    ComplexMatrix v = ComplexMatrix::identity(n);
    const double goal = 1e-12 * std::max(frobenius_norm(w), 1e-300);
    const int max_sweeps = 80;
    for (int sweep = 0; sweep < max_sweeps && off_diag_frobenius(w) > goal; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q)
                rotate(w, v, p, q);
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return w(i, i).real() < w(j, j).real(); });

    Spectrum s;
    s.values.resize(n);
    s.vectors = ComplexMatrix(n);
    for (std::size_t k = 0; k < n; ++k) {
        s.values[k] = w(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) s.vectors(i, k) = v(i, order[k]);
    }
    return s;
}

bool psd_oracle(const ComplexMatrix& a, double tol) {
    return eigh(a).values.front() >= -tol;
}

double trace_norm(const ComplexMatrix& a) {
    const ComplexMatrix gram = mat_mul(adjoint(a), a);
    const Spectrum s = eigh(gram, 1e-6 * std::max(1.0, frobenius_norm(gram)));
    double t = 0.0;
    for (double lam : s.values) t += std::sqrt(std::max(lam, 0.0));
    return t;
}

double spectral_norm_oracle(const ComplexMatrix& a) {
    const ComplexMatrix gram = mat_mul(adjoint(a), a);
    const Spectrum s = eigh(gram, 1e-6 * std::max(1.0, frobenius_norm(gram)));
    return std::sqrt(std::max(s.values.back(), 0.0));
}

ComplexMatrix sqrt_oracle(const ComplexMatrix& a, double tol) {
    const Spectrum s = eigh(a);
    if (s.values.front() < -tol)
        throw std::invalid_argument("sqrt_oracle: input not positive semidefinite");
    const std::size_t n = a.dim();
    ComplexMatrix out(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double r = std::sqrt(std::max(s.values[k], 0.0));
        for (std::size_t i = 0; i < n; ++i) {
            const cplx left = r * s.vectors(i, k);
            for (std::size_t j = 0; j < n; ++j)
                out(i, j) += left * std::conj(s.vectors(j, k));
        }
    }
    return out;
}

namespace {

// Determinant of the principal submatrix indexed by `rows`, by Gaussian
// elimination with partial pivoting.  Real for Hermitian inputs.
double principal_minor(const ComplexMatrix& a, const std::vector<std::size_t>& rows) {
    const std::size_t k = rows.size();
    std::vector<cplx> m(k * k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) m[i * k + j] = a(rows[i], rows[j]);

    cplx det = 1.0;
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < k; ++r)
            if (std::abs(m[r * k + col]) > std::abs(m[piv * k + col])) piv = r;
        if (std::abs(m[piv * k + col]) == 0.0) return 0.0;
        if (piv != col) {
            for (std::size_t j = 0; j < k; ++j) std::swap(m[piv * k + j], m[col * k + j]);
            det = -det;
        }
        det *= m[col * k + col];
        for (std::size_t r = col + 1; r < k; ++r) {
            const cplx f = m[r * k + col] / m[col * k + col];
            for (std::size_t j = col; j < k; ++j) m[r * k + j] -= f * m[col * k + j];
        }
    }
    return det.real();
}

} // namespace

bool principal_minors_psd(const ComplexMatrix& a, double tol) {
    const std::size_t n = a.dim();
    if (n > 12) throw std::invalid_argument("principal_minors_psd: dim capped at 12");
    std::vector<std::size_t> rows;
    for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
        rows.clear();
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1ul << i)) rows.push_back(i);
        if (principal_minor(a, rows) < -tol) return false;
    }
    return true;
}

bool cholesky_psd(const ComplexMatrix& a, double tol) {
    const std::size_t n = a.dim();
    ComplexMatrix s(n);
    double scale = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) s(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
        scale = std::max(scale, std::abs(s(i, i).real()));
    }
    const double eps = tol * scale;

    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t j = k + 1; j < n; ++j)
            if (s(idx[j], idx[j]).real() > s(idx[piv], idx[piv]).real()) piv = j;
        std::swap(idx[k], idx[piv]);
        const double d = s(idx[k], idx[k]).real();
        if (d <= eps) {
            // All remaining diagonal entries are at most eps.  A genuinely
            // positive remainder then has to vanish entirely; any surviving
            // entry belongs to a 2x2 block with a negative minor.
            for (std::size_t i = k; i < n; ++i)
                for (std::size_t j = k; j < n; ++j)
                    if (std::abs(s(idx[i], idx[j])) > 16.0 * std::max(eps, tol)) return false;
            return true;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            const cplx lik = s(idx[i], idx[k]);
            if (lik == cplx(0.0, 0.0)) continue;
            for (std::size_t j = k + 1; j < n; ++j)
                s(idx[i], idx[j]) -= lik * std::conj(s(idx[j], idx[k])) / d;
        }
    }
    return true;
}

} // namespace qsc
