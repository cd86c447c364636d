#include "qsc/complex_matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace qsc {

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diag(const std::vector<double>& entries) {
    ComplexMatrix m(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
    if (dim_ != rhs.dim_) throw std::invalid_argument("matrix dims differ");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
    if (dim_ != rhs.dim_) throw std::invalid_argument("matrix dims differ");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
    for (auto& v : data_) v *= s;
    return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }

ComplexMatrix mat_mul(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("matrix dims differ");
    const std::size_t n = a.dim();
    ComplexMatrix c(n);
    // i-k-j loop order keeps the inner loop contiguous in b and c.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx(0.0)) continue;
            const cplx* brow = b.data() + k * n;
            cplx* crow = c.data() + i * n;
            for (std::size_t j = 0; j < n; ++j) crow[j] += aik * brow[j];
        }
    }
    return c;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
    const std::size_t n = a.dim();
    ComplexMatrix t(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t(j, i) = std::conj(a(i, j));
    return t;
}

cplx trace(const ComplexMatrix& a) {
    cplx t = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) t += a(i, i);
    return t;
}

double hs_norm_sq(const ComplexMatrix& a) {
    double s = 0.0;
    const std::size_t nn = a.dim() * a.dim();
    for (std::size_t k = 0; k < nn; ++k) s += std::norm(a.data()[k]);
    return s;
}

double frobenius_norm(const ComplexMatrix& a) { return std::sqrt(hs_norm_sq(a)); }

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("matrix dims differ");
    double s = 0.0;
    const std::size_t nn = a.dim() * a.dim();
    for (std::size_t k = 0; k < nn; ++k) s += std::norm(a.data()[k] - b.data()[k]);
    return std::sqrt(s);
}

double col_sum_norm(const ComplexMatrix& a) {
    const std::size_t n = a.dim();
    std::vector<double> col(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) col[j] += std::abs(a(i, j));
    double best = 0.0;
    for (double c : col) best = std::max(best, c);
    return best;
}

bool is_hermitian(const ComplexMatrix& a, double tol) {
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            if (std::abs(a(i, j) - std::conj(a(j, i))) > tol) return false;
    return true;
}

ComplexMatrix matrix_power(const ComplexMatrix& a, unsigned long n) {
    ComplexMatrix result = ComplexMatrix::identity(a.dim());
    ComplexMatrix base = a;
    while (n > 0) {
        if (n & 1ul) result = mat_mul(result, base);
        n >>= 1;
        if (n > 0) base = mat_mul(base, base);
    }
    return result;
}

} // namespace qsc
