#include "qsc/generate.hpp"

#include <cmath>
#include <stdexcept>

namespace qsc {

namespace {

cplx gaussian(std::mt19937_64& rng) {
    std::normal_distribution<double> d(0.0, 1.0);
    const double re = d(rng);
    const double im = d(rng);
    return cplx(re, im);
}

ComplexMatrix conjugated_by_random_unitary(const std::vector<double>& spectrum,
                                           std::mt19937_64& rng) {
    const std::size_t dim = spectrum.size();
    const ComplexMatrix u = random_unitary(dim, rng);
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            cplx s(0.0, 0.0);
            for (std::size_t k = 0; k < dim; ++k)
                s += u(i, k) * spectrum[k] * std::conj(u(j, k));
            m(i, j) = s;
        }
    // scrub the roundoff asymmetry so the gates see an exactly self-adjoint input
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = cplx(m(i, i).real(), 0.0);
        for (std::size_t j = i + 1; j < dim; ++j) {
            const cplx avg = 0.5 * (m(i, j) + std::conj(m(j, i)));
            m(i, j) = avg;
            m(j, i) = std::conj(avg);
        }
    }
    const double tr = trace(m).real();
    m *= cplx(1.0 / tr, 0.0);
    return m;
}

} // namespace

ComplexMatrix random_unitary(std::size_t dim, std::mt19937_64& rng) {
    if (dim == 0) throw std::invalid_argument("empty matrix");
    // Gram-Schmidt on a complex Gaussian matrix: Haar up to the phases of
    // the diagonal, which is plenty for scrambling test spectra.
    ComplexMatrix u(dim);
    for (std::size_t j = 0; j < dim; ++j) {
        std::vector<cplx> v(dim);
        for (std::size_t i = 0; i < dim; ++i) v[i] = gaussian(rng);
        for (std::size_t k = 0; k < j; ++k) {
            cplx proj(0.0, 0.0);
            for (std::size_t i = 0; i < dim; ++i) proj += std::conj(u(i, k)) * v[i];
            for (std::size_t i = 0; i < dim; ++i) v[i] -= proj * u(i, k);
        }
        double nrm = 0.0;
        for (const cplx& x : v) nrm += std::norm(x);
        nrm = std::sqrt(nrm);
        if (nrm < 1e-8) return random_unitary(dim, rng); // astronomically rare
        for (std::size_t i = 0; i < dim; ++i) u(i, j) = v[i] / nrm;
    }
    return u;
}

ComplexMatrix random_density(std::size_t dim, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> flat(0.5, 2.0);
    std::vector<double> spec(dim);
    double sum = 0.0;
    for (double& s : spec) {
        s = flat(rng);
        sum += s;
    }
    for (double& s : spec) s /= sum;
    return conjugated_by_random_unitary(spec, rng);
}

ComplexMatrix random_pure(std::size_t dim, std::mt19937_64& rng) {
    std::vector<cplx> v(dim);
    double nrm = 0.0;
    for (cplx& x : v) {
        x = gaussian(rng);
        nrm += std::norm(x);
    }
    nrm = std::sqrt(nrm);
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            m(i, j) = v[i] * std::conj(v[j]) / (nrm * nrm);
    return m;
}

ComplexMatrix random_false_density(std::size_t dim, std::size_t negatives,
                                   std::mt19937_64& rng) {
    if (negatives == 0 || negatives > 2 || dim < negatives + 4)
        throw std::invalid_argument("need 1..2 negative modes and dim >= negatives + 4");
    std::uniform_real_distribution<double> neg(0.05, 0.2);
    std::uniform_real_distribution<double> flat(0.5, 1.5);

    std::vector<double> spec(dim);
    double neg_sum = 0.0;
    for (std::size_t i = 0; i < negatives; ++i) {
        spec[i] = -neg(rng);
        neg_sum += spec[i];
    }
    double raw_sum = 0.0;
    for (std::size_t i = negatives; i < dim; ++i) {
        spec[i] = flat(rng);
        raw_sum += spec[i];
    }
    const double scale = (1.0 - neg_sum) / raw_sum;
    for (std::size_t i = negatives; i < dim; ++i) spec[i] *= scale;
    return conjugated_by_random_unitary(spec, rng);
}

double oscillator_eigenfunction(int n, double x, double hbar) {
    if (n < 0) throw std::invalid_argument("negative oscillator level");
    if (hbar <= 0.0) throw std::invalid_argument("hbar must be positive");
    const double xi = x / std::sqrt(hbar);
    // h_k = H_k / sqrt(2^k k!), so h_{k+1} = xi sqrt(2/(k+1)) h_k - sqrt(k/(k+1)) h_{k-1}
    double hk = 1.0, hkm1 = 0.0;
    for (int k = 0; k < n; ++k) {
        const double hkp1 = xi * std::sqrt(2.0 / (k + 1.0)) * hk -
                            std::sqrt(static_cast<double>(k) / (k + 1.0)) * hkm1;
        hkm1 = hk;
        hk = hkp1;
    }
    return std::pow(M_PI * hbar, -0.25) * hk * std::exp(-0.5 * xi * xi);
}

KernelOperator oscillator_mixture_kernel(const KernelGrid& g,
                                         const std::vector<double>& weights, double hbar) {
    KernelOperator a(g);
    std::vector<double> psi(g.n);
    for (std::size_t k = 0; k < weights.size(); ++k) {
        if (weights[k] == 0.0) continue;
        for (std::size_t i = 0; i < g.n; ++i)
            psi[i] = oscillator_eigenfunction(static_cast<int>(k), g.x(i), hbar);
        for (std::size_t i = 0; i < g.n; ++i)
            for (std::size_t j = 0; j < g.n; ++j)
                a(i, j) += weights[k] * psi[i] * psi[j];
    }
    return a;
}

WignerGrid fock_mixture_wigner(const WignerGrid& geometry, const std::vector<double>& weights) {
    WignerGrid out = geometry;
    out.values.assign(out.n_q * out.n_p, 0.0);
    for (std::size_t k = 0; k < weights.size(); ++k) {
        if (weights[k] == 0.0) continue;
        const WignerGrid wk = fock_wigner(geometry, static_cast<int>(k));
        for (std::size_t i = 0; i < out.values.size(); ++i)
            out.values[i] += weights[k] * wk.values[i];
    }
    return out;
}

} // namespace qsc
