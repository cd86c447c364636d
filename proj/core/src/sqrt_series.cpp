#include "qsc/sqrt_series.hpp"

#include <stdexcept>

namespace qsc {

std::vector<double> sqrt_series_coefficients(int count) {
    std::vector<double> out;
    out.reserve(count);
    SqrtCoeffStream cs;
    for (int l = 1; l <= count; ++l) {
        out.push_back(cs.coeff());
        cs.advance();
    }
    return out;
}

SqrtSeriesResult sqrt_series(const ComplexMatrix& a, const ToleranceConfig& cfg) {
    const std::size_t n = a.dim();
    ComplexMatrix shifted = a;
    shifted -= ComplexMatrix::identity(n);

    SqrtSeriesResult res{ComplexMatrix::identity(n), {}};
    ComplexMatrix pow = shifted; // (a-1)^l
    SqrtCoeffStream cs;
    for (int l = 1; l <= cfg.max_terms; ++l) {
        ComplexMatrix term = pow;
        term *= cs.coeff();
        res.root += term;

        const double tnorm = col_sum_norm(term);
        res.report.terms_used = l;
        res.report.final_residual = tnorm;
        if (tnorm >= cfg.divergence_threshold) {
            res.report.status = SeriesStatus::diverged;
            return res;
        }
        if (tnorm <= cfg.series_tol) {
            res.report.status = SeriesStatus::converged;
            return res;
        }
        pow = mat_mul(pow, shifted);
        cs.advance();
    }
    res.report.status = SeriesStatus::max_terms_reached;
    return res;
}

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    if (k > n - k) k = n - k;
    double b = 1.0;
    for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
    return b;
}

ComplexMatrix sqrt_series_powers_term(const std::vector<ComplexMatrix>& a_powers, int l) {
    if (l < 1) throw std::invalid_argument("term index must be >= 1");
    if (a_powers.size() < static_cast<std::size_t>(l))
        throw std::invalid_argument("need a_powers up to a^l");

    const std::size_t dim = a_powers[0].dim();
    ComplexMatrix term(dim);
    double sign = 1.0;
    for (int r = 0; r < l; ++r) {
        ComplexMatrix contrib = a_powers[l - r - 1]; // a^{l-r}
        contrib *= sign * binomial(l, r);
        term += contrib;
        sign = -sign;
    }

    // c_l of the sqrt(1+u) expansion
    SqrtCoeffStream cs;
    while (cs.index() < l) cs.advance();
    term *= cs.coeff();
    return term;
}

} // namespace qsc
