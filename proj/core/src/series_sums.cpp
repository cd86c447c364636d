#include "qsc/series_sums.hpp"

#include <cmath>

namespace qsc {

SqrtTraceResult sqrt_trace_series(const std::function<double(int)>& d_of_l,
                                  double identity_trace,
                                  const ToleranceConfig& cfg) {
    SqrtTraceResult res;
    SqrtCoeffStream cs;
    const double settle_tol = 0.25 * cfg.sum_tol;
    int streak = 0;

    double partial = 0.0;
    double ratio = 0.0;
    double tau = 1.0;
    long snapped = 0;

    for (int l = 1; l <= cfg.max_terms; ++l) {
        const double d = d_of_l(l);
        res.report.terms_used = l;
        if (!std::isfinite(d) || std::abs(d) > cfg.divergence_threshold) {
            res.report.status = SeriesStatus::diverged;
            res.report.final_residual = std::abs(d);
            res.raw_partial = partial;
            res.sum = partial;
            return res;
        }

        const double sign = (l % 2 == 0) ? 1.0 : -1.0; // (-1)^l
        ratio = identity_trace - sign * d;
        partial += cs.abs_coeff() * ratio;
        tau = cs.abs_tail();

        snapped = std::lround(std::max(ratio, 0.0));
        const double err_est = std::abs(ratio - static_cast<double>(snapped)) * tau;
        res.report.final_residual = err_est;
        streak = (err_est <= settle_tol) ? streak + 1 : 0;
        if (streak >= 8) {
            res.report.status = SeriesStatus::converged;
            break;
        }
        cs.advance();
    }
    if (res.report.status != SeriesStatus::converged)
        res.report.status = SeriesStatus::max_terms_reached;

    res.raw_partial = partial;
    res.rank_estimate = ratio;
    res.rank_snapped = snapped;
    res.tail_correction = static_cast<double>(snapped) * tau;
    res.sum = partial + res.tail_correction;
    res.sum_lower = partial + std::max(ratio, 0.0) * tau;
    res.sum_upper = partial + identity_trace * tau;
    return res;
}

SqrtTraceResult trace_sqrt_of_square(const ComplexMatrix& m, const ToleranceConfig& cfg) {
    const std::size_t n = m.dim();
    ComplexMatrix shifted = mat_mul(m, m);
    shifted -= ComplexMatrix::identity(n);

    ComplexMatrix pow = ComplexMatrix::identity(n);
    auto d = [&](int) {
        pow = mat_mul(pow, shifted);
        return trace(pow).real();
    };
    return sqrt_trace_series(d, static_cast<double>(n), cfg);
}

std::vector<double> binomial_weight_sums(const ComplexMatrix& m, int n_max) {
    std::vector<double> out;
    out.reserve(n_max + 1);
    ComplexMatrix complement = ComplexMatrix::identity(m.dim());
    complement -= m;
    ComplexMatrix cur = m; // m (1-m)^n
    out.push_back(trace(cur).real());
    for (int n = 1; n <= n_max; ++n) {
        cur = mat_mul(cur, complement);
        out.push_back(trace(cur).real());
    }
    return out;
}

std::vector<double> binomial_weight_sums_reference(const ComplexMatrix& m, int n_max) {
    // power_traces[k] = Tr(m^{k+1})
    std::vector<double> power_traces;
    ComplexMatrix p = m;
    power_traces.push_back(trace(p).real());
    for (int k = 1; k <= n_max; ++k) {
        p = mat_mul(p, m);
        power_traces.push_back(trace(p).real());
    }
    std::vector<double> out;
    out.reserve(n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
        double s = 0.0;
        double sign = 1.0;
        for (int k = 0; k <= n; ++k) {
            s += sign * binomial(n, k) * power_traces[k];
            sign = -sign;
        }
        out.push_back(s);
    }
    return out;
}

} // namespace qsc
