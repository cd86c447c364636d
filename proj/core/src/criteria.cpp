#include "qsc/criteria.hpp"

#include "qsc/series_sums.hpp"
#include "qsc/spectral.hpp"
#include "qsc/sqrt_series.hpp"

#include <cmath>
#include <sstream>

namespace qsc {

const char* to_string(CriterionId id) {
    switch (id) {
        case CriterionId::GATES: return "gates";
        case CriterionId::FINITE_DEF2: return "direct-positivity";
        case CriterionId::PURE_FINITE: return "purity-idempotent";
        case CriterionId::POWER_SEQ: return "power-limit";
        case CriterionId::SQRT_SERIES: return "sqrt-series";
        case CriterionId::SQRT_SQUARE_TRACE: return "sqrt-square-distance";
        case CriterionId::TRACE_SQRT_SQUARE: return "trace-sqrt-square";
        case CriterionId::BINOMIAL_SUMS: return "binomial-sums";
        case CriterionId::BINOMIAL_LIMIT: return "binomial-limit";
        case CriterionId::PURE_INFINITE: return "purity-norm";
        case CriterionId::W_GATES: return "w-gates";
        case CriterionId::W_TRACE_SQRT: return "w-trace-sqrt";
        case CriterionId::W_BINOMIAL: return "w-binomial-sums";
        case CriterionId::W_LIMIT: return "w-binomial-limit";
        case CriterionId::W_PURE: return "w-purity";
    }
    return "unknown";
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::accept: return "accept";
        case Verdict::reject: return "reject";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "unknown";
}

namespace {

CriterionCheck make_check(const std::string& label, double value, bool pass) {
    CriterionCheck c;
    c.label = label;
    c.value = value;
    c.pass = pass;
    return c;
}

std::string format_double(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

} // namespace

CriterionReport gate_conditions(const ComplexMatrix& m, const ToleranceConfig& cfg) {
    CriterionReport rep;
    rep.id = CriterionId::GATES;

    double herm = 0.0;
    const std::size_t n = m.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const cplx d = m(i, j) - std::conj(m(j, i));
            herm = std::max(herm, std::abs(d));
        }
    const cplx tr = trace(m);
    const double tr_err = std::abs(tr - cplx(1.0, 0.0));
    const double hs2 = hs_norm_sq(m);

    const bool herm_ok = herm <= cfg.herm_tol;
    const bool tr_ok = tr_err <= cfg.trace_tol;
    // ||m||_2 <= ||m||_1 = 1 for genuine states; allow slack at the boundary
    // so pure states sitting exactly on it are not lost to roundoff.
    const bool hs_ok = hs2 <= 1.0 + cfg.trace_tol;

    rep.checks.push_back(make_check("self_adjoint_residual", herm, herm_ok));
    rep.checks.push_back(make_check("trace_deviation", tr_err, tr_ok));
    rep.checks.push_back(make_check("hs_norm_sq", hs2, hs_ok));
    rep.verdict = (herm_ok && tr_ok && hs_ok) ? Verdict::accept : Verdict::reject;
    if (rep.verdict == Verdict::reject) {
        if (!herm_ok) rep.detail = "not self-adjoint";
        else if (!tr_ok) rep.detail = "trace differs from 1";
        else rep.detail = "Hilbert-Schmidt norm exceeds 1";
    }
    return rep;
}

CriterionReport check_finite_def2(const ComplexMatrix& m, const ToleranceConfig& cfg) {
    CriterionReport rep;
    rep.id = CriterionId::FINITE_DEF2;

    // Quadratic-form positivity by elimination; every principal minor is
    // checked explicitly where that is affordable.
    if (m.dim() <= 12) {
        const bool ok = principal_minors_psd(m, cfg.psd_tol);
        rep.checks.push_back(make_check("principal_minors_nonneg", ok ? 1.0 : 0.0, ok));
        rep.verdict = ok ? Verdict::accept : Verdict::reject;
        rep.detail = ok ? "all principal minors nonnegative" : "negative principal minor";
    } else {
        const bool ok = cholesky_psd(m, cfg.psd_tol);
        rep.checks.push_back(make_check("pivoted_factorization", ok ? 1.0 : 0.0, ok));
        rep.verdict = ok ? Verdict::accept : Verdict::reject;
        rep.detail = ok ? "quadratic form factorizes positively"
                        : "vector with negative expectation found";
    }
    return rep;
}

CriterionReport check_pure_finite(const ComplexMatrix& m, const ToleranceConfig& cfg) {
    CriterionReport rep;
    rep.id = CriterionId::PURE_FINITE;

    const double tr_err = std::abs(trace(m) - cplx(1.0, 0.0));
    const double idem = frobenius_distance(mat_mul(m, m), m);
    const double hs_err = std::abs(hs_norm_sq(m) - 1.0);

    const bool tr_ok = tr_err <= cfg.trace_tol;
    const bool idem_ok = idem <= cfg.pure_tol;
    const bool hs_ok = hs_err <= cfg.pure_tol;

    rep.checks.push_back(make_check("trace_deviation", tr_err, tr_ok));
    rep.checks.push_back(make_check("idempotency_residual", idem, idem_ok));
    rep.checks.push_back(make_check("hs_norm_sq_deviation", hs_err, hs_ok));
    rep.verdict = (tr_ok && idem_ok && hs_ok) ? Verdict::accept : Verdict::reject;
    rep.detail = rep.verdict == Verdict::accept ? "projector of rank 1" : "not idempotent";
    return rep;
}

CriterionReport check_pure_infinite(const ComplexMatrix& m, const ToleranceConfig& cfg) {
    CriterionReport rep;
    rep.id = CriterionId::PURE_INFINITE;

    const double tr_err = std::abs(trace(m) - cplx(1.0, 0.0));
    const double hs_err = std::abs(hs_norm_sq(m) - 1.0);
    const bool tr_ok = tr_err <= cfg.trace_tol;
    const bool hs_ok = hs_err <= cfg.pure_tol;

    rep.checks.push_back(make_check("trace_deviation", tr_err, tr_ok));
    rep.checks.push_back(make_check("hs_norm_sq_deviation", hs_err, hs_ok));
    rep.verdict = (tr_ok && hs_ok) ? Verdict::accept : Verdict::reject;
    rep.detail = rep.verdict == Verdict::accept ? "unit Hilbert-Schmidt norm" : "norm below 1";
    return rep;
}

CriterionReport criterion_power_sequence(const ComplexMatrix& m, const ToleranceConfig& cfg) {
    CriterionReport rep;
    rep.id = CriterionId::POWER_SEQ;

    // (1 - m)^n is driven through n = 2^k by repeated squaring: on a spectrum
    // inside [0, 1] the powers collapse onto the projector L over ker m
    // double-exponentially fast, while any negative mode of m blows them up
    // at the same rate.  The limit existing at all is the test.
    const std::size_t n = m.dim();
    ComplexMatrix p = ComplexMatrix::identity(n);
    p -= m;

    const double step_tol = std::max(cfg.series_tol, 1e-11);
    const int max_squarings = 64;
    int k = 0;
    double delta = 0.0;
    bool settled = false;
    for (; k < max_squarings; ++k) {
        ComplexMatrix next = mat_mul(p, p);
        const double nrm = col_sum_norm(next);
        if (!std::isfinite(nrm) || nrm > cfg.divergence_threshold) {
            rep.verdict = Verdict::reject;
            rep.convergence.status = SeriesStatus::diverged;
            rep.convergence.terms_used = k + 1;
            rep.convergence.final_residual = nrm;
            rep.detail = "powers of (1 - m) diverge";
            rep.checks.push_back(make_check("power_norm", nrm, false));
            return rep;
        }
        delta = frobenius_distance(next, p);
        p = std::move(next);
        if (delta <= step_tol) {
            settled = true;
            ++k;
            break;
        }
    }
    rep.convergence.terms_used = k;
    rep.convergence.final_residual = delta;
    if (!settled) {
        rep.verdict = Verdict::inconclusive;
        rep.convergence.status = SeriesStatus::max_terms_reached;
        rep.detail = "power sequence still moving";
        return rep;
    }
    rep.convergence.status = SeriesStatus::converged;

    // The limit must be a projector that annihilates m.
    const double check_tol = std::sqrt(cfg.series_tol);
    const double idem = frobenius_distance(mat_mul(p, p), p);
    const double ortho = frobenius_norm(mat_mul(p, m));
    const double kdim = trace(p).real();
    const double kdim_err = std::abs(kdim - std::round(kdim));

    const bool idem_ok = idem <= check_tol;
    const bool ortho_ok = ortho <= check_tol;
    const bool kdim_ok = kdim_err <= 1e-6 && kdim >= -1e-6;

    rep.checks.push_back(make_check("projector_residual", idem, idem_ok));
    rep.checks.push_back(make_check("annihilates_m", ortho, ortho_ok));
    rep.checks.push_back(make_check("kernel_dim", kdim, kdim_ok));
    rep.verdict = (idem_ok && ortho_ok && kdim_ok) ? Verdict::accept : Verdict::inconclusive;
    rep.detail = "limit projector of rank " + format_double(std::round(kdim));
    return rep;
}

CriterionReport criterion_sqrt_series(const ComplexMatrix& m, const ToleranceConfig& cfg) {
    CriterionReport rep;
    rep.id = CriterionId::SQRT_SERIES;

    const SqrtSeriesResult res = sqrt_series(m, cfg);
    rep.convergence = res.report;

    switch (res.report.status) {
        case SeriesStatus::diverged:
            rep.verdict = Verdict::reject;
            rep.detail = "square-root series diverges";
            return rep;
        case SeriesStatus::max_terms_reached:
            rep.verdict = Verdict::inconclusive;
            rep.detail = "series undecided at term cap (spectrum near 0)";
            return rep;
        case SeriesStatus::converged:
            break;
    }

    const double resid = frobenius_distance(mat_mul(res.root, res.root), m);
    const double rtol = std::sqrt(cfg.series_tol) * std::max(1.0, frobenius_norm(m));
    const bool ok = resid <= rtol;
    rep.checks.push_back(make_check("root_squared_residual", resid, ok));
    rep.verdict = ok ? Verdict::accept : Verdict::inconclusive;
    rep.detail = "series sum squares back to the input";
    return rep;
}

CriterionReport criterion_sqrt_square_trace(const ComplexMatrix& m, const ToleranceConfig& cfg) {
    CriterionReport rep;
    rep.id = CriterionId::SQRT_SQUARE_TRACE;

    // Partial sums B_n of the square-root series on m^2 approach |m| from
    // above, so e_n = ||B_n - m||_1 decreases onto 2 * (mass of the negative
    // modes).  What mode u still owes at depth n is at most tau_n (1-u)^n,
    // and the power trace hands over sum_i (1-u_i)^n for free, so every
    // checkpoint yields a certified enclosure [e - beta, e] of the limit.
    const std::size_t dim = m.dim();
    const double n_id = static_cast<double>(dim);
    ComplexMatrix shifted = mat_mul(m, m);
    for (std::size_t i = 0; i < dim; ++i) shifted(i, i) -= 1.0;

    const int cap = 4 * cfg.max_terms;
    const int stride = std::max(1, std::min(512, cap / 4));
    const double accept_tol = 3e-3;
    const double reject_floor = 2e-2;

    ComplexMatrix acc(dim);
    ComplexMatrix pow = ComplexMatrix::identity(dim);
    SqrtCoeffStream cs;
    double e = 0.0, beta = 1.0;
    for (int l = 1; l <= cap; ++l) {
        pow = mat_mul(pow, shifted);
        const double pnorm = col_sum_norm(pow);
        if (!std::isfinite(pnorm) || pnorm > cfg.divergence_threshold) {
            rep.verdict = Verdict::reject;
            rep.convergence.status = SeriesStatus::diverged;
            rep.convergence.terms_used = l;
            rep.convergence.final_residual = pnorm;
            rep.detail = "series on m^2 diverges";
            return rep;
        }
        ComplexMatrix term = pow;
        term *= cplx(cs.coeff(), 0.0);
        acc += term;

        const double sign = (l % 2 == 0) ? 1.0 : -1.0;
        const double u_mass = sign * trace(pow).real(); // sum_i (1 - u_i)^l
        const double tau = cs.abs_tail();
        beta = tau * std::min(std::max(u_mass, 0.0), n_id);

        const bool at_checkpoint = (l % stride == 0 && beta <= 0.05) || l == cap;
        if (at_checkpoint) {
            ComplexMatrix b = acc;
            for (std::size_t i = 0; i < dim; ++i) b(i, i) += 1.0;
            b -= m;
            e = trace_norm(b);
            rep.convergence.terms_used = l;
            rep.convergence.final_residual = beta;
            if (e <= accept_tol) {
                rep.convergence.status = SeriesStatus::converged;
                rep.checks.push_back(make_check("trace_distance", e, true));
                rep.checks.push_back(make_check("tail_bound", beta, true));
                rep.verdict = Verdict::accept;
                rep.detail = "trace distance decays to 0 within the certified tail";
                return rep;
            }
            if (e - beta >= reject_floor) {
                rep.convergence.status = SeriesStatus::converged;
                rep.checks.push_back(make_check("trace_distance", e, false));
                rep.checks.push_back(make_check("tail_bound", beta, true));
                rep.checks.push_back(make_check("negative_mass", 0.5 * (e - beta), false));
                rep.verdict = Verdict::reject;
                rep.detail = "trace distance stalls at " + format_double(e) +
                             " (twice the negative mass)";
                return rep;
            }
        }
        cs.advance();
    }

    rep.convergence.status = SeriesStatus::max_terms_reached;
    rep.checks.push_back(make_check("trace_distance", e, false));
    rep.checks.push_back(make_check("tail_bound", beta, false));
    rep.verdict = Verdict::inconclusive;
    rep.detail = "distance enclosure still straddles the thresholds at the term cap";
    return rep;
}

CriterionReport criterion_trace_sqrt_square(const ComplexMatrix& m, const ToleranceConfig& cfg) {
    CriterionReport rep;
    rep.id = CriterionId::TRACE_SQRT_SQUARE;

    const SqrtTraceResult res = trace_sqrt_of_square(m, cfg);
    rep.convergence = res.report;

    if (res.report.status == SeriesStatus::diverged) {
        rep.verdict = Verdict::reject;
        rep.detail = "scalar series diverges";
    } else if (res.report.status == SeriesStatus::max_terms_reached) {
        // The mode count never snapped (spectrum has modes too close to 0),
        // but the monotone partial sums still enclose the limit rigorously.
        if (res.sum_lower > 1.0 + 1e-3) {
            rep.verdict = Verdict::reject;
            rep.detail = "sum of |modes| is at least " + format_double(res.sum_lower) + " > 1";
        } else if (res.sum_upper <= 1.0 + 1e-2) {
            rep.verdict = Verdict::accept;
            rep.detail = "sum of |modes| bounded onto 1";
        } else {
            rep.verdict = Verdict::inconclusive;
            rep.detail = "mode count did not settle";
        }
    } else {
        const double dev = res.sum - 1.0;
        if (std::abs(dev) <= 1e-6) {
            rep.verdict = Verdict::accept;
            rep.detail = "sum of |modes| equals the trace";
        } else if (dev >= 1e-3) {
            rep.verdict = Verdict::reject;
            rep.detail = "sum of |modes| is " + format_double(res.sum) + " > 1";
        } else {
            rep.verdict = Verdict::inconclusive;
            rep.detail = "sum near but not at 1";
        }
    }

    rep.checks.push_back(make_check("trace_sum", res.sum, rep.verdict == Verdict::accept));
    rep.checks.push_back(make_check("mode_count", static_cast<double>(res.rank_snapped), true));
    rep.checks.push_back(make_check("sum_lower_bound", res.sum_lower, true));
    rep.checks.push_back(make_check("sum_upper_bound", res.sum_upper, true));
    return rep;
}

CriterionReport criterion_binomial_sums(const ComplexMatrix& m, const ToleranceConfig& cfg) {
    CriterionReport rep;
    rep.id = CriterionId::BINOMIAL_SUMS;

    const std::vector<double> s = binomial_weight_sums(m, cfg.n_max);
    const double neg_tol = 1e-10;
    double smin = s[0];
    for (int n = 0; n < static_cast<int>(s.size()); ++n) {
        // the first certifying witness ends the scan; for a bad spectrum the
        // sums always cross 0 before they blow up
        if (s[n] < -neg_tol || !std::isfinite(s[n])) {
            rep.verdict = Verdict::reject;
            rep.detail = "negative weight sum at n = " + std::to_string(n);
            rep.checks.push_back(make_check("first_negative_sum", s[n], false));
            return rep;
        }
        if (std::abs(s[n]) > cfg.divergence_threshold) {
            rep.verdict = Verdict::reject;
            rep.detail = "weight sums blow up at n = " + std::to_string(n);
            rep.checks.push_back(make_check("s_n", s[n], false));
            return rep;
        }
        if (s[n] < smin) smin = s[n];
    }
    rep.checks.push_back(make_check("min_weight_sum", smin, true));
    rep.checks.push_back(make_check("depth", static_cast<double>(cfg.n_max), true));
    rep.verdict = Verdict::accept;
    rep.detail = "all weight sums nonnegative up to n_max";
    return rep;
}

CriterionReport criterion_binomial_limit(const ComplexMatrix& m, const ToleranceConfig& cfg) {
    CriterionReport rep;
    rep.id = CriterionId::BINOMIAL_LIMIT;

    const std::vector<double> s = binomial_weight_sums(m, cfg.n_max);
    const double tail = s[cfg.n_max];
    const double mid = s[cfg.n_max / 2];
    rep.checks.push_back(make_check("s_at_n_max", tail, true));

    const double lim_tol = 1e-8;
    if (tail < -1e-10 || !std::isfinite(tail)) {
        rep.verdict = Verdict::reject;
        rep.detail = "weight sums head below 0 instead of to 0";
        rep.checks.back().pass = false;
        return rep;
    }
    if (std::abs(tail) > cfg.divergence_threshold || mid < -1e-10) {
        rep.verdict = Verdict::reject;
        rep.detail = "weight sums oscillate and blow up";
        rep.checks.back().pass = false;
        return rep;
    }
    // On a genuine spectrum every mode decays geometrically, so either the
    // tail is already negligible or it still shrinks by a fixed factor per
    // doubling of n.
    const double ratio = mid > lim_tol ? tail / mid : 0.0;
    const bool decays = tail <= lim_tol || ratio <= 0.75;
    rep.checks.push_back(make_check("decay_ratio", ratio, decays));
    if (decays) {
        rep.verdict = Verdict::accept;
        rep.detail = "weight sums decay to 0";
    } else {
        rep.verdict = Verdict::inconclusive;
        rep.detail = "decay too slow to call at n_max";
    }
    return rep;
}

StateVerdict run_all(const ComplexMatrix& m, const ToleranceConfig& cfg) {
    StateVerdict out;

    CriterionReport gates = gate_conditions(m, cfg);
    const bool gates_ok = gates.verdict == Verdict::accept;
    out.reports.push_back(std::move(gates));
    if (!gates_ok) {
        out.overall = Verdict::reject;
        return out;
    }

    out.reports.push_back(check_finite_def2(m, cfg));
    out.reports.push_back(criterion_power_sequence(m, cfg));
    out.reports.push_back(criterion_sqrt_series(m, cfg));
    out.reports.push_back(criterion_sqrt_square_trace(m, cfg));
    out.reports.push_back(criterion_trace_sqrt_square(m, cfg));
    out.reports.push_back(criterion_binomial_sums(m, cfg));
    out.reports.push_back(criterion_binomial_limit(m, cfg));

    int accepts = 0, rejects = 0;
    for (std::size_t i = 1; i < out.reports.size(); ++i) {
        if (out.reports[i].verdict == Verdict::accept) ++accepts;
        if (out.reports[i].verdict == Verdict::reject) ++rejects;
    }
    for (std::size_t i = 1; i < out.reports.size(); ++i)
        for (std::size_t j = i + 1; j < out.reports.size(); ++j) {
            const Verdict a = out.reports[i].verdict;
            const Verdict b = out.reports[j].verdict;
            if ((a == Verdict::accept && b == Verdict::reject) ||
                (a == Verdict::reject && b == Verdict::accept)) {
                out.conflicts.push_back(std::string(to_string(out.reports[i].id)) +
                                        " vs " + to_string(out.reports[j].id));
            }
        }

    if (!out.conflicts.empty()) out.overall = Verdict::inconclusive;
    else if (rejects > 0) out.overall = Verdict::reject;
    else if (accepts > 0) out.overall = Verdict::accept;
    else out.overall = Verdict::inconclusive;

    CriterionReport pure_f = check_pure_finite(m, cfg);
    out.is_pure = out.overall == Verdict::accept && pure_f.verdict == Verdict::accept;
    out.reports.push_back(std::move(pure_f));
    out.reports.push_back(check_pure_infinite(m, cfg));
    return out;
}

} // namespace qsc
