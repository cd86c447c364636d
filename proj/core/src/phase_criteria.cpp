#include "qsc/phase_criteria.hpp"

#include "qsc/series_sums.hpp"

#include <cmath>
#include <sstream>

namespace qsc {

namespace {

constexpr double kPowerTruncTol = 1e-13;

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

double two_pi_hbar(const StarEngine& eng) { return 2.0 * M_PI * eng.hbar(); }

BandSpectrum state_symbol(const StarEngine& eng, const WignerGrid& w) {
    return band_scale(eng.analyze(w), cplx(two_pi_hbar(eng), 0.0));
}

// The discretized algebra carries a cloud of near-zero junk modes, one per
// grid cell the state does not occupy, at spectral-accuracy size.  Asking
// the mode-count snap for better than ~1e-6 just makes it chase that cloud.
ToleranceConfig phase_cfg(const ToleranceConfig& cfg) {
    ToleranceConfig pc = cfg;
    pc.sum_tol = std::max(cfg.sum_tol, 1e-6);
    return pc;
}

CriterionReport w_trace_sqrt_impl(const StarEngine& eng, const BandSpectrum& g,
                                  const ToleranceConfig& cfg) {
    CriterionReport rep;
    rep.id = CriterionId::W_TRACE_SQRT;

    const double tph = two_pi_hbar(eng);
    BandSpectrum z = eng.star(g, g);
    z.ref(0, 0) -= 1.0;
    z = eng.truncate(z, kPowerTruncTol);

    std::vector<BandSpectrum> powers; // powers[i] = z^{*(i+1)}
    powers.push_back(z);
    auto d_of_l = [&](int l) {
        if (l == 1) return eng.integral(z) / tph;
        const int hi = (l + 1) / 2;
        while (static_cast<int>(powers.size()) < hi)
            powers.push_back(eng.truncate(eng.star(powers.back(), z), kPowerTruncTol));
        const int j = l / 2;
        return eng.integral_product(powers[j - 1], powers[l - j - 1]) / tph;
    };

    const SqrtTraceResult res = sqrt_trace_series(d_of_l, eng.identity_trace(), phase_cfg(cfg));
    rep.convergence = res.report;

    if (res.report.status == SeriesStatus::diverged) {
        rep.verdict = Verdict::reject;
        rep.detail = "scalar star series diverges";
    } else if (res.report.status == SeriesStatus::max_terms_reached) {
        // The monotone partial sums bound the limit from below even when
        // the mode count refuses to settle on the discretized algebra.
        if (res.sum_lower > 1.0 + 1e-2) {
            rep.verdict = Verdict::reject;
            rep.detail = "sum of |modes| is at least " + format_double(res.sum_lower) + " > 1";
        } else {
            rep.verdict = Verdict::inconclusive;
            rep.detail = "mode count did not settle";
        }
    } else {
        const double dev = res.sum - 1.0;
        if (std::abs(dev) <= 1e-3) {
            rep.verdict = Verdict::accept;
            rep.detail = "sum of |modes| equals the trace";
        } else if (dev >= 1e-2) {
            rep.verdict = Verdict::reject;
            rep.detail = "sum of |modes| is " + format_double(res.sum) + " > 1";
        } else {
            rep.verdict = Verdict::inconclusive;
            rep.detail = "sum near but not at 1";
        }
    }

    rep.checks.push_back(make_check("trace_sum", res.sum, rep.verdict == Verdict::accept));
    rep.checks.push_back(make_check("trace_sum_integral_units", res.sum / tph, true));
    rep.checks.push_back(make_check("mode_count", static_cast<double>(res.rank_snapped), true));
    return rep;
}

CriterionReport w_binomial_impl(const std::vector<double>& t, int n_max) {
    CriterionReport rep;
    rep.id = CriterionId::W_BINOMIAL;

    // A sign witness beats the later blow-up as the reported reason.
    const double neg_tol = 1e-8;
    double tmin = t.empty() ? 0.0 : t[0];
    for (int m = 0; m < static_cast<int>(t.size()); ++m) {
        if (t[m] < -neg_tol || !std::isfinite(t[m])) {
            rep.verdict = Verdict::reject;
            rep.detail = "negative weight sum at m = " + std::to_string(m);
            rep.checks.push_back(make_check("first_negative_sum", t[m], false));
            return rep;
        }
        if (t[m] < tmin) tmin = t[m];
    }
    if (static_cast<int>(t.size()) < n_max + 1) {
        rep.verdict = Verdict::reject;
        rep.detail = "star powers blow up at m = " + std::to_string(t.size());
        rep.checks.push_back(make_check("depth_reached", static_cast<double>(t.size()) - 1.0, false));
        return rep;
    }
    rep.checks.push_back(make_check("min_weight_sum", tmin, true));
    rep.checks.push_back(make_check("depth", static_cast<double>(n_max), true));
    rep.verdict = Verdict::accept;
    rep.detail = "all weight sums nonnegative up to n_max";
    return rep;
}

CriterionReport w_limit_impl(const std::vector<double>& t, int n_max) {
    CriterionReport rep;
    rep.id = CriterionId::W_LIMIT;

    if (static_cast<int>(t.size()) < n_max + 1) {
        rep.verdict = Verdict::reject;
        rep.detail = "weight sums blow up instead of decaying";
        rep.checks.push_back(make_check("depth_reached", static_cast<double>(t.size()) - 1.0, false));
        return rep;
    }
    const double tail = t[n_max];
    const double mid = t[n_max / 2];
    rep.checks.push_back(make_check("t_at_n_max", tail, true));

    const double lim_tol = 1e-7;
    if (tail < -1e-8 || !std::isfinite(tail)) {
        rep.verdict = Verdict::reject;
        rep.detail = "weight sums head below 0 instead of to 0";
        rep.checks.back().pass = false;
        return rep;
    }
    if (std::abs(tail) > 1e6 || mid < -1e-8) {
        rep.verdict = Verdict::reject;
        rep.detail = "weight sums oscillate and blow up";
        rep.checks.back().pass = false;
        return rep;
    }
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

CriterionReport w_pure_impl(const StarEngine& eng, const BandSpectrum& g,
                            const ToleranceConfig& cfg) {
    CriterionReport rep;
    rep.id = CriterionId::W_PURE;

    const double tph = two_pi_hbar(eng);
    const BandSpectrum diff = band_add(eng.star(g, g), band_scale(g, cplx(-1.0, 0.0)));
    // Hilbert-Schmidt distance of the star square from the state itself.
    const double resid = std::sqrt(std::max(0.0, eng.box_area() * diff.l2_sq() / tph));
    const double tr_err = std::abs(eng.integral(g) / tph - 1.0);

    const double ptol = std::max(1e-7, cfg.pure_tol);
    const bool idem_ok = resid <= ptol;
    const bool tr_ok = tr_err <= std::max(1e-9, cfg.trace_tol);
    rep.checks.push_back(make_check("star_idempotency_residual", resid, idem_ok));
    rep.checks.push_back(make_check("trace_deviation", tr_err, tr_ok));
    rep.verdict = (idem_ok && tr_ok) ? Verdict::accept : Verdict::reject;
    rep.detail = rep.verdict == Verdict::accept ? "star idempotent" : "not star idempotent";
    return rep;
}

} // namespace

CriterionReport w_gate_conditions(const WignerGrid& w, const ToleranceConfig& cfg) {
    CriterionReport rep;
    rep.id = CriterionId::W_GATES;

    bool finite = true;
    double sum = 0.0, sum_sq = 0.0;
    for (double v : w.values) {
        if (!std::isfinite(v)) finite = false;
        sum += v;
        sum_sq += v * v;
    }
    const double cell = w.dq() * w.dp();
    const double tr = sum * cell;
    const double hs = 2.0 * M_PI * w.hbar * sum_sq * cell;
    const double tr_err = std::abs(tr - 1.0);

    const bool tr_ok = finite && tr_err <= cfg.trace_tol;
    const bool hs_ok = finite && hs <= 1.0 + cfg.trace_tol;
    rep.checks.push_back(make_check("finite_samples", finite ? 1.0 : 0.0, finite));
    rep.checks.push_back(make_check("trace_deviation", tr_err, tr_ok));
    rep.checks.push_back(make_check("hs_norm_sq", hs, hs_ok));
    rep.verdict = (finite && tr_ok && hs_ok) ? Verdict::accept : Verdict::reject;
    if (rep.verdict == Verdict::reject) {
        if (!finite) rep.detail = "non-finite samples";
        else if (!tr_ok) rep.detail = "integral differs from 1";
        else rep.detail = "Hilbert-Schmidt norm exceeds 1";
    }
    return rep;
}

std::vector<double> phase_binomial_sums(const StarEngine& eng, const BandSpectrum& symbol,
                                        int n_max, double divergence_threshold) {
    const double tph = two_pi_hbar(eng);
    BandSpectrum h = band_scale(symbol, cplx(-1.0, 0.0));
    h.ref(0, 0) += 1.0; // symbol of 1 - state

    std::vector<double> t;
    t.reserve(static_cast<std::size_t>(n_max) + 1);
    t.push_back(eng.integral(symbol) / tph);
    BandSpectrum hpow = h;
    for (int m = 1; m <= n_max; ++m) {
        if (m > 1) {
            hpow = eng.truncate(eng.star(hpow, h), kPowerTruncTol);
            if (!std::isfinite(hpow.max_abs()) || hpow.max_abs() > divergence_threshold) break;
        }
        t.push_back(eng.integral_product(symbol, hpow) / tph);
        if (!std::isfinite(t.back()) || std::abs(t.back()) > divergence_threshold) {
            t.pop_back();
            break;
        }
    }
    return t;
}

CriterionReport criterion_w_trace_sqrt(const WignerGrid& w, const ToleranceConfig& cfg) {
    const StarEngine eng(w);
    return w_trace_sqrt_impl(eng, state_symbol(eng, w), cfg);
}

CriterionReport criterion_w_binomial(const WignerGrid& w, const ToleranceConfig& cfg) {
    const StarEngine eng(w);
    const std::vector<double> t =
        phase_binomial_sums(eng, state_symbol(eng, w), cfg.n_max, cfg.divergence_threshold);
    return w_binomial_impl(t, cfg.n_max);
}

CriterionReport criterion_w_limit(const WignerGrid& w, const ToleranceConfig& cfg) {
    const StarEngine eng(w);
    const std::vector<double> t =
        phase_binomial_sums(eng, state_symbol(eng, w), cfg.n_max, cfg.divergence_threshold);
    return w_limit_impl(t, cfg.n_max);
}

CriterionReport criterion_w_pure(const WignerGrid& w, const ToleranceConfig& cfg) {
    const StarEngine eng(w);
    return w_pure_impl(eng, state_symbol(eng, w), cfg);
}

StateVerdict run_all_w(const WignerGrid& w, const ToleranceConfig& cfg) {
    StateVerdict out;

    CriterionReport gates = w_gate_conditions(w, cfg);
    const bool gates_ok = gates.verdict == Verdict::accept;
    out.reports.push_back(std::move(gates));
    if (!gates_ok) {
        out.overall = Verdict::reject;
        return out;
    }

    const StarEngine eng(w);
    const BandSpectrum g = state_symbol(eng, w);
    out.reports.push_back(w_trace_sqrt_impl(eng, g, cfg));
    const std::vector<double> t = phase_binomial_sums(eng, g, cfg.n_max, cfg.divergence_threshold);
    out.reports.push_back(w_binomial_impl(t, cfg.n_max));
    out.reports.push_back(w_limit_impl(t, cfg.n_max));

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

    CriterionReport pure = w_pure_impl(eng, g, cfg);
    out.is_pure = out.overall == Verdict::accept && pure.verdict == Verdict::accept;
    out.reports.push_back(std::move(pure));
    return out;
}

} // namespace qsc
