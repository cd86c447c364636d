// End-to-end acceptance checks: golden values on the exact rational route and
// the sampled grid route, oracle equivalence over seeded ensembles, series
// fidelity, purity classification, star-product identities, the norm chain,
// and the integral-kernel path.  One line per check; exit code counts the
// failures.

#include "qsc/complex_matrix.hpp"
#include "qsc/criteria.hpp"
#include "qsc/generate.hpp"
#include "qsc/kernel_l2.hpp"
#include "qsc/mixture.hpp"
#include "qsc/moyal.hpp"
#include "qsc/phase_criteria.hpp"
#include "qsc/spectral.hpp"
#include "qsc/sqrt_series.hpp"
#include "qsc/tolerance.hpp"
#include "qsc/wigner.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace qsc;

namespace {

class Check {
public:
    bool ok() const { return ok_; }
    const std::string& diag() const { return diag_; }

    void require(bool cond, const std::string& what) {
        if (!cond) fail(what);
    }
    void near_abs(double got, double want, double tol, const std::string& what) {
        if (!(std::abs(got - want) <= tol)) fail(what + ": got " + fmt(got) + ", want " +
                                                 fmt(want) + " within " + fmt(tol));
    }
    void near_rel(double got, double want, double tol, const std::string& what) {
        if (!(std::abs(got - want) <= tol * std::abs(want)))
            fail(what + ": got " + fmt(got) + ", want " + fmt(want) + " within relative " +
                 fmt(tol));
    }
    void fail(const std::string& what) {
        ok_ = false;
        diag_ += "        " + what + "\n";
    }

private:
    static std::string fmt(double v) {
        std::ostringstream os;
        os.precision(9);
        os << v;
        return os.str();
    }
    bool ok_ = true;
    std::string diag_;
};

const CriterionReport& by_id(const std::vector<CriterionReport>& reports, CriterionId id) {
    for (const CriterionReport& r : reports)
        if (r.id == id) return r;
    static const CriterionReport missing;
    return missing;
}

double check_value(const CriterionReport& r, const std::string& label) {
    for (const CriterionCheck& c : r.checks)
        if (c.label == label) return c.value;
    return std::nan("");
}

WignerGrid square_box(std::size_t n) { return make_grid(-8.0, 8.0, -8.0, 8.0, 1.0, n, n); }

WignerGrid gauss_grid(const WignerGrid& geom, double q0, double p0, double s) {
    WignerGrid w = geom;
    for (std::size_t i = 0; i < w.n_q; ++i)
        for (std::size_t j = 0; j < w.n_p; ++j) {
            const double dq = w.q(i) - q0;
            const double dp = w.p(j) - p0;
            w.at(i, j) = std::exp(-(dq * dq + dp * dp) / s);
        }
    return w;
}

double band_rel_diff(const BandSpectrum& a, const BandSpectrum& b) {
    const BandSpectrum d = band_add(a, band_scale(b, cplx(-1.0, 0.0)));
    const double ref = std::max(std::sqrt(a.l2_sq()), std::sqrt(b.l2_sq()));
    return ref > 0.0 ? std::sqrt(d.l2_sq()) / ref : std::sqrt(d.l2_sq());
}

ComplexMatrix conjugated_spectrum(const std::vector<double>& spec, std::mt19937_64& rng) {
    const ComplexMatrix u = random_unitary(spec.size(), rng);
    ComplexMatrix d = ComplexMatrix::diag(spec);
    return mat_mul(mat_mul(u, d), adjoint(u));
}

ComplexMatrix random_general(std::size_t dim, bool hermitian, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    ComplexMatrix a(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            a(i, j) = cplx(u(rng), u(rng));
    if (!hermitian) return a;
    ComplexMatrix h(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        h(i, i) = cplx(a(i, i).real(), 0.0);
        for (std::size_t j = i + 1; j < dim; ++j) {
            h(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
            h(j, i) = std::conj(h(i, j));
        }
    }
    return h;
}

// 1. Exact rational route on the three-weight boundary mixture: every golden
//    value with zero tolerance.
void exact_route(Check& c) {
    const OrthogonalMixture mix({rational(2, 3), rational(2, 3), rational(-1, 3)});
    c.require(mix.trace() == 1, "trace is exactly 1");
    c.require(mix.hs_norm_sq() == 1, "Hilbert-Schmidt norm is exactly 1");
    c.require(mix.abs_sum() == rational(5, 3),
              "square-root series limit is exactly 5/3 (in units of 1/(2 pi hbar))");

    // Partial sums climb strictly, stay below 5/3, and the resummed tail
    // (three modes' worth) closes the gap.
    const rational s64 = sqrt_trace_partial_exact(mix, 64);
    const rational s256 = sqrt_trace_partial_exact(mix, 256);
    c.require(s64 < s256 && s256 < rational(5, 3), "partial sums climb strictly below 5/3");
    c.require(rational(5, 3) - s256 <= 3 * sqrt_abs_tail_exact(256),
              "resummed tail bounds the remaining gap");

    const std::vector<rational> t = mix.binomial_weight_sums(24);
    c.require(t[0] == 1, "weight sum at m = 0 is exactly 1");
    c.require(t[1] == 0, "weight sum at m = 1 is exactly 0");
    c.require(t[2] == rational(-4, 9), "weight sum at m = 2 is exactly -4/9");
    bool monotone = true;
    for (int m = 2; m + 1 <= 24; ++m)
        if (!(t[m + 1] < t[m] && t[m] < 0)) monotone = false;
    c.require(monotone, "weight sums diverge monotonically negative from m = 2 on");

    const std::vector<CriterionReport> reports = mixture_phase_criteria(mix, 24);
    c.require(by_id(reports, CriterionId::W_TRACE_SQRT).verdict == Verdict::reject,
              "series sum criterion rejects");
    const CriterionReport& bs = by_id(reports, CriterionId::W_BINOMIAL);
    c.require(bs.verdict == Verdict::reject && bs.detail == "negative weight sum at m = 2",
              "weight sum criterion rejects with witness m = 2");
    c.require(by_id(reports, CriterionId::W_LIMIT).verdict == Verdict::reject,
              "limit criterion rejects");
    c.require(by_id(reports, CriterionId::W_PURE).verdict == Verdict::reject,
              "purity criterion rejects");
}

// 2. Same mixture sampled on the default 256 x 256 box, certified through the
//    star-product engine; values and verdicts must match the exact route.
void grid_route(Check& c) {
    const WignerGrid geom = square_box(256);
    const WignerGrid w = false_state_example(geom);
    const double tph = 2.0 * M_PI * geom.hbar;

    c.near_abs(wigner_integral(w), 1.0, 1e-6, "integral of the sampled function");

    const StarEngine eng(geom);
    const BandSpectrum f = eng.analyze(w);
    c.near_rel(eng.integral(eng.star(f, f)), 1.0 / tph, 2e-3,
               "integral of the star square");

    const ToleranceConfig cfg;
    const StateVerdict v = run_all_w(w, cfg);
    const CriterionReport& ts = by_id(v.reports, CriterionId::W_TRACE_SQRT);
    c.near_rel(check_value(ts, "trace_sum_integral_units"), (5.0 / 3.0) / tph, 5e-3,
               "square-root series sum in integral units");

    const BandSpectrum g = band_scale(f, cplx(tph, 0.0));
    const std::vector<double> t = phase_binomial_sums(eng, g, 4, 1e6);
    c.require(t.size() == 5, "weight sums reach m = 4");
    if (t.size() == 5)
        c.near_abs(t[2], -4.0 / 9.0, 5e-3, "weight sum at m = 2");

    const OrthogonalMixture mix({rational(2, 3), rational(2, 3), rational(-1, 3)});
    const std::vector<CriterionReport> exact = mixture_phase_criteria(mix, cfg.n_max);
    for (const CriterionReport& e : exact) {
        const CriterionReport& gr = by_id(v.reports, e.id);
        if (gr.verdict != e.verdict)
            c.fail(std::string("criterion ") + to_string(e.id) +
                   " disagrees with the exact route");
    }
    c.require(v.overall == Verdict::reject, "overall verdict is reject");
}

// 3. 200 seeded self-adjoint trace-1 matrices inside the unit ball, mixed
//    eigenvalue signs: six criteria against the spectral oracle.
void oracle_ensemble(Check& c) {
    const ToleranceConfig cfg;
    const CriterionId ids[] = {CriterionId::FINITE_DEF2,       CriterionId::POWER_SEQ,
                               CriterionId::SQRT_SQUARE_TRACE, CriterionId::TRACE_SQRT_SQUARE,
                               CriterionId::BINOMIAL_SUMS,     CriterionId::BINOMIAL_LIMIT};
    int disagreements = 0;
    for (int i = 0; i < 200; ++i) {
        std::mt19937_64 rng(1000 + i);
        std::size_t dim = 2 + static_cast<std::size_t>(i % 15);
        ComplexMatrix m;
        if (i % 2 == 0) {
            m = random_density(dim, rng);
        } else {
            const std::size_t negatives = (i % 4 == 1) ? 1 : 2;
            if (dim < negatives + 4) dim = negatives + 4;
            m = random_false_density(dim, negatives, rng);
        }
        const Verdict want = psd_oracle(m, 1e-8) ? Verdict::accept : Verdict::reject;
        const StateVerdict v = run_all(m, cfg);
        for (CriterionId id : ids)
            if (by_id(v.reports, id).verdict != want) {
                ++disagreements;
                if (disagreements <= 3)
                    c.fail(std::string("draw ") + std::to_string(i) + ", dim " +
                           std::to_string(dim) + ": " + to_string(id) + " = " +
                           to_string(by_id(v.reports, id).verdict) + ", oracle says " +
                           to_string(want));
            }
    }
    c.require(disagreements == 0,
              std::to_string(disagreements) + " disagreements with the spectral oracle");
}

// 4. Square-root series against the spectral square root on 50 seeded
//    positive matrices with spectrum inside [0.05, 0.99].
void sqrt_fidelity(Check& c) {
    const ToleranceConfig cfg; // max_terms 2000
    for (int i = 0; i < 50; ++i) {
        std::mt19937_64 rng(2000 + i);
        const std::size_t dim = 2 + static_cast<std::size_t>(i % 11);
        std::uniform_real_distribution<double> u(0.05, 0.99);
        std::vector<double> spec(dim);
        for (double& s : spec) s = u(rng);
        const ComplexMatrix a = conjugated_spectrum(spec, rng);

        const SqrtSeriesResult r = sqrt_series(a, cfg);
        if (r.report.status != SeriesStatus::converged) {
            c.fail("draw " + std::to_string(i) + ": series did not converge");
            continue;
        }
        const ComplexMatrix square = mat_mul(r.root, r.root);
        c.near_abs(frobenius_distance(square, a), 0.0, 1e-6,
                   "draw " + std::to_string(i) + ": square of the series root");
        c.near_abs(frobenius_distance(r.root, sqrt_oracle(a, 1e-8)), 0.0, 1e-6,
                   "draw " + std::to_string(i) + ": distance to the spectral root");
    }
}

// 5. Purity classification on projectors, the even two-state mixture, and
//    the sampled oscillator ground state.
void purity_classification(Check& c) {
    const ToleranceConfig cfg;
    for (std::size_t dim : {2, 5, 9, 16}) {
        std::mt19937_64 rng(3000 + dim);
        const ComplexMatrix p = random_pure(dim, rng);
        c.require(check_pure_finite(p, cfg).verdict == Verdict::accept,
                  "projector dim " + std::to_string(dim) + " passes the idempotency test");
        c.require(check_pure_infinite(p, cfg).verdict == Verdict::accept,
                  "projector dim " + std::to_string(dim) + " passes the norm test");
    }

    const ComplexMatrix even = ComplexMatrix::diag({0.5, 0.5});
    c.near_abs(hs_norm_sq(even), 0.5, 1e-12, "even mixture squared norm");
    c.require(check_pure_infinite(even, cfg).verdict == Verdict::reject,
              "even mixture fails the norm test");
    c.require(check_pure_finite(even, cfg).verdict == Verdict::reject,
              "even mixture fails the idempotency test");

    const CriterionReport wp = criterion_w_pure(fock_wigner(square_box(128), 0), cfg);
    c.require(wp.verdict == Verdict::accept, "sampled ground state passes the star test");
    c.near_abs(check_value(wp, "star_idempotency_residual"), 0.0, 1e-3,
               "star idempotency residual of the ground state");
}

// 6. Star-product engine identities at the spec tolerances.
void star_identities(Check& c) {
    const WignerGrid geom = square_box(128);
    const StarEngine eng(geom);
    const double tph = 2.0 * M_PI * geom.hbar;
    const BandSpectrum one = BandSpectrum::constant(cplx(1.0, 0.0));

    const BandSpectrum f = eng.analyze(gauss_grid(geom, 0.3, -0.4, 1.3));
    c.near_abs(band_rel_diff(eng.star(f, one), f), 0.0, 1e-8, "f * 1 = f");
    c.near_abs(band_rel_diff(eng.star(one, f), f), 0.0, 1e-8, "1 * f = f");

    std::mt19937_64 rng(4000);
    std::uniform_real_distribution<double> center(-1.5, 1.5);
    std::uniform_real_distribution<double> width(0.8, 2.0);
    for (int rep = 0; rep < 4; ++rep) {
        const WignerGrid wa = gauss_grid(geom, center(rng), center(rng), width(rng));
        const WignerGrid wb = gauss_grid(geom, center(rng), center(rng), width(rng));
        const BandSpectrum fa = eng.analyze(wa);
        const BandSpectrum fb = eng.analyze(wb);
        c.near_rel(eng.integral(eng.star(fa, fb)), eng.integral_product(fa, fb), 1e-6,
                   "integral of f * g equals integral of f g");
    }

    const BandSpectrum g1 = eng.analyze(gauss_grid(geom, 0.8, 0.0, 1.2));
    const BandSpectrum g2 = eng.analyze(gauss_grid(geom, -0.6, 0.7, 1.0));
    const BandSpectrum g3 = eng.analyze(gauss_grid(geom, 0.1, -1.1, 1.6));
    c.near_abs(band_rel_diff(eng.star(eng.star(g1, g2), g3), eng.star(g1, eng.star(g2, g3))),
               0.0, 1e-5, "associativity defect");

    std::vector<BandSpectrum> fock;
    for (int n = 0; n <= 4; ++n) fock.push_back(eng.analyze(fock_wigner(geom, n)));
    for (int m = 0; m <= 4; ++m)
        for (int n = 0; n <= 4; ++n) {
            const double want = m == n ? 1.0 : 0.0;
            const double got = tph * eng.integral(eng.star(fock[m], fock[n]));
            c.near_abs(got, want, 2e-3,
                       "trace pairing of number states " + std::to_string(m) + "," +
                           std::to_string(n));
        }
}

// 7. Norm chain: largest singular value <= Hilbert-Schmidt <= trace norm.
void norm_chain(Check& c) {
    std::mt19937_64 rng(5000);
    int violations = 0;
    for (int i = 0; i < 200; ++i) {
        const std::size_t dim = 2 + static_cast<std::size_t>(i % 15);
        const ComplexMatrix a = random_general(dim, i % 2 == 0, rng);
        const double spec = spectral_norm_oracle(a);
        const double hs = std::sqrt(hs_norm_sq(a));
        const double tr = trace_norm(a);
        if (hs - spec < -1e-10 || tr - hs < -1e-10) {
            ++violations;
            if (violations <= 3)
                c.fail("draw " + std::to_string(i) + ": " + std::to_string(spec) + " / " +
                       std::to_string(hs) + " / " + std::to_string(tr));
        }
    }
    c.require(violations == 0, std::to_string(violations) + " chain violations");
}

// 8. Integral-kernel path: ground-state projector kernel certifies pure, the
//    three-weight boundary kernel is rejected.
void kernel_route(Check& c) {
    const KernelGrid fine{-7.0, 7.0, 201};
    const KernelOperator k0 = oscillator_mixture_kernel(fine, {1.0}, 1.0);
    c.near_abs(kernel_trace(k0).real(), 1.0, 1e-6, "ground-state kernel trace");

    ToleranceConfig pure_cfg;
    pure_cfg.pure_tol = 1e-4;
    const ComplexMatrix m0 = kernel_to_matrix(k0);
    c.require(gate_conditions(m0, pure_cfg).verdict == Verdict::accept,
              "ground-state kernel passes the gates");
    c.require(check_pure_finite(m0, pure_cfg).verdict == Verdict::accept,
              "ground-state kernel passes the idempotency test");
    c.require(check_pure_infinite(m0, pure_cfg).verdict == Verdict::accept,
              "ground-state kernel passes the norm test");

    const KernelGrid coarse{-7.0, 7.0, 41};
    const KernelOperator kf =
        oscillator_mixture_kernel(coarse, {2.0 / 3.0, 2.0 / 3.0, -1.0 / 3.0}, 1.0);
    const StateVerdict v = run_all(kernel_to_matrix(kf), ToleranceConfig{});
    c.require(v.overall == Verdict::reject, "boundary mixture kernel is rejected");
    c.require(by_id(v.reports, CriterionId::BINOMIAL_SUMS).detail ==
                  "negative weight sum at n = 2",
              "rejection witness sits at n = 2");
}

struct Item {
    const char* label;
    double time_limit_s; // 0 = untimed
    std::function<void(Check&)> body;
};

} // namespace

int main() {
    const std::vector<Item> items = {
        {"exact rational route: boundary mixture golden values", 1.0, exact_route},
        {"sampled grid route: boundary mixture golden values on 256x256", 60.0, grid_route},
        {"matrix ensemble: six criteria match the spectral oracle on 200 draws", 120.0,
         oracle_ensemble},
        {"square-root series matches the spectral root on 50 positive draws", 0.0,
         sqrt_fidelity},
        {"purity classification: projectors, even mixture, sampled ground state", 0.0,
         purity_classification},
        {"star-product identities: unit, trace pairing, associativity, orthonormality", 0.0,
         star_identities},
        {"norm chain holds on 200 random matrices", 0.0, norm_chain},
        {"kernel route: ground state certifies pure, boundary mixture rejected", 0.0,
         kernel_route},
    };

    int failures = 0;
    for (const Item& item : items) {
        Check c;
        const auto t0 = std::chrono::steady_clock::now();
        item.body(c);
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (item.time_limit_s > 0.0 && secs > item.time_limit_s)
            c.fail("runtime " + std::to_string(secs) + " s exceeds the " +
                   std::to_string(item.time_limit_s) + " s budget");
        std::printf("[%s] %-72s (%7.2f s)\n", c.ok() ? "PASS" : "FAIL", item.label, secs);
        if (!c.ok()) {
            std::fputs(c.diag().c_str(), stdout);
            ++failures;
        }
    }
    std::printf("%zu of %zu acceptance checks passed\n", items.size() - failures, items.size());
    return failures;
}
