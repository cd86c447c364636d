#include "doctest.h"

#include "qsc/generate.hpp"
#include "qsc/mixture.hpp"
#include "qsc/moyal.hpp"
#include "qsc/phase_criteria.hpp"
#include "qsc/wigner.hpp"

#include <cmath>
#include <limits>
#include <vector>

using namespace qsc;

namespace {

WignerGrid box128() { return make_grid(-8.0, 8.0, -8.0, 8.0, 1.0, 128, 128); }

const CriterionReport& find_report(const std::vector<CriterionReport>& reports, CriterionId id) {
    for (const CriterionReport& r : reports)
        if (r.id == id) return r;
    static CriterionReport missing;
    FAIL("criterion report missing: ", to_string(id));
    return missing;
}

const CriterionCheck& find_check(const CriterionReport& r, const std::string& label) {
    for (const CriterionCheck& c : r.checks)
        if (c.label == label) return c;
    static CriterionCheck missing;
    FAIL("check missing: ", label, " in ", to_string(r.id));
    return missing;
}

} // namespace

TEST_CASE("gate conditions read the two integrals off the samples") {
    const WignerGrid geom = box128();
    const ToleranceConfig cfg;

    const WignerGrid w0 = fock_wigner(geom, 0);
    const CriterionReport ok = w_gate_conditions(w0, cfg);
    CHECK(ok.verdict == Verdict::accept);
    CHECK(find_check(ok, "hs_norm_sq").value == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(find_check(ok, "trace_deviation").value <= 1e-9);

    WignerGrid scaled = w0;
    for (double& v : scaled.values) v *= 1.1;
    const CriterionReport tr = w_gate_conditions(scaled, cfg);
    CHECK(tr.verdict == Verdict::reject);
    CHECK(tr.detail == "integral differs from 1");

    // Trace 1 but squared weights 1.96 + 0.16: outside the unit ball.
    const WignerGrid loud = wigner_axpby(1.4, w0, -0.4, fock_wigner(geom, 1));
    const CriterionReport hs = w_gate_conditions(loud, cfg);
    CHECK(hs.verdict == Verdict::reject);
    CHECK(hs.detail == "Hilbert-Schmidt norm exceeds 1");
    CHECK(find_check(hs, "hs_norm_sq").value == doctest::Approx(2.12).epsilon(1e-6));

    WignerGrid broken = w0;
    broken.values[7] = std::numeric_limits<double>::quiet_NaN();
    const CriterionReport fin = w_gate_conditions(broken, cfg);
    CHECK(fin.verdict == Verdict::reject);
    CHECK(fin.detail == "non-finite samples");
}

TEST_CASE("boundary example is rejected by every phase-space criterion") {
    const WignerGrid w = false_state_example(box128());
    const ToleranceConfig cfg;
    const StateVerdict v = run_all_w(w, cfg);

    CHECK(v.overall == Verdict::reject);
    CHECK(v.conflicts.empty());
    CHECK_FALSE(v.is_pure);
    REQUIRE(v.reports.size() == 5);

    CHECK(find_report(v.reports, CriterionId::W_GATES).verdict == Verdict::accept);

    const CriterionReport& ts = find_report(v.reports, CriterionId::W_TRACE_SQRT);
    CHECK(ts.verdict == Verdict::reject);
    const double sum = find_check(ts, "trace_sum").value;
    CHECK(sum == doctest::Approx(5.0 / 3.0).epsilon(5e-3));
    CHECK(find_check(ts, "trace_sum_integral_units").value ==
          doctest::Approx(sum / (2.0 * M_PI)).epsilon(1e-12));
    CHECK(find_check(ts, "mode_count").value == doctest::Approx(3.0).epsilon(1e-12));

    const CriterionReport& bs = find_report(v.reports, CriterionId::W_BINOMIAL);
    CHECK(bs.verdict == Verdict::reject);
    CHECK(bs.detail == "negative weight sum at m = 2");
    CHECK(find_check(bs, "first_negative_sum").value ==
          doctest::Approx(-4.0 / 9.0).epsilon(1e-6));

    CHECK(find_report(v.reports, CriterionId::W_LIMIT).verdict == Verdict::reject);

    const CriterionReport& pu = find_report(v.reports, CriterionId::W_PURE);
    CHECK(pu.verdict == Verdict::reject);
    // || m*m - m || for weights (2/3, 2/3, -1/3) is sqrt(24)/9.
    CHECK(find_check(pu, "star_idempotency_residual").value ==
          doctest::Approx(std::sqrt(24.0) / 9.0).epsilon(1e-3));
}

TEST_CASE("grid weight sums land on the exact rational ladder") {
    const WignerGrid w = false_state_example(box128());
    const StarEngine eng(w);
    const BandSpectrum g =
        band_scale(eng.analyze(w), cplx(2.0 * M_PI * w.hbar, 0.0));

    const int n_max = 8;
    const std::vector<double> t = phase_binomial_sums(eng, g, n_max, 1e6);
    REQUIRE(static_cast<int>(t.size()) == n_max + 1);

    const OrthogonalMixture mix({rational(2, 3), rational(2, 3), rational(-1, 3)});
    const std::vector<rational> exact = mix.binomial_weight_sums(n_max);
    REQUIRE(exact.size() == t.size());
    for (int m = 0; m <= n_max; ++m)
        CHECK(t[m] == doctest::Approx(exact[m].convert_to<double>()).epsilon(1e-6).scale(1.0));
    CHECK(t[0] == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(t[2] == doctest::Approx(-4.0 / 9.0).epsilon(1e-6));
}

TEST_CASE("ground state certifies as a pure state on the grid") {
    const WignerGrid w = fock_wigner(box128(), 0);
    const ToleranceConfig cfg;
    const StateVerdict v = run_all_w(w, cfg);

    CHECK(v.overall == Verdict::accept);
    CHECK(v.is_pure);
    CHECK(v.conflicts.empty());
    for (const CriterionReport& r : v.reports) CHECK(r.verdict == Verdict::accept);

    const CriterionReport& ts = find_report(v.reports, CriterionId::W_TRACE_SQRT);
    CHECK(find_check(ts, "trace_sum").value == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(find_check(ts, "mode_count").value == doctest::Approx(1.0).epsilon(1e-12));

    const CriterionReport& pu = find_report(v.reports, CriterionId::W_PURE);
    CHECK(find_check(pu, "star_idempotency_residual").value <= 1e-3);
}

TEST_CASE("grid verdicts agree with the exact route on both example mixtures") {
    ToleranceConfig cfg;
    cfg.n_max = 40;
    const WignerGrid geom = box128();

    struct Case {
        std::vector<rational> exact_weights;
        std::vector<double> grid_weights;
    };
    const Case cases[] = {
        {{rational(2, 3), rational(2, 3), rational(-1, 3)}, {2.0 / 3.0, 2.0 / 3.0, -1.0 / 3.0}},
        {{rational(1, 2), rational(3, 10), rational(1, 5)}, {0.5, 0.3, 0.2}},
    };

    for (const Case& c : cases) {
        const StateVerdict grid = run_all_w(fock_mixture_wigner(geom, c.grid_weights), cfg);
        const std::vector<CriterionReport> exact =
            mixture_phase_criteria(OrthogonalMixture(c.exact_weights), cfg.n_max);
        REQUIRE(exact.size() == 4);
        for (const CriterionReport& e : exact) {
            const CriterionReport& g = find_report(grid.reports, e.id);
            CHECK_MESSAGE(g.verdict == e.verdict, "criterion ", to_string(e.id));
        }
    }
}

TEST_CASE("proper mixture certifies as a state but not as pure") {
    ToleranceConfig cfg;
    cfg.n_max = 40;
    const WignerGrid w = fock_mixture_wigner(box128(), {0.5, 0.3, 0.2});
    const StateVerdict v = run_all_w(w, cfg);

    CHECK(v.overall == Verdict::accept);
    CHECK_FALSE(v.is_pure);
    CHECK(v.conflicts.empty());

    const CriterionReport& gates = find_report(v.reports, CriterionId::W_GATES);
    CHECK(find_check(gates, "hs_norm_sq").value == doctest::Approx(0.38).epsilon(1e-6));

    const CriterionReport& ts = find_report(v.reports, CriterionId::W_TRACE_SQRT);
    CHECK(ts.verdict == Verdict::accept);
    CHECK(find_check(ts, "mode_count").value == doctest::Approx(3.0).epsilon(1e-12));

    CHECK(find_report(v.reports, CriterionId::W_BINOMIAL).verdict == Verdict::accept);
    CHECK(find_report(v.reports, CriterionId::W_LIMIT).verdict == Verdict::accept);
    CHECK(find_report(v.reports, CriterionId::W_PURE).verdict == Verdict::reject);
}

TEST_CASE("gate rejection short-circuits the expensive criteria") {
    WignerGrid w = fock_wigner(box128(), 0);
    for (double& v : w.values) v *= 2.0;
    const StateVerdict v = run_all_w(w, ToleranceConfig{});
    CHECK(v.overall == Verdict::reject);
    REQUIRE(v.reports.size() == 1);
    CHECK(v.reports[0].id == CriterionId::W_GATES);
}
