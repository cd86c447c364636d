#pragma once

#include "qsc/criteria.hpp"
#include "qsc/moyal.hpp"
#include "qsc/tolerance.hpp"
#include "qsc/wigner.hpp"

#include <vector>

namespace qsc {

// Everything here works directly on the sampled phase-space function under
// the star product; no operator or kernel is ever materialized.  The symbol
// g = 2 pi hbar W multiplies like the state itself, and the normalized
// integral tau(f) = integral(f) / (2 pi hbar) plays the trace, with
// tau(1) = box area / (2 pi hbar) for the identity.

// Necessary conditions: finite samples, integral 1, 2 pi hbar int W^2 <= 1.
CriterionReport w_gate_conditions(const WignerGrid& w, const ToleranceConfig& cfg);

// Square-root series on the star square of the state.  The resummed scalar
// sum equals the sum of |mode| weights: 1 for a state, larger otherwise.
CriterionReport criterion_w_trace_sqrt(const WignerGrid& w, const ToleranceConfig& cfg);

// T_m = integral W (1 - 2 pi hbar W)^{*m} dq dp for m = 0..n_max; every T_m
// must be nonnegative.
CriterionReport criterion_w_binomial(const WignerGrid& w, const ToleranceConfig& cfg);

// ... and they must decay to 0.
CriterionReport criterion_w_limit(const WignerGrid& w, const ToleranceConfig& cfg);

// Star idempotency (2 pi hbar) W * W = W, the pure-state test.
CriterionReport criterion_w_pure(const WignerGrid& w, const ToleranceConfig& cfg);

// The T_m sequence itself, for callers that want the numbers.  symbol must
// be 2 pi hbar times the analyzed state.  Stops early (shorter vector) if
// the iterated powers blow past divergence_threshold.
std::vector<double> phase_binomial_sums(const StarEngine& eng, const BandSpectrum& symbol,
                                        int n_max, double divergence_threshold);

StateVerdict run_all_w(const WignerGrid& w, const ToleranceConfig& cfg);

} // namespace qsc
