#pragma once

#include "qsc/criteria.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace qsc {

using rational = boost::multiprecision::cpp_rational;

// A combination sum_i c_i P_i of pairwise orthogonal rank-1 projectors,
// tracked through its weight vector alone.  Orthogonality collapses the
// whole star (or operator) algebra onto the weights:  the m-th power has
// weights c_i^m, traces are plain sums, and everything stays inside exact
// rational arithmetic.  This is the independent ground truth the sampled
// phase-space route is tested against; the two share no code.
class OrthogonalMixture {
public:
    explicit OrthogonalMixture(std::vector<rational> weights);

    const std::vector<rational>& weights() const { return weights_; }

    rational trace() const;       // sum c_i
    rational hs_norm_sq() const;  // sum c_i^2
    rational abs_sum() const;     // sum |c_i|; the square-root series limit

    // Weights of the m-th power, c_i^m.  In phase-space units the m-th star
    // power of the sampled function carries an extra 1 / (2 pi hbar)^{m-1}.
    std::vector<rational> power_weights(int m) const;

    // T_m = sum_i c_i (1 - c_i)^m.
    rational binomial_weight_sum(int m) const;
    std::vector<rational> binomial_weight_sums(int n_max) const;

    bool is_state() const; // trace 1 and no negative weight
    bool is_pure() const;  // a single weight equal to 1

private:
    std::vector<rational> weights_;
};

// The four phase-space criteria evaluated on the weights in exact rational
// arithmetic, verdicts decided by comparisons alone: the square-root series
// limit is sum |c_i| (1 in units of 1/(2 pi hbar) for a state), T_m must
// stay nonnegative and decay, and purity means a single unit weight.  The
// grid route must reproduce these verdicts on the sampled function.
std::vector<CriterionReport> mixture_phase_criteria(const OrthogonalMixture& mix, int m_max);

// Exact square-root series data.  coeff(l) is the l-th series coefficient
// c_l as a rational; abs_tail(L) = sum_{l>L} |c_l| = 1 - sum_{l<=L} |c_l|.
rational sqrt_coeff_exact(int l);
rational sqrt_abs_tail_exact(int L);

// Exact partial sum, through order L, of the constant-free square-root
// series for the trace of sqrt(mixture^2):
//   S_L = sum_{l<=L} c_l sum_i [ (c_i^2 - 1)^l - (-1)^l ].
// Terms are nonnegative, S_L increases toward abs_sum(), and adding the
// resummed tail R * abs_tail(L) (R = number of nonzero weights) closes the
// gap geometrically.
rational sqrt_trace_partial_exact(const OrthogonalMixture& mix, int L);

} // namespace qsc
