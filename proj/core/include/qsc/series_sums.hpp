#pragma once

#include "qsc/complex_matrix.hpp"
#include "qsc/sqrt_series.hpp"
#include "qsc/tolerance.hpp"

#include <functional>
#include <vector>

namespace qsc {

// Result of evaluating the scalar series  sum_l c_l (D_l - N (-1)^l)  with
// D_l = Tr[(A - 1)^l] and N the trace of the identity in the ambient
// algebra.  Per nonzero eigenvalue x of A the l-th term contributes
// |c_l| (1 - (1-x)^l), so the running ratio r_l = N - (-1)^l D_l climbs
// toward the number R of nonzero modes while the mode-dependent part decays
// geometrically.  Once r_l has settled onto an integer, the remaining tail
// equals R * sum_{l>L} |c_l|, which is known in closed form; adding it
// removes the O(L^{-1/2}) truncation error the raw partial sums carry.
struct SqrtTraceResult {
    double sum = 0.0;             // partial sum plus resummed tail
    double raw_partial = 0.0;     // plain truncated partial sum
    double tail_correction = 0.0; // R * tau_L added on top
    double rank_estimate = 0.0;   // r_l at exit
    long rank_snapped = 0;        // integer R used for the tail
    // Two-sided enclosure of the limit, valid whenever the spectrum of A
    // lies in [0, 1] (guaranteed here by the norm gates): the partial sums
    // rise monotonically, the still-missing mass per mode is between
    // r_L tau_L and N tau_L.  Usable even when the mode count never snaps.
    double sum_lower = 0.0;
    double sum_upper = 0.0;
    ConvergenceReport report;
};

// d_of_l(l) must return D_l = Tr[(A - 1)^l] for l = 1, 2, ... in order.
// Computing D_l from matrix (or star-algebra) powers of A - 1 keeps every
// intermediate bounded; expanding it through binomial coefficients instead
// wipes out all significant digits once l is past ~55.
SqrtTraceResult sqrt_trace_series(const std::function<double(int)>& d_of_l,
                                  double identity_trace,
                                  const ToleranceConfig& cfg);

// Tr sqrt(m^2) as the series above with A = m^2, N = dim.  Equals the sum
// of |eigenvalue| over the spectrum when it converges.
SqrtTraceResult trace_sqrt_of_square(const ComplexMatrix& m, const ToleranceConfig& cfg);

// S_n = Tr[m (1 - m)^n] for n = 0..n_max.  This is the alternating binomial
// combination sum_k (-1)^k binom(n,k) Tr(m^{k+1}) evaluated in its stable
// product form.
std::vector<double> binomial_weight_sums(const ComplexMatrix& m, int n_max);

// Reference implementation of the same sums straight from the alternating
// binomial formula and precomputed power traces.  Only trustworthy for
// small n; the unit tests pin the stable path against it there.
std::vector<double> binomial_weight_sums_reference(const ComplexMatrix& m, int n_max);

} // namespace qsc
