#pragma once

#include "qsc/complex_matrix.hpp"
#include "qsc/tolerance.hpp"

#include <vector>

namespace qsc {

// Coefficients of sqrt(1+u) = 1 + sum_{l>=1} c_l u^l, generated by the
// ratio recurrence c_1 = 1/2, c_{l+1} = -c_l (2l-1)/(2l+2).  This avoids the
// double-factorial overflow of the closed form.  Signs alternate starting
// from c_1 > 0, and sum_{l>=1} |c_l| = 1 (set u = -1), which gives the tail
// sum_{l>L} |c_l| = 1 - sum_{l<=L} |c_l| in closed form.
class SqrtCoeffStream {
public:
    int index() const { return l_; }
    double coeff() const { return c_; }
    double abs_coeff() const { return c_ < 0 ? -c_ : c_; }
    // sum_{k>l} |c_k|
    double abs_tail() const { return 1.0 - abs_sum_; }

    void advance() {
        c_ *= -(2.0 * l_ - 1.0) / (2.0 * l_ + 2.0);
        ++l_;
        abs_sum_ += abs_coeff();
    }

private:
    int l_ = 1;
    double c_ = 0.5;
    double abs_sum_ = 0.5;
};

std::vector<double> sqrt_series_coefficients(int count);

struct SqrtSeriesResult {
    ComplexMatrix root;        // partial sum at exit
    ConvergenceReport report;
};

// B = 1 + sum_n c_n (a - 1)^n, summed until the column-sum norm of the term
// drops below cfg.series_tol or exceeds cfg.divergence_threshold.  Converges
// exactly when a is positive semidefinite with spectral norm <= 1; on any
// other self-adjoint input the terms eventually blow up, so divergence is
// itself the verdict, never an error.
SqrtSeriesResult sqrt_series(const ComplexMatrix& a, const ToleranceConfig& cfg);

// l-th term of the constant-free form of the same square root,
//   c_l * sum_{r=0}^{l-1} (-1)^r binom(l,r) a^{l-r},
// assembled from precomputed powers a_powers[k] = a^k (k = 1..l).  Only the
// positive powers of a appear, so the term stays trace-class even when the
// ambient identity is not.
ComplexMatrix sqrt_series_powers_term(const std::vector<ComplexMatrix>& a_powers, int l);

double binomial(int n, int k);

} // namespace qsc
