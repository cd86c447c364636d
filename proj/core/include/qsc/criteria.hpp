#pragma once

#include "qsc/complex_matrix.hpp"
#include "qsc/tolerance.hpp"

#include <string>
#include <vector>

namespace qsc {

enum class Verdict { accept, reject, inconclusive };

enum class CriterionId {
    GATES,             // self-adjointness, unit trace, Hilbert-Schmidt bound
    FINITE_DEF2,       // direct positivity (principal minors / spectral)
    PURE_FINITE,       // purity by idempotency
    POWER_SEQ,         // convergence of (1 - m)^n to a projector
    SQRT_SERIES,       // operator square-root series on m converges
    SQRT_SQUARE_TRACE, // trace-norm convergence of the sqrt(m^2) series to m
    TRACE_SQRT_SQUARE, // scalar series Tr sqrt(m^2) = 1
    BINOMIAL_SUMS,     // S_n = Tr[m (1-m)^n] all nonnegative
    BINOMIAL_LIMIT,    // S_n -> 0
    PURE_INFINITE,     // purity by Hilbert-Schmidt norm alone
    W_GATES,           // phase-space gates
    W_TRACE_SQRT,      // scalar star-series = 1/(2 pi hbar)
    W_BINOMIAL,        // T_m sums all nonnegative
    W_LIMIT,           // T_m -> 0
    W_PURE,            // star-idempotency
};

const char* to_string(CriterionId id);
const char* to_string(Verdict v);

struct CriterionCheck {
    std::string label;
    double value = 0.0;
    bool pass = false;
};

struct CriterionReport {
    CriterionId id = CriterionId::GATES;
    Verdict verdict = Verdict::inconclusive;
    std::vector<CriterionCheck> checks;
    ConvergenceReport convergence; // meaningful for the series-driven tests
    std::string detail;            // witness index or short reason
};

struct StateVerdict {
    Verdict overall = Verdict::inconclusive;
    bool is_pure = false;
    std::vector<CriterionReport> reports;
    std::vector<std::string> conflicts; // pairs of disagreeing criterion ids
};

// Necessary conditions every density matrix satisfies and every test below
// presumes: self-adjoint within herm_tol, trace 1 within trace_tol,
// hs_norm_sq <= 1 (+ trace_tol slack).
CriterionReport gate_conditions(const ComplexMatrix& m, const ToleranceConfig& cfg);

// Positivity checked head-on: all principal minors for dim <= 12, the
// spectral oracle beyond.  The reference answer the series tests must match.
CriterionReport check_finite_def2(const ComplexMatrix& m, const ToleranceConfig& cfg);

// Pure state: trace 1, m^2 = m, hs_norm_sq = 1.
CriterionReport check_pure_finite(const ComplexMatrix& m, const ToleranceConfig& cfg);

// Purity via the Hilbert-Schmidt norm alone (no idempotency matrix work);
// the form of the test that survives in infinite dimensions.
CriterionReport check_pure_infinite(const ComplexMatrix& m, const ToleranceConfig& cfg);

// (1 - m)^n must converge to a projector L with L m = 0; any negative mode
// of m makes the powers blow up instead.
CriterionReport criterion_power_sequence(const ComplexMatrix& m, const ToleranceConfig& cfg);

// The square-root series applied to m itself: converges precisely on
// positive semidefinite contractions, so divergence rejects.
CriterionReport criterion_sqrt_series(const ComplexMatrix& m, const ToleranceConfig& cfg);

// Partial sums of the constant-free sqrt(m^2) series must approach m in
// trace norm; for non-positive m they approach |m| instead and the distance
// stalls at twice the negative-part mass.
CriterionReport criterion_sqrt_square_trace(const ComplexMatrix& m, const ToleranceConfig& cfg);

// Scalar form of the same series: Tr sqrt(m^2) must equal 1.
CriterionReport criterion_trace_sqrt_square(const ComplexMatrix& m, const ToleranceConfig& cfg);

// S_n = Tr[m (1-m)^n] >= 0 for n <= n_max.
CriterionReport criterion_binomial_sums(const ComplexMatrix& m, const ToleranceConfig& cfg);

// S_n -> 0: diverges to -infinity for non-states.
CriterionReport criterion_binomial_limit(const ComplexMatrix& m, const ToleranceConfig& cfg);

// Gates, direct positivity, every series criterion and the purity checks,
// aggregated.  Criteria disagreeing accept-vs-reject are recorded as
// conflicts and force an inconclusive overall verdict.
StateVerdict run_all(const ComplexMatrix& m, const ToleranceConfig& cfg);

} // namespace qsc
