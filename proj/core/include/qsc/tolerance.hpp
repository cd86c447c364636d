#pragma once

namespace qsc {

// Knobs shared by every iterative test in the library.  The defaults are the
// ones used throughout the test suite; callers override per field.
struct ToleranceConfig {
    int max_terms = 2000;              // hard cap on series length
    double series_tol = 1e-9;          // term-size threshold for convergence
    double divergence_threshold = 1e6; // term-size threshold for divergence
    double sum_tol = 1e-9;             // |scalar sum - expected| acceptance
    double herm_tol = 1e-10;           // max |a_ij - conj(a_ji)| admitted
    double trace_tol = 1e-9;           // |trace - 1| admitted
    double psd_tol = 1e-10;            // eigenvalue floor used by the oracle
    double pure_tol = 1e-9;            // purity / idempotency residual admitted
    int n_max = 60;                    // depth of the binomial-sum sequence
};

enum class SeriesStatus {
    converged,
    diverged,
    max_terms_reached,
};

// Outcome of driving one series or power sequence to its stopping rule.
struct ConvergenceReport {
    SeriesStatus status = SeriesStatus::max_terms_reached;
    int terms_used = 0;
    double final_residual = 0.0; // norm of the last term / increment examined
};

inline const char* to_string(SeriesStatus s) {
    switch (s) {
        case SeriesStatus::converged: return "converged";
        case SeriesStatus::diverged: return "diverged";
        case SeriesStatus::max_terms_reached: return "max_terms_reached";
    }
    return "unknown";
}

} // namespace qsc
