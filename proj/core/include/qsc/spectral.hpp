#pragma once

#include "qsc/complex_matrix.hpp"

#include <vector>

namespace qsc {

// Full spectral decomposition of a self-adjoint matrix.  Eigenvalues are
// sorted ascending; vectors(i, k) is component i of the k-th eigenvector.
struct Spectrum {
    std::vector<double> values;
    ComplexMatrix vectors;
};

// Cyclic Jacobi rotations on the Hermitian input; iterates sweeps until the
// off-diagonal Frobenius mass is <= 1e-12 * ||a||_F.  Serves as the ground
// truth that the series-based tests are checked against, so it shares no
// code path with them.  Throws std::invalid_argument if the input is not
// self-adjoint within herm_tol.
Spectrum eigh(const ComplexMatrix& a, double herm_tol = 1e-8);

// Smallest eigenvalue >= -tol.
bool psd_oracle(const ComplexMatrix& a, double tol);

// ||a||_1 = Tr sqrt(a^+ a), computed via eigh of a^+ a.  Works for any
// square input, not just self-adjoint ones.
double trace_norm(const ComplexMatrix& a);

// Largest singular value, via eigh of a^+ a.
double spectral_norm_oracle(const ComplexMatrix& a);

// V sqrt(diag) V^+ for positive semidefinite input (negative eigenvalues
// within tol are clamped to zero; beyond tol it throws).
ComplexMatrix sqrt_oracle(const ComplexMatrix& a, double tol = 1e-10);

// Exhaustive positivity test: every principal minor (all 2^dim - 1 index
// subsets) must be >= -tol.  Exponential cost, so dim is capped at 12.
bool principal_minors_psd(const ComplexMatrix& a, double tol);

// Positivity of the quadratic form by diagonally pivoted Cholesky
// elimination: each step either exhibits a vector with <v, a v> < -tol or
// peels off a certified rank-1 positive part.  O(dim^3), no eigensolve.
bool cholesky_psd(const ComplexMatrix& a, double tol);

} // namespace qsc
