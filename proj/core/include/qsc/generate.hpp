#pragma once

#include "qsc/complex_matrix.hpp"
#include "qsc/kernel_l2.hpp"
#include "qsc/wigner.hpp"

#include <cstddef>
#include <random>
#include <vector>

namespace qsc {

// All generators draw from a caller-owned engine, so a fixed seed fixes the
// output bit for bit.

ComplexMatrix random_unitary(std::size_t dim, std::mt19937_64& rng);

// Density matrix with spectrum drawn flat in [0.5, 2] / normalization, so
// every eigenvalue is bounded away from 0 and from the tolerance floor, then
// conjugated by a random unitary.
ComplexMatrix random_density(std::size_t dim, std::mt19937_64& rng);

// Rank-1 projector onto a random direction.
ComplexMatrix random_pure(std::size_t dim, std::mt19937_64& rng);

// Self-adjoint, trace 1, strictly inside the unit Hilbert-Schmidt ball, yet
// with `negatives` modes in [-0.2, -0.05]: passes every gate and is rejected
// by positivity alone.  Requires negatives <= 2 and dim >= negatives + 4,
// which is what keeps the Hilbert-Schmidt bound safe for every draw; the
// mode floor 0.05 keeps the series criteria decisive within their term caps.
ComplexMatrix random_false_density(std::size_t dim, std::size_t negatives,
                                   std::mt19937_64& rng);

// Oscillator eigenfunction (unit mass and frequency) via the normalized
// Hermite recurrence; stable for any reachable n.
double oscillator_eigenfunction(int n, double x, double hbar);

// Kernel sum_k w_k psi_k(x) psi_k(y) of an oscillator-eigenfunction
// combination; weights may be negative.
KernelOperator oscillator_mixture_kernel(const KernelGrid& g,
                                         const std::vector<double>& weights, double hbar);

// Phase-space function of the same combination.
WignerGrid fock_mixture_wigner(const WignerGrid& geometry, const std::vector<double>& weights);

} // namespace qsc
