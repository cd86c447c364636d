#pragma once

#include "qsc/complex_matrix.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace qsc {

// Uniform grid on [x_min, x_max] with both endpoints included, as used for
// sampling integral kernels.  Integrals over it use trapezoid weights.
struct KernelGrid {
    double x_min = -1.0;
    double x_max = 1.0;
    std::size_t n = 2;

    double dx() const { return (x_max - x_min) / static_cast<double>(n - 1); }
    double x(std::size_t i) const { return x_min + dx() * static_cast<double>(i); }
    // Trapezoid weight, without the dx factor.
    double w(std::size_t i) const { return (i == 0 || i + 1 == n) ? 0.5 : 1.0; }
};

// A(x, y) sampled on grid x grid, row index = first argument.
class KernelOperator {
public:
    KernelOperator() = default;
    explicit KernelOperator(const KernelGrid& g)
        : grid_(g), values_(g.n * g.n, cplx(0.0, 0.0)) {}

    const KernelGrid& grid() const { return grid_; }
    std::size_t n() const { return grid_.n; }

    cplx& operator()(std::size_t i, std::size_t j) { return values_[i * grid_.n + j]; }
    cplx operator()(std::size_t i, std::size_t j) const { return values_[i * grid_.n + j]; }

    std::vector<cplx>& values() { return values_; }
    const std::vector<cplx>& values() const { return values_; }

private:
    KernelGrid grid_;
    std::vector<cplx> values_;
};

KernelOperator kernel_from_function(const KernelGrid& g,
                                    const std::function<cplx(double, double)>& f);

// (A o B)(x, y) = integral A(x, z) B(z, y) dz by trapezoid quadrature.
KernelOperator kernel_compose(const KernelOperator& a, const KernelOperator& b);

// integral A(x, x) dx.
cplx kernel_trace(const KernelOperator& a);

// double integral |A(x, y)|^2 dx dy.
double kernel_hs_norm_sq(const KernelOperator& a);

// max |A(x, y) - conj(A(y, x))|.
double kernel_symmetry_residual(const KernelOperator& a);

bool kernel_is_symmetric(const KernelOperator& a, double tol);

// Quadrature image of the kernel as a matrix:  M = sqrt(W) A sqrt(W) dx with
// W the diagonal of trapezoid weights.  The similarity keeps M self-adjoint
// for symmetric kernels while Tr M^k reproduces the iterated-kernel traces,
// so every matrix criterion applies verbatim to M.
ComplexMatrix kernel_to_matrix(const KernelOperator& a);

} // namespace qsc
