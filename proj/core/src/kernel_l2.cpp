#include "qsc/kernel_l2.hpp"

#include <cmath>
#include <stdexcept>

namespace qsc {

KernelOperator kernel_from_function(const KernelGrid& g,
                                    const std::function<cplx(double, double)>& f) {
    if (g.n < 2) throw std::invalid_argument("kernel grid needs at least 2 points");
    KernelOperator a(g);
    for (std::size_t i = 0; i < g.n; ++i)
        for (std::size_t j = 0; j < g.n; ++j)
            a(i, j) = f(g.x(i), g.x(j));
    return a;
}

KernelOperator kernel_compose(const KernelOperator& a, const KernelOperator& b) {
    const KernelGrid& g = a.grid();
    if (b.n() != g.n) throw std::invalid_argument("kernel grids differ");
    KernelOperator out(g);
    const double dx = g.dx();
    for (std::size_t i = 0; i < g.n; ++i)
        for (std::size_t k = 0; k < g.n; ++k) {
            const cplx aik = a(i, k) * (g.w(k) * dx);
            if (aik == cplx(0.0, 0.0)) continue;
            for (std::size_t j = 0; j < g.n; ++j)
                out(i, j) += aik * b(k, j);
        }
    return out;
}

cplx kernel_trace(const KernelOperator& a) {
    const KernelGrid& g = a.grid();
    cplx s(0.0, 0.0);
    for (std::size_t i = 0; i < g.n; ++i) s += a(i, i) * g.w(i);
    return s * g.dx();
}

double kernel_hs_norm_sq(const KernelOperator& a) {
    const KernelGrid& g = a.grid();
    double s = 0.0;
    for (std::size_t i = 0; i < g.n; ++i)
        for (std::size_t j = 0; j < g.n; ++j)
            s += std::norm(a(i, j)) * g.w(i) * g.w(j);
    return s * g.dx() * g.dx();
}

double kernel_symmetry_residual(const KernelOperator& a) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.n(); ++i)
        for (std::size_t j = 0; j < a.n(); ++j)
            worst = std::max(worst, std::abs(a(i, j) - std::conj(a(j, i))));
    return worst;
}

bool kernel_is_symmetric(const KernelOperator& a, double tol) {
    return kernel_symmetry_residual(a) <= tol;
}

ComplexMatrix kernel_to_matrix(const KernelOperator& a) {
    const KernelGrid& g = a.grid();
    ComplexMatrix m(g.n);
    const double dx = g.dx();
    for (std::size_t i = 0; i < g.n; ++i) {
        const double wi = std::sqrt(g.w(i));
        for (std::size_t j = 0; j < g.n; ++j)
            m(i, j) = a(i, j) * (wi * std::sqrt(g.w(j)) * dx);
    }
    return m;
}

} // namespace qsc
