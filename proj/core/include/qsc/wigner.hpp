#pragma once

#include <cstddef>
#include <vector>

namespace qsc {

// Real phase-space function sampled on a uniform rectangular grid.  The
// sampling is periodic: dq = (q_max - q_min) / n_q and the right edge is the
// left edge of the next period, which is what the spectral star-product
// engine assumes.  For the localized states handled here the box just has to
// be large enough that the wrap-around mass is negligible.
struct WignerGrid {
    double q_min = 0.0, q_max = 0.0;
    double p_min = 0.0, p_max = 0.0;
    double hbar = 1.0;
    std::size_t n_q = 0, n_p = 0;
    std::vector<double> values; // row-major, index iq * n_p + ip

    double dq() const { return (q_max - q_min) / static_cast<double>(n_q); }
    double dp() const { return (p_max - p_min) / static_cast<double>(n_p); }
    double q(std::size_t i) const { return q_min + dq() * static_cast<double>(i); }
    double p(std::size_t j) const { return p_min + dp() * static_cast<double>(j); }

    double& at(std::size_t iq, std::size_t ip) { return values[iq * n_p + ip]; }
    double at(std::size_t iq, std::size_t ip) const { return values[iq * n_p + ip]; }

    bool same_geometry(const WignerGrid& o) const {
        return q_min == o.q_min && q_max == o.q_max && p_min == o.p_min &&
               p_max == o.p_max && hbar == o.hbar && n_q == o.n_q && n_p == o.n_p;
    }
};

WignerGrid make_grid(double q_min, double q_max, double p_min, double p_max,
                     double hbar, std::size_t n_q, std::size_t n_p);

// Plain Riemann sum of the periodic samples; equals the trace of the state.
double wigner_integral(const WignerGrid& w);

// 2 pi hbar * integral(a * b); the trace of the operator product, so it is
// delta_{ij} on orthonormal pure states.
double wigner_overlap(const WignerGrid& a, const WignerGrid& b);

// Oscillator number state n:
//   W_n(q, p) = ((-1)^n / (pi hbar)) L_n(2 r^2 / hbar) exp(-r^2 / hbar),
// r^2 = q^2 + p^2, with the Laguerre polynomial from its three-term
// recurrence.  Uses unit mass and frequency; rescale q and p for others.
WignerGrid fock_wigner(const WignerGrid& geometry, int n);

// a * x + b * y on matching geometries.
WignerGrid wigner_axpby(double a, const WignerGrid& x, double b, const WignerGrid& y);

// The classic false state: weights (2/3, 2/3, -1/3) on the first three
// number states.  Real, normalized, and sitting exactly on the purity
// boundary (Hilbert-Schmidt norm 1), so every norm gate waves it through;
// the series criteria expose it.
WignerGrid false_state_example(const WignerGrid& geometry);

} // namespace qsc
