#include "qsc/wigner.hpp"

#include <cmath>
#include <stdexcept>

namespace qsc {

WignerGrid make_grid(double q_min, double q_max, double p_min, double p_max,
                     double hbar, std::size_t n_q, std::size_t n_p) {
    if (q_max <= q_min || p_max <= p_min)
        throw std::invalid_argument("empty phase-space box");
    if (n_q < 2 || n_p < 2)
        throw std::invalid_argument("grid needs at least 2 points per axis");
    if (hbar <= 0.0)
        throw std::invalid_argument("hbar must be positive");
    WignerGrid w;
    w.q_min = q_min;
    w.q_max = q_max;
    w.p_min = p_min;
    w.p_max = p_max;
    w.hbar = hbar;
    w.n_q = n_q;
    w.n_p = n_p;
    w.values.assign(n_q * n_p, 0.0);
    return w;
}

double wigner_integral(const WignerGrid& w) {
    double s = 0.0;
    for (double v : w.values) s += v;
    return s * w.dq() * w.dp();
}

double wigner_overlap(const WignerGrid& a, const WignerGrid& b) {
    if (!a.same_geometry(b)) throw std::invalid_argument("grid geometries differ");
    double s = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i) s += a.values[i] * b.values[i];
    return 2.0 * M_PI * a.hbar * s * a.dq() * a.dp();
}

WignerGrid fock_wigner(const WignerGrid& geometry, int n) {
    if (n < 0) throw std::invalid_argument("negative oscillator level");
    WignerGrid w = geometry;
    w.values.assign(w.n_q * w.n_p, 0.0);
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    const double norm = sign / (M_PI * w.hbar);
    for (std::size_t iq = 0; iq < w.n_q; ++iq) {
        const double q = w.q(iq);
        for (std::size_t ip = 0; ip < w.n_p; ++ip) {
            const double p = w.p(ip);
            const double x = 2.0 * (q * q + p * p) / w.hbar;
            // L_n(x) by (k+1) L_{k+1} = (2k+1-x) L_k - k L_{k-1}
            double lk = 1.0, lkm1 = 0.0;
            for (int k = 0; k < n; ++k) {
                const double lkp1 = ((2.0 * k + 1.0 - x) * lk - k * lkm1) / (k + 1.0);
                lkm1 = lk;
                lk = lkp1;
            }
            w.at(iq, ip) = norm * lk * std::exp(-0.5 * x);
        }
    }
    return w;
}

WignerGrid wigner_axpby(double a, const WignerGrid& x, double b, const WignerGrid& y) {
    if (!x.same_geometry(y)) throw std::invalid_argument("grid geometries differ");
    WignerGrid out = x;
    for (std::size_t i = 0; i < out.values.size(); ++i)
        out.values[i] = a * x.values[i] + b * y.values[i];
    return out;
}

WignerGrid false_state_example(const WignerGrid& geometry) {
    const WignerGrid w0 = fock_wigner(geometry, 0);
    const WignerGrid w1 = fock_wigner(geometry, 1);
    const WignerGrid w2 = fock_wigner(geometry, 2);
    WignerGrid out = wigner_axpby(2.0 / 3.0, w0, 2.0 / 3.0, w1);
    return wigner_axpby(1.0, out, -1.0 / 3.0, w2);
}

} // namespace qsc
