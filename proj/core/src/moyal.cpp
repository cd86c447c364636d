#include "qsc/moyal.hpp"

#include <fftw3.h>

#include <cmath>
#include <stdexcept>

namespace qsc {

double BandSpectrum::max_abs() const {
    double m = 0.0;
    for (const cplx& v : c) m = std::max(m, std::abs(v));
    return m;
}

double BandSpectrum::l2_sq() const {
    double s = 0.0;
    for (const cplx& v : c) s += std::norm(v);
    return s;
}

BandSpectrum band_add(const BandSpectrum& a, const BandSpectrum& b) {
    BandSpectrum out(std::max(a.bq, b.bq), std::max(a.bp, b.bp));
    for (int m = -out.bq; m <= out.bq; ++m)
        for (int n = -out.bp; n <= out.bp; ++n)
            out.ref(m, n) = a.at(m, n) + b.at(m, n);
    return out;
}

BandSpectrum band_scale(const BandSpectrum& a, cplx s) {
    BandSpectrum out = a;
    for (cplx& v : out.c) v *= s;
    return out;
}

StarEngine::StarEngine(const WignerGrid& geometry)
    : n_q_(geometry.n_q), n_p_(geometry.n_p),
      lq_(geometry.q_max - geometry.q_min),
      lp_(geometry.p_max - geometry.p_min),
      hbar_(geometry.hbar), proto_(geometry) {
    if (n_q_ < 4 || n_p_ < 4) throw std::invalid_argument("grid too small for the star engine");
    alpha_ = 2.0 * M_PI * M_PI * hbar_ / (lq_ * lp_);
    proto_.values.clear();
}

double StarEngine::identity_trace() const {
    return box_area() / (2.0 * M_PI * hbar_);
}

BandSpectrum StarEngine::analyze(const WignerGrid& w, double rel_tol) const {
    if (w.n_q != n_q_ || w.n_p != n_p_)
        throw std::invalid_argument("grid does not match the engine geometry");

    const std::size_t total = n_q_ * n_p_;
    fftw_complex* buf = fftw_alloc_complex(total);
    for (std::size_t i = 0; i < total; ++i) {
        buf[i][0] = w.values[i];
        buf[i][1] = 0.0;
    }
    fftw_plan plan = fftw_plan_dft_2d(static_cast<int>(n_q_), static_cast<int>(n_p_),
                                      buf, buf, FFTW_FORWARD, FFTW_ESTIMATE);
    fftw_execute(plan);
    fftw_destroy_plan(plan);

    const double scale = 1.0 / static_cast<double>(total);
    // Signed frequencies stop short of Nyquist, whose sign is ambiguous.
    const int mq = static_cast<int>(n_q_) / 2 - 1;
    const int mp = static_cast<int>(n_p_) / 2 - 1;
    auto coeff = [&](int m, int n) {
        const std::size_t i = static_cast<std::size_t>((m + static_cast<int>(n_q_)) % static_cast<int>(n_q_));
        const std::size_t j = static_cast<std::size_t>((n + static_cast<int>(n_p_)) % static_cast<int>(n_p_));
        const fftw_complex& v = buf[i * n_p_ + j];
        return cplx(v[0] * scale, v[1] * scale);
    };

    double cmax = 0.0;
    for (int m = -mq; m <= mq; ++m)
        for (int n = -mp; n <= mp; ++n)
            cmax = std::max(cmax, std::abs(coeff(m, n)));
    const double floor = cmax * rel_tol;

    int bq = 0, bp = 0;
    for (int m = -mq; m <= mq; ++m)
        for (int n = -mp; n <= mp; ++n)
            if (std::abs(coeff(m, n)) > floor) {
                bq = std::max(bq, std::abs(m));
                bp = std::max(bp, std::abs(n));
            }

    BandSpectrum s(bq, bp);
    for (int m = -bq; m <= bq; ++m)
        for (int n = -bp; n <= bp; ++n)
            s.ref(m, n) = coeff(m, n);
    fftw_free(buf);
    return s;
}

WignerGrid StarEngine::synthesize(const BandSpectrum& s) const {
    if (s.bq >= static_cast<int>(n_q_) / 2 || s.bp >= static_cast<int>(n_p_) / 2)
        throw std::invalid_argument("band exceeds the grid resolution");

    const std::size_t total = n_q_ * n_p_;
    fftw_complex* buf = fftw_alloc_complex(total);
    for (std::size_t i = 0; i < total; ++i) buf[i][0] = buf[i][1] = 0.0;
    for (int m = -s.bq; m <= s.bq; ++m)
        for (int n = -s.bp; n <= s.bp; ++n) {
            const std::size_t i = static_cast<std::size_t>((m + static_cast<int>(n_q_)) % static_cast<int>(n_q_));
            const std::size_t j = static_cast<std::size_t>((n + static_cast<int>(n_p_)) % static_cast<int>(n_p_));
            const cplx v = s.at(m, n);
            buf[i * n_p_ + j][0] += v.real();
            buf[i * n_p_ + j][1] += v.imag();
        }
    fftw_plan plan = fftw_plan_dft_2d(static_cast<int>(n_q_), static_cast<int>(n_p_),
                                      buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE);
    fftw_execute(plan);
    fftw_destroy_plan(plan);

    WignerGrid out = proto_;
    out.values.resize(total);
    for (std::size_t i = 0; i < total; ++i) out.values[i] = buf[i][0];
    fftw_free(buf);
    return out;
}

double StarEngine::synthesis_max_imag(const BandSpectrum& s) const {
    // The imaginary part on the grid is the inverse transform of the
    // antisymmetric part of the coefficients; bound it directly.
    double worst = 0.0;
    for (int m = -s.bq; m <= s.bq; ++m)
        for (int n = -s.bp; n <= s.bp; ++n)
            worst += 0.5 * std::abs(s.at(m, n) - std::conj(s.at(-m, -n)));
    return worst;
}

BandSpectrum StarEngine::star(const BandSpectrum& f, const BandSpectrum& g) const {
    BandSpectrum out(f.bq + g.bq, f.bp + g.bp);

    // Twist phases at integer multiples of alpha, tabulated once.
    const int kmax = out.bp * g.bq + out.bq * g.bp + 1;
    std::vector<cplx> phase(static_cast<std::size_t>(2 * kmax + 1));
    for (int k = -kmax; k <= kmax; ++k)
        phase[static_cast<std::size_t>(k + kmax)] =
            std::exp(cplx(0.0, alpha_ * static_cast<double>(k)));
    auto ph = [&](int k) { return phase[static_cast<std::size_t>(k + kmax)]; };

    for (int mg = -g.bq; mg <= g.bq; ++mg)
        for (int ng = -g.bp; ng <= g.bp; ++ng) {
            const cplx gv = g.at(mg, ng);
            if (gv == cplx(0.0, 0.0)) continue;
            // output (mu, nu) draws f at (mu - mg, nu - ng); twist depends on
            // the output frequency only
            for (int mf = -f.bq; mf <= f.bq; ++mf) {
                const int mu = mf + mg;
                for (int nf = -f.bp; nf <= f.bp; ++nf) {
                    const int nu = nf + ng;
                    out.ref(mu, nu) += f.at(mf, nf) * gv * ph(nu * mg - mu * ng);
                }
            }
        }
    return out;
}

BandSpectrum StarEngine::truncate(const BandSpectrum& s, double rel_tol) const {
    const double floor = s.max_abs() * rel_tol;
    int bq = 0, bp = 0;
    for (int m = -s.bq; m <= s.bq; ++m)
        for (int n = -s.bp; n <= s.bp; ++n)
            if (std::abs(s.at(m, n)) > floor) {
                bq = std::max(bq, std::abs(m));
                bp = std::max(bp, std::abs(n));
            }
    if (bq == s.bq && bp == s.bp) return s;
    BandSpectrum out(bq, bp);
    for (int m = -bq; m <= bq; ++m)
        for (int n = -bp; n <= bp; ++n)
            out.ref(m, n) = s.at(m, n);
    return out;
}

double StarEngine::integral(const BandSpectrum& s) const {
    return box_area() * s.at(0, 0).real();
}

double StarEngine::integral_product(const BandSpectrum& f, const BandSpectrum& g) const {
    const int bq = std::min(f.bq, g.bq);
    const int bp = std::min(f.bp, g.bp);
    cplx acc(0.0, 0.0);
    for (int m = -bq; m <= bq; ++m)
        for (int n = -bp; n <= bp; ++n)
            acc += f.at(m, n) * g.at(-m, -n);
    return (box_area() * acc).real();
}

} // namespace qsc
