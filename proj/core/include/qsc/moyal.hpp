#pragma once

#include "qsc/complex_matrix.hpp"
#include "qsc/wigner.hpp"

#include <vector>

namespace qsc {

// Fourier coefficients of a phase-space function on the periodic box,
// restricted to the frequency band |m| <= bq, |n| <= bp.  Index m runs over
// the q direction, n over p.  Smooth localized states have spectra that
// decay like Gaussians, so a modest band carries everything above roundoff.
struct BandSpectrum {
    int bq = 0, bp = 0;
    std::vector<cplx> c; // (2 bq + 1) x (2 bp + 1), row-major in m

    BandSpectrum() : c(1, cplx(0.0, 0.0)) {}
    BandSpectrum(int bq_, int bp_)
        : bq(bq_), bp(bp_),
          c(static_cast<std::size_t>(2 * bq_ + 1) * (2 * bp_ + 1), cplx(0.0, 0.0)) {}

    static BandSpectrum constant(cplx v) {
        BandSpectrum s;
        s.c[0] = v;
        return s;
    }

    cplx at(int m, int n) const {
        if (m < -bq || m > bq || n < -bp || n > bp) return cplx(0.0, 0.0);
        return c[static_cast<std::size_t>(m + bq) * (2 * bp + 1) + (n + bp)];
    }
    cplx& ref(int m, int n) {
        return c[static_cast<std::size_t>(m + bq) * (2 * bp + 1) + (n + bp)];
    }

    double max_abs() const;
    double l2_sq() const; // sum |c|^2; by Parseval, integral(|f|^2) / box area
};

BandSpectrum band_add(const BandSpectrum& a, const BandSpectrum& b);
BandSpectrum band_scale(const BandSpectrum& a, cplx s);

// Star-product algebra of functions on the periodic phase-space box.  On
// plane waves with integer frequencies (m, n) and (m', n') the product is
// the plane wave at (m + m', n + n') times the twist
//     exp(i alpha (n m' - m n')),   alpha = 2 pi^2 hbar / (L_q L_p),
// so in Fourier space the product is a twisted convolution.  It is evaluated
// with true integer frequency arithmetic on the bands (never modulo the grid),
// which keeps two identities exact that the criteria lean on:
//   f * 1 = f, and integral(f * g) = integral(f g).
class StarEngine {
public:
    explicit StarEngine(const WignerGrid& geometry);

    double hbar() const { return hbar_; }
    double box_area() const { return lq_ * lp_; }
    double alpha() const { return alpha_; }
    // Trace of the identity in this algebra: box area / (2 pi hbar).
    double identity_trace() const;

    // Forward DFT of the samples, truncated to the smallest band whose
    // complement is below rel_tol * max |coefficient|.
    BandSpectrum analyze(const WignerGrid& w, double rel_tol = 1e-13) const;
    // Inverse transform onto the grid geometry; imaginary parts are dropped
    // (synthesis_max_imag reports how large they were).
    WignerGrid synthesize(const BandSpectrum& s) const;
    double synthesis_max_imag(const BandSpectrum& s) const;

    BandSpectrum star(const BandSpectrum& f, const BandSpectrum& g) const;
    BandSpectrum truncate(const BandSpectrum& s, double rel_tol) const;

    // integral f dq dp = box area * c[0,0].
    double integral(const BandSpectrum& s) const;
    // integral f g dq dp = box area * sum_{m,n} f[m,n] g[-m,-n].
    double integral_product(const BandSpectrum& f, const BandSpectrum& g) const;

private:
    std::size_t n_q_, n_p_;
    double lq_, lp_, hbar_, alpha_;
    WignerGrid proto_; // geometry template for synthesize
};

} // namespace qsc
