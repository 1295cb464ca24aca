#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

// Reflection of the vacuum-slab interface in the angular-spectrum picture.
// All transverse wavenumbers q are measured in units of the vacuum
// wavenumber k. Branch conventions:
//
//   eta0(q) = sqrt(1 - q^2)        real >= 0 for q <= 1, +i sqrt(q^2-1) for
//                                  q > 1, so exp(2 i eta0 k z) stays bounded;
//   eta(q)  = sqrt(eps - q^2)      with Im(eta) >= 0, so the transmitted
//                                  wave decays into the slab.

namespace spinflip {

/// What the reflection formulas see of the slab: either a finite complex
/// permittivity or the perfect-conductor flag, which bypasses the
/// permittivity entirely (r_s = -1, r_p = +1 for every q).
struct SlabMedium {
    std::complex<double> epsilon{1.0, 0.0};  ///< unused when perfect_mirror
    bool perfect_mirror = false;

    static SlabMedium dielectric(std::complex<double> eps) { return {eps, false}; }
    static SlabMedium mirror() { return {{0.0, 0.0}, true}; }
};

/// Longitudinal wavenumber in vacuum, in units of k.
inline std::complex<double> eta0(double q) {
    if (q < 0.0) throw std::invalid_argument("eta0: q must be >= 0");
    if (q <= 1.0) return {std::sqrt((1.0 - q) * (1.0 + q)), 0.0};
    return {0.0, std::sqrt((q - 1.0) * (q + 1.0))};
}

/// Longitudinal wavenumber in the slab, in units of k. Principal square
/// root flipped onto the Im >= 0 sheet.
inline std::complex<double> eta(double q, std::complex<double> epsilon) {
    if (q < 0.0) throw std::invalid_argument("eta: q must be >= 0");
    std::complex<double> w = std::sqrt(epsilon - q * q);
    if (w.imag() < 0.0) w = -w;
    return w;
}

struct FresnelPair {
    std::complex<double> rs;
    std::complex<double> rp;
};

namespace detail {

/// Fresnel coefficients from precomputed longitudinal wavenumbers. The
/// integration routines call this with the exact eta0 of their
/// parametrization (cos(theta) in the propagating sector, i*u in the
/// evanescent one), plus eta0^2 and q^2 as exact reals. The numerators use
/// the algebraic difference forms
///
///   eta0^2 -       eta^2 = 1 - eps
///   eps^2 eta0^2 - eta^2 = (eps - 1)(eps eta0^2 - q^2)
///
/// so a vanishing contrast gives an exact zero instead of the rounding
/// residue of eta0 - eta, and the q -> 1 endpoint stays cancellation-free.
inline FresnelPair fresnel_from(std::complex<double> eta0_val, std::complex<double> eta_val,
                                std::complex<double> epsilon, double eta0_sq, double q2) {
    const std::complex<double> ds = eta0_val + eta_val;
    const std::complex<double> dp = epsilon * eta0_val + eta_val;
    return {(1.0 - epsilon) / (ds * ds),
            (epsilon - 1.0) * (epsilon * eta0_sq - q2) / (dp * dp)};
}

}  // namespace detail

inline FresnelPair fresnel(double q, const SlabMedium& slab) {
    if (q < 0.0) throw std::invalid_argument("fresnel: q must be >= 0");
    if (slab.perfect_mirror) return {{-1.0, 0.0}, {1.0, 0.0}};
    return detail::fresnel_from(eta0(q), eta(q, slab.epsilon), slab.epsilon,
                                q <= 1.0 ? (1.0 - q) * (1.0 + q) : -(q - 1.0) * (q + 1.0),
                                q * q);
}

inline FresnelPair fresnel(double q, std::complex<double> epsilon) {
    return fresnel(q, SlabMedium::dielectric(epsilon));
}

/// One sample of the angular spectrum with everything the integrands need.
struct SpectralPoint {
    double q;
    std::complex<double> eta0;
    std::complex<double> eta;
    std::complex<double> rs;
    std::complex<double> rp;
};

inline SpectralPoint spectral_point(double q, const SlabMedium& slab) {
    SpectralPoint p;
    p.q = q;
    p.eta0 = spinflip::eta0(q);
    p.eta = slab.perfect_mirror ? std::complex<double>{0.0, 0.0} : eta(q, slab.epsilon);
    const FresnelPair f = fresnel(q, slab);
    p.rs = f.rs;
    p.rp = f.rp;
    return p;
}

}  // namespace spinflip
