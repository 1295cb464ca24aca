#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

// Independent reference evaluation of the two surface integrals by
// composite Simpson with Richardson extrapolation. Everything here is
// written from scratch against the defining formulas. It shares no code
// with the adaptive engine: branch handling, Fresnel coefficients and the
// integration rule are all local to this file, so agreement between the
// two is evidence, not tautology.
//
// Variables are the same substitutions the definitions force on any
// implementation (theta in the propagating sector, u in the evanescent
// one). The theta interval is integrated as two uniform composite-Simpson
// segments, [0, pi/2 - w] and [pi/2 - w, pi/2] with w = 1e-3, because r_p
// crosses from +1 to -1 inside a thin layer at grazing incidence that a
// single uniform grid cannot afford to resolve.

namespace simpson_oracle {

struct Integrals {
    std::complex<double> i_par;
    std::complex<double> i_perp;
};

namespace detail {

using cd = std::complex<double>;

struct Coeffs {
    cd rs, rp;
};

inline Coeffs reflection(double q2, cd eta0, cd eps, bool mirror) {
    if (mirror) return {cd{-1.0, 0.0}, cd{1.0, 0.0}};
    cd eta = std::sqrt(eps - q2);
    if (eta.imag() < 0.0) eta = -eta;
    return {(eta0 - eta) / (eta0 + eta), (eps * eta0 - eta) / (eps * eta0 + eta)};
}

struct PairAccum {
    cd par{0.0, 0.0};
    cd perp{0.0, 0.0};
};

template <typename F>
PairAccum simpson(F&& eval, double a, double b, std::int64_t n) {
    // n intervals (forced even); eval(x, wpar, wperp) accumulates both
    // integrands at once
    if (n % 2 != 0) ++n;
    const double h = (b - a) / static_cast<double>(n);
    PairAccum acc;
    auto add = [&](double x, double w) {
        const auto [fp, fq] = eval(x);
        acc.par += w * fp;
        acc.perp += w * fq;
    };
    add(a, 1.0);
    add(b, 1.0);
    for (std::int64_t i = 1; i < n; ++i) add(a + h * static_cast<double>(i), i % 2 ? 4.0 : 2.0);
    acc.par *= h / 3.0;
    acc.perp *= h / 3.0;
    return acc;
}

struct PairFns {
    cd eps;
    bool mirror;
    double kz;

    std::pair<cd, cd> theta(double th) const {
        const double s = std::sin(th);
        const double x = std::cos(th);
        const auto c = reflection(s * s, cd{x, 0.0}, eps, mirror);
        const cd phase{std::cos(2.0 * x * kz), std::sin(2.0 * x * kz)};
        return {s * phase * (c.rp - x * x * c.rs), s * s * s * phase * c.rs};
    }
    std::pair<cd, cd> evan(double u) const {
        const double q2 = 1.0 + u * u;
        const auto c = reflection(q2, cd{0.0, u}, eps, mirror);
        const double damp = std::exp(-2.0 * u * kz);
        const cd minus_i{0.0, -1.0};
        return {minus_i * damp * (c.rp + u * u * c.rs), minus_i * (q2 * damp) * c.rs};
    }
};

inline PairAccum whole(const PairFns& f, double umax, std::int64_t n_theta,
                       std::int64_t n_layer, std::int64_t n_u) {
    const double half_pi = 1.5707963267948966;
    const double w = 1e-3;
    auto th_main = simpson([&f](double x) { return f.theta(x); }, 0.0, half_pi - w, n_theta);
    auto th_layer =
        simpson([&f](double x) { return f.theta(x); }, half_pi - w, half_pi, n_layer);
    auto ev = simpson([&f](double x) { return f.evan(x); }, 0.0, umax, n_u);
    PairAccum total;
    total.par = th_main.par + th_layer.par + ev.par;
    total.perp = th_main.perp + th_layer.perp + ev.perp;
    return total;
}

}  // namespace detail

/// Reference values of (I_par, I_perp), prefactors included. `panels` is
/// the Simpson interval count per segment at the fine level (>= 1e6 in
/// total across the three segments); the result is Richardson-extrapolated
/// from the fine and half-resolution grids.
inline Integrals spectral_integrals(std::complex<double> eps, bool perfect_mirror, double kz,
                                    double tail_exponent_cutoff = 45.0,
                                    std::int64_t panels = 1 << 20) {
    detail::PairFns f{eps, perfect_mirror, kz};
    const double umax = tail_exponent_cutoff / (2.0 * kz);
    const std::int64_t n_theta = panels / 2;
    const std::int64_t n_layer = panels / 2;
    const std::int64_t n_u = panels;

    const auto fine = detail::whole(f, umax, n_theta, n_layer, n_u);
    const auto coarse = detail::whole(f, umax, n_theta / 2, n_layer / 2, n_u / 2);

    auto richardson = [](std::complex<double> f2, std::complex<double> f1) {
        return (16.0 * f2 - f1) / 15.0;
    };
    Integrals out;
    out.i_par = (3.0 / 8.0) * richardson(fine.par, coarse.par);
    out.i_perp = (3.0 / 4.0) * richardson(fine.perp, coarse.perp);
    return out;
}

}  // namespace simpson_oracle
