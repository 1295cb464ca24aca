#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>

#include "spinflip/constants.hpp"
#include "spinflip/halfspace.hpp"
#include "spinflip/scenario.hpp"

// Assembly of physical rates and lifetimes. The total transition rate
// decomposes into a free-space part and a slab part,
//
//   Gamma = (Gamma0 + Gamma_slab) (n_th + 1),
//   Gamma0 = mu0 (mu_B g_S)^2 k^3 / (24 pi hbar),
//   Gamma_slab = Gamma0 (I_par + I_perp),
//
// with n_th the thermal photon occupation at the transition frequency.
// Two routes to Gamma_slab are provided: the full spectral quadrature and
// the near-field closed form
//
//   Gamma ~ Gamma0 (n_th + 1) [1 + 2 (3/4)^3 lambda_L(T)^3 / (k^3 delta(T)^2 z^4)]
//
// valid for lambda_L(T) << delta(T) and lambda_L(T) << z << lambda.

namespace spinflip {

enum class RateMethod { full_quadrature, asymptotic };

struct RateBreakdown {
    double gamma0 = 0.0;      ///< free-space rate [1/s]
    std::optional<double> i_par;   ///< Re I_par (full quadrature only)
    std::optional<double> i_perp;  ///< Re I_perp (full quadrature only)
    double gamma_slab = 0.0;  ///< slab-induced rate [1/s]
    double n_th = 0.0;        ///< thermal photon occupation
    double gamma_total = 0.0; ///< (gamma0 + gamma_slab)(n_th + 1) [1/s]
    double tau = 0.0;         ///< 1 / gamma_total [s]
    RateMethod method = RateMethod::full_quadrature;
    double error_estimate = 0.0;  ///< relative, on gamma_total (quadrature only)
    bool converged = true;
};

/// Free-space spin-flip rate at zero temperature [1/s].
inline double free_space_rate(double omega) {
    if (!(omega > 0.0)) throw std::invalid_argument("free_space_rate: omega must be > 0");
    const double k = omega / constants::c;
    const double moment = constants::mu_B * constants::g_S;
    return constants::mu0 * moment * moment / (24.0 * constants::pi * constants::hbar) * k * k *
           k;
}

/// Mean thermal photon number 1/(e^{hbar omega / k_B T} - 1); expm1 keeps
/// the small-argument regime (x ~ 1e-6 at the parameters of interest)
/// at full precision.
inline double thermal_occupation(double omega, double temperature_K) {
    if (!(omega > 0.0)) throw std::invalid_argument("thermal_occupation: omega must be > 0");
    if (temperature_K < 0.0)
        throw std::invalid_argument("thermal_occupation: temperature must be >= 0");
    if (temperature_K == 0.0) return 0.0;
    const double x = constants::hbar * omega / (constants::k_B * temperature_K);
    const double denom = std::expm1(x);
    return std::isinf(denom) ? 0.0 : 1.0 / denom;
}

/// Full evaluation through the spectral quadrature. A non-converged
/// quadrature is reported in the breakdown, not thrown.
inline RateBreakdown full_rate(const Scenario& s, const QuadratureSettings& settings = {}) {
    const double omega = angular_frequency(s.transition);
    const double kz = wavenumber(s.transition) * s.distance_m;
    const MediumResponse medium = medium_response(s.material, s.temperature_K, omega);
    const SlabFactor factor =
        slab_factor(medium.slab, kz, settings, s.transition.spin_weight_parallel,
                    s.transition.spin_weight_perp);

    RateBreakdown out;
    out.method = RateMethod::full_quadrature;
    out.gamma0 = free_space_rate(omega);
    out.i_par = factor.parallel.real();
    out.i_perp = factor.perp.real();
    out.gamma_slab = out.gamma0 * factor.value();
    out.n_th = thermal_occupation(omega, s.temperature_K);
    out.gamma_total = (out.gamma0 + out.gamma_slab) * (out.n_th + 1.0);
    out.tau = 1.0 / out.gamma_total;
    out.error_estimate =
        out.gamma0 * factor.error() * (out.n_th + 1.0) / std::abs(out.gamma_total);
    out.converged = factor.converged();
    return out;
}

/// Near-field closed form. Only defined for a superconductor below T_c;
/// at T = 0 the correction vanishes exactly and the free-space rate is
/// recovered. Regime validity is reported by validity_report, never
/// enforced here.
inline RateBreakdown asymptotic_rate(const Scenario& s) {
    if (s.material.kind != MaterialKind::superconductor)
        throw std::invalid_argument("asymptotic_rate: requires a superconductor");
    if (s.temperature_K >= s.material.tc_K)
        throw std::domain_error("asymptotic_rate: requires T < T_c");

    const double omega = angular_frequency(s.transition);
    const double k = wavenumber(s.transition);
    const auto r = detail::inverse_response(s.material, s.temperature_K, omega);
    // lambda_L^3 via the inverse square so T = 0 stays finite
    const double lambda_L3 = std::pow(r.inv_lambda_L2, -1.5);
    const double z = s.distance_m;
    const double correction =
        2.0 * std::pow(0.75, 3) * r.inv_delta2 * lambda_L3 / (k * k * k * z * z * z * z);

    RateBreakdown out;
    out.method = RateMethod::asymptotic;
    out.gamma0 = free_space_rate(omega);
    out.gamma_slab = out.gamma0 * correction;
    out.n_th = thermal_occupation(omega, s.temperature_K);
    out.gamma_total = (out.gamma0 + out.gamma_slab) * (out.n_th + 1.0);
    out.tau = 1.0 / out.gamma_total;
    out.error_estimate = 0.0;
    out.converged = true;
    return out;
}

/// Cross-check of the closed form against the quadrature route.
struct AsymptoticValidation {
    double relative_deviation = 0.0;  ///< |gamma_asym - gamma_full| / gamma_full
    RateBreakdown full;
    RateBreakdown asymptotic;
    ValidityReport validity;
};

inline AsymptoticValidation validate_asymptotic(const Scenario& s,
                                                const QuadratureSettings& settings = {}) {
    AsymptoticValidation v;
    v.asymptotic = asymptotic_rate(s);
    v.full = full_rate(s, settings);
    v.validity = validity_report(s);
    v.relative_deviation =
        std::abs(v.asymptotic.gamma_total - v.full.gamma_total) / v.full.gamma_total;
    return v;
}

}  // namespace spinflip
