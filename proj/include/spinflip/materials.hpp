#pragma once

#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "spinflip/constants.hpp"
#include "spinflip/fresnel.hpp"
#include "spinflip/numeric.hpp"

// Linear response of the slab material at low frequency.
//
// Superconductors follow the two-fluid picture: a London condensate with
// density fraction n_s(T)/n0 = 1 - (T/T_c)^p (Gorter-Casimir, p = 4 by
// default) screens over lambda_L(T) = lambda_L(0) (n_s/n0)^(-1/2), while
// the normal fraction conducts with sigma_n(T) = sigma (T/T_c)^p and skin
// depth delta(T) = sqrt(2/(omega mu0 sigma_n)). The permittivity is
//
//   eps(omega) = 1 - 1/(k lambda_L)^2 + 2i/(k delta)^2 .
//
// Above T_c the London term is absent and eps reduces to the Drude form.
// Internally the two material lengths enter only through 1/lambda_L^2 and
// 1/delta^2; the T = 0 and T >= T_c limits are then plain zeros instead of
// infinities, and eps never sees an inf - inf.

namespace spinflip {

enum class MaterialKind { superconductor, normal_metal, perfect_conductor };

struct Material {
    MaterialKind kind = MaterialKind::perfect_conductor;
    std::string name = "custom";

    // superconductor parameters
    double lambda_L0_m = 0.0;   ///< zero-temperature London length [m]
    double sigma_normal = 0.0;  ///< normal-state conductivity [S/m]
    double tc_K = 0.0;          ///< transition temperature [K]
    double gc_exponent = 4.0;   ///< Gorter-Casimir exponent
    std::optional<double> gap_freq_rad_s;  ///< omega_g = 2 Delta(0)/hbar, if declared

    // normal metal parameter
    double sigma = 0.0;  ///< conductivity [S/m]

    static Material superconductor(double lambda_L0_m, double sigma_normal, double tc_K,
                                   double gc_exponent = 4.0,
                                   std::optional<double> gap_freq_rad_s = std::nullopt) {
        if (!(lambda_L0_m > 0.0))
            throw std::invalid_argument("Material: lambda_L(0) must be > 0");
        if (!(sigma_normal > 0.0)) throw std::invalid_argument("Material: sigma must be > 0");
        if (!(tc_K > 0.0)) throw std::invalid_argument("Material: T_c must be > 0");
        if (!(gc_exponent > 0.0))
            throw std::invalid_argument("Material: Gorter-Casimir exponent must be > 0");
        if (gap_freq_rad_s && !(*gap_freq_rad_s > 0.0))
            throw std::invalid_argument("Material: gap frequency must be > 0");
        Material m;
        m.kind = MaterialKind::superconductor;
        m.lambda_L0_m = lambda_L0_m;
        m.sigma_normal = sigma_normal;
        m.tc_K = tc_K;
        m.gc_exponent = gc_exponent;
        m.gap_freq_rad_s = gap_freq_rad_s;
        return m;
    }

    static Material normal_metal(double sigma) {
        if (!(sigma > 0.0)) throw std::invalid_argument("Material: sigma must be > 0");
        Material m;
        m.kind = MaterialKind::normal_metal;
        m.sigma = sigma;
        return m;
    }

    /// Normal metal specified by its skin depth at a reference frequency;
    /// converts once to sigma = 2/(omega_ref mu0 delta^2).
    static Material normal_metal_from_skin_depth(double delta_m, double reference_frequency_hz) {
        if (!(delta_m > 0.0)) throw std::invalid_argument("Material: skin depth must be > 0");
        if (!(reference_frequency_hz > 0.0))
            throw std::invalid_argument("Material: reference frequency must be > 0");
        const double omega_ref = 2.0 * constants::pi * reference_frequency_hz;
        return normal_metal(2.0 / (omega_ref * constants::mu0 * delta_m * delta_m));
    }

    static Material perfect_conductor() {
        Material m;
        m.kind = MaterialKind::perfect_conductor;
        return m;
    }
};

/// n_s(T)/n0 = 1 - (T/T_c)^p, clamped to [0, 1].
inline double gorter_casimir_fraction(double temperature_K, double tc_K, double exponent = 4.0) {
    if (temperature_K < 0.0)
        throw std::invalid_argument("gorter_casimir_fraction: temperature must be >= 0");
    if (!(tc_K > 0.0)) throw std::invalid_argument("gorter_casimir_fraction: T_c must be > 0");
    if (!(exponent > 0.0))
        throw std::invalid_argument("gorter_casimir_fraction: exponent must be > 0");
    if (temperature_K == 0.0) return 1.0;
    if (temperature_K >= tc_K) return 0.0;
    const double f = 1.0 - std::pow(temperature_K / tc_K, exponent);
    return std::min(1.0, std::max(0.0, f));
}

/// lambda_L(T) = lambda_L(0) / sqrt(n_s/n0); +infinity at and above T_c.
inline double london_length(const Material& m, double temperature_K) {
    if (m.kind != MaterialKind::superconductor)
        throw std::invalid_argument("london_length: material is not a superconductor");
    const double ns = gorter_casimir_fraction(temperature_K, m.tc_K, m.gc_exponent);
    if (ns == 0.0) return infinity;
    return m.lambda_L0_m / std::sqrt(ns);
}

/// sigma_n(T): the dissipative conductivity of the normal fraction.
inline double normal_conductivity(const Material& m, double temperature_K) {
    switch (m.kind) {
        case MaterialKind::superconductor: {
            const double ns = gorter_casimir_fraction(temperature_K, m.tc_K, m.gc_exponent);
            return m.sigma_normal * (1.0 - ns);
        }
        case MaterialKind::normal_metal:
            if (temperature_K < 0.0)
                throw std::invalid_argument("normal_conductivity: temperature must be >= 0");
            return m.sigma;  // static value, no temperature dependence modeled
        case MaterialKind::perfect_conductor:
            throw std::invalid_argument(
                "normal_conductivity: undefined for a perfect conductor");
    }
    throw std::logic_error("normal_conductivity: unreachable");
}

/// delta = sqrt(2/(omega mu0 sigma_n)); +infinity in the lossless limit.
inline double skin_depth(double sigma_n, double omega) {
    if (sigma_n < 0.0) throw std::invalid_argument("skin_depth: sigma_n must be >= 0");
    if (!(omega > 0.0)) throw std::invalid_argument("skin_depth: omega must be > 0");
    if (sigma_n == 0.0) return infinity;
    return std::sqrt(2.0 / (omega * constants::mu0 * sigma_n));
}

namespace detail {

/// The two inverse-square response terms (1/lambda_L^2, 1/delta^2) [1/m^2].
/// Zero encodes an absent term. Not meaningful for a perfect conductor.
struct InverseResponse {
    double inv_lambda_L2 = 0.0;
    double inv_delta2 = 0.0;
};

inline InverseResponse inverse_response(const Material& m, double temperature_K, double omega) {
    if (!(omega > 0.0)) throw std::invalid_argument("inverse_response: omega must be > 0");
    InverseResponse r;
    switch (m.kind) {
        case MaterialKind::superconductor: {
            const double ns = gorter_casimir_fraction(temperature_K, m.tc_K, m.gc_exponent);
            r.inv_lambda_L2 = ns / (m.lambda_L0_m * m.lambda_L0_m);
            r.inv_delta2 = omega * constants::mu0 * (m.sigma_normal * (1.0 - ns)) / 2.0;
            break;
        }
        case MaterialKind::normal_metal:
            r.inv_delta2 = omega * constants::mu0 * m.sigma / 2.0;
            break;
        case MaterialKind::perfect_conductor:
            throw std::invalid_argument("inverse_response: perfect conductor has no finite terms");
    }
    return r;
}

}  // namespace detail

/// eps(omega) with the perfect conductor flagged instead of evaluated.
inline SlabMedium permittivity(const Material& m, double temperature_K, double omega) {
    if (m.kind == MaterialKind::perfect_conductor) return SlabMedium::mirror();
    const auto r = detail::inverse_response(m, temperature_K, omega);
    const double k = omega / constants::c;
    const double k2 = k * k;
    return SlabMedium::dielectric({1.0 - r.inv_lambda_L2 / k2, 2.0 * r.inv_delta2 / k2});
}

/// sigma(T) = 2/(omega mu0 delta^2) + i/(omega mu0 lambda_L^2) [S/m].
/// Consistent with permittivity through eps = 1 + i sigma/(eps0 omega).
inline std::complex<double> optical_conductivity(const Material& m, double temperature_K,
                                                 double omega) {
    if (m.kind == MaterialKind::perfect_conductor)
        throw std::invalid_argument("optical_conductivity: unbounded for a perfect conductor");
    const auto r = detail::inverse_response(m, temperature_K, omega);
    const double scale = 1.0 / (omega * constants::mu0);
    return {2.0 * r.inv_delta2 * scale, r.inv_lambda_L2 * scale};
}

/// Everything the rest of the pipeline needs to know about the slab at one
/// (T, omega) point.
struct MediumResponse {
    double ns_fraction = 0.0;
    double nn_fraction = 0.0;
    double lambda_L_m = infinity;   ///< +inf above T_c and for normal metals; 0 for a mirror
    double sigma_n = 0.0;           ///< +inf for a mirror
    double skin_depth_m = infinity; ///< +inf when sigma_n = 0; 0 for a mirror
    SlabMedium slab;
};

inline MediumResponse medium_response(const Material& m, double temperature_K, double omega) {
    MediumResponse out;
    out.slab = permittivity(m, temperature_K, omega);
    switch (m.kind) {
        case MaterialKind::superconductor: {
            out.ns_fraction = gorter_casimir_fraction(temperature_K, m.tc_K, m.gc_exponent);
            out.nn_fraction = 1.0 - out.ns_fraction;
            out.lambda_L_m = london_length(m, temperature_K);
            out.sigma_n = normal_conductivity(m, temperature_K);
            out.skin_depth_m = skin_depth(out.sigma_n, omega);
            break;
        }
        case MaterialKind::normal_metal:
            out.ns_fraction = 0.0;
            out.nn_fraction = 1.0;
            out.lambda_L_m = infinity;
            out.sigma_n = m.sigma;
            out.skin_depth_m = skin_depth(out.sigma_n, omega);
            break;
        case MaterialKind::perfect_conductor:
            out.ns_fraction = 1.0;
            out.nn_fraction = 0.0;
            out.lambda_L_m = 0.0;
            out.sigma_n = infinity;
            out.skin_depth_m = 0.0;
            break;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Presets: the four slabs of the reference sweep.
// ---------------------------------------------------------------------------

inline const std::vector<Material>& material_presets() {
    static const std::vector<Material> table = [] {
        std::vector<Material> t;
        Material nb = Material::superconductor(35e-9, 2e9, 8.31);
        nb.name = "nb";
        t.push_back(nb);
        // identical slab with the London length rescaled to 3 x 35 nm to
        // mimic the nonlocal correction
        Material nbn = Material::superconductor(105e-9, 2e9, 8.31);
        nbn.name = "nb-nonlocal";
        t.push_back(nbn);
        // normal conductor specified by its 110 um skin depth at 560 kHz
        Material al = Material::normal_metal_from_skin_depth(110e-6, 560e3);
        al.name = "al";
        t.push_back(al);
        Material pc = Material::perfect_conductor();
        pc.name = "perfect";
        t.push_back(pc);
        return t;
    }();
    return table;
}

inline const Material& material_preset(std::string_view name) {
    for (const auto& m : material_presets())
        if (m.name == name) return m;
    throw std::invalid_argument("unknown material preset: " + std::string(name));
}

}  // namespace spinflip
