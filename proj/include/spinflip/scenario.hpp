#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "spinflip/materials.hpp"
#include "spinflip/transition.hpp"

namespace spinflip {

/// Full input of one rate evaluation: atom transition, atom-surface
/// distance, slab temperature and slab material.
struct Scenario {
    TransitionSpec transition;
    double distance_m;
    double temperature_K;
    Material material;

    Scenario(TransitionSpec transition_, double distance_m_, double temperature_K_,
             Material material_)
        : transition(transition_),
          distance_m(distance_m_),
          temperature_K(temperature_K_),
          material(std::move(material_)) {
        if (!(distance_m > 0.0)) throw std::invalid_argument("Scenario: distance must be > 0");
        if (temperature_K < 0.0)
            throw std::invalid_argument("Scenario: temperature must be >= 0");
    }
};

/// One named regime check. Checks that do not apply to the material are
/// reported with applicable = false and count as passed.
struct ValidityCheck {
    std::string name;
    double ratio = 0.0;
    double threshold = 0.0;
    bool applicable = true;
    bool passed = true;
};

struct ValidityReport {
    std::vector<ValidityCheck> checks;

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

/// Regime report: warnings only, never aborts. A check passes when its
/// ratio is below `factor` (default 0.1). Reported ratios:
///   omega/gap                  if the material declares a gap frequency
///   london-length/distance     superconductors
///   distance/wavelength        always
///   london-length/skin-depth   superconductors
inline ValidityReport validity_report(const Scenario& s, double factor = 0.1) {
    if (!(factor > 0.0)) throw std::invalid_argument("validity_report: factor must be > 0");
    ValidityReport report;
    const double omega = angular_frequency(s.transition);
    const bool sc = s.material.kind == MaterialKind::superconductor;

    auto add = [&](std::string name, double ratio, bool applicable) {
        ValidityCheck c;
        c.name = std::move(name);
        c.ratio = ratio;
        c.threshold = factor;
        c.applicable = applicable;
        c.passed = !applicable || ratio < factor;
        report.checks.push_back(std::move(c));
    };

    const bool has_gap = sc && s.material.gap_freq_rad_s.has_value();
    add("omega/gap", has_gap ? omega / *s.material.gap_freq_rad_s : 0.0, has_gap);

    add("london-length/distance",
        sc ? london_length(s.material, s.temperature_K) / s.distance_m : 0.0, sc);

    add("distance/wavelength", s.distance_m / wavelength(s.transition), true);

    // lambda_L/delta via 1/delta^2, so the sigma_n = 0 limit is an exact 0
    // rather than inf/inf
    double lam_over_delta = 0.0;
    if (sc) {
        const auto r = detail::inverse_response(s.material, s.temperature_K, omega);
        lam_over_delta = london_length(s.material, s.temperature_K) * std::sqrt(r.inv_delta2);
    }
    add("london-length/skin-depth", lam_over_delta, sc);

    return report;
}

}  // namespace spinflip
