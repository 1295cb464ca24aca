#pragma once

#include <stdexcept>

#include "spinflip/constants.hpp"

namespace spinflip {

/// Magnetic dipole transition of the trapped atom.
///
/// The spin weights multiply the parallel and perpendicular surface
/// integrals; the defaults (1, 1) encode the spin orientation with
/// |<f|S_y|i>|^2 = |<f|S_z|i>|^2 and <f|S_x|i> = 0, which is the only
/// trace of the spin matrix elements that survives the half-space
/// reduction.
struct TransitionSpec {
    double frequency_hz;
    double spin_weight_parallel = 1.0;
    double spin_weight_perp = 1.0;

    TransitionSpec(double frequency_hz_, double weight_parallel = 1.0, double weight_perp = 1.0)
        : frequency_hz(frequency_hz_),
          spin_weight_parallel(weight_parallel),
          spin_weight_perp(weight_perp) {
        if (!(frequency_hz > 0.0))
            throw std::invalid_argument("TransitionSpec: frequency must be > 0");
        if (spin_weight_parallel < 0.0 || spin_weight_perp < 0.0)
            throw std::invalid_argument("TransitionSpec: spin weights must be >= 0");
    }
};

/// omega = 2 pi nu [rad/s].
inline double angular_frequency(const TransitionSpec& t) {
    return 2.0 * constants::pi * t.frequency_hz;
}

/// k = omega / c [1/m].
inline double wavenumber(const TransitionSpec& t) {
    return angular_frequency(t) / constants::c;
}

/// lambda = 2 pi / k [m].
inline double wavelength(const TransitionSpec& t) {
    return constants::c / t.frequency_hz;
}

}  // namespace spinflip
