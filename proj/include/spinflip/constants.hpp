#pragma once

// Fundamental physical constants, SI units, frozen to the CODATA 2018
// recommended values. Values are fixed at compile time so that every
// computed rate and golden output is reproducible bit for bit.

namespace spinflip::constants {

/// pi to double precision.
inline constexpr double pi = 3.141592653589793238462643383279502884;

/// Speed of light in vacuum [m/s] (exact).
inline constexpr double c = 299792458.0;

/// Vacuum magnetic permeability [N/A^2].
inline constexpr double mu0 = 1.25663706212e-6;

/// Reduced Planck constant [J s].
inline constexpr double hbar = 1.054571817e-34;

/// Boltzmann constant [J/K] (exact).
inline constexpr double k_B = 1.380649e-23;

/// Bohr magneton [J/T].
inline constexpr double mu_B = 9.2740100783e-24;

/// Electron spin g-factor, stored as exactly 2.
inline constexpr double g_S = 2.0;

/// Electron mass [kg].
inline constexpr double m_e = 9.1093837015e-31;

/// Elementary charge [C] (exact).
inline constexpr double e_charge = 1.602176634e-19;

/// Vacuum permittivity [F/m], derived as 1/(mu0 c^2).
inline constexpr double eps0 = 1.0 / (mu0 * c * c);

}  // namespace spinflip::constants

namespace spinflip {

/// Constant table as a value object, for callers that want to pass the
/// whole set around. Immutable by convention; codata2018() is the only
/// supplier.
struct PhysicalConstants {
    double mu0;       ///< vacuum permeability [N/A^2]
    double hbar;      ///< reduced Planck constant [J s]
    double k_B;       ///< Boltzmann constant [J/K]
    double mu_B;      ///< Bohr magneton [J/T]
    double g_S;       ///< electron spin g-factor
    double c;         ///< speed of light [m/s]
    double m_e;       ///< electron mass [kg]
    double e_charge;  ///< elementary charge [C]
};

constexpr PhysicalConstants codata2018() {
    return PhysicalConstants{constants::mu0,  constants::hbar, constants::k_B,
                             constants::mu_B, constants::g_S,  constants::c,
                             constants::m_e,  constants::e_charge};
}

}  // namespace spinflip
