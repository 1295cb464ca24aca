#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "spinflip/materials.hpp"
#include "spinflip/transition.hpp"

using namespace spinflip;
using Catch::Matchers::WithinRel;

namespace {
const double kOmega560 = angular_frequency(TransitionSpec(560e3));
const double kK560 = kOmega560 / constants::c;
}  // namespace

TEST_CASE("Gorter-Casimir fraction") {
    CHECK(gorter_casimir_fraction(0.0, 8.31) == 1.0);
    CHECK(gorter_casimir_fraction(8.31, 8.31) == 0.0);
    CHECK(gorter_casimir_fraction(10.0, 8.31) == 0.0);
    CHECK(gorter_casimir_fraction(4.155, 8.31, 4.0) == 0.9375);  // 1 - (1/2)^4
    CHECK_THAT(gorter_casimir_fraction(4.155, 8.31, 2.0), WithinRel(0.75, 1e-15));
    CHECK_THROWS_AS(gorter_casimir_fraction(-1.0, 8.31), std::invalid_argument);
    CHECK_THROWS_AS(gorter_casimir_fraction(1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(gorter_casimir_fraction(1.0, 8.31, 0.0), std::invalid_argument);
}

TEST_CASE("London length") {
    const Material nb = material_preset("nb");
    CHECK(london_length(nb, 0.0) == 35e-9);
    CHECK_THAT(london_length(nb, 8.31 / 2.0),
               WithinRel(35e-9 / std::sqrt(0.9375), 1e-15));
    CHECK(std::isinf(london_length(nb, 8.31)));
    CHECK(std::isinf(london_length(nb, 12.0)));
    CHECK_THROWS_AS(london_length(material_preset("al"), 4.2), std::invalid_argument);
    CHECK_THROWS_AS(london_length(material_preset("perfect"), 4.2), std::invalid_argument);
}

TEST_CASE("normal conductivity") {
    const Material nb = material_preset("nb");
    CHECK(normal_conductivity(nb, 8.31) == 2e9);
    CHECK(normal_conductivity(nb, 0.0) == 0.0);
    const double t4 = std::pow(4.0 / 8.31, 4.0);
    CHECK_THAT(normal_conductivity(nb, 4.0), WithinRel(2e9 * t4, 1e-14));
    CHECK_THAT(normal_conductivity(nb, 4.0), WithinRel(1.0736577562185424e8, 1e-12));

    const Material al = material_preset("al");
    CHECK(normal_conductivity(al, 0.0) == normal_conductivity(al, 300.0));
    CHECK_THROWS_AS(normal_conductivity(material_preset("perfect"), 4.2),
                    std::invalid_argument);
}

TEST_CASE("skin depth") {
    // sigma = 2e9 S/m at 560 kHz gives the ~15 um reference value
    const double delta = skin_depth(2e9, kOmega560);
    CHECK_THAT(delta, WithinRel(1.5038728544042083e-5, 1e-12));
    CHECK(std::abs(delta - 15e-6) < 0.04 * 15e-6);
    CHECK(std::isinf(skin_depth(0.0, kOmega560)));
    CHECK_THROWS_AS(skin_depth(-1.0, kOmega560), std::invalid_argument);
    CHECK_THROWS_AS(skin_depth(1.0, 0.0), std::invalid_argument);
}

TEST_CASE("aluminium preset inverts its defining skin depth") {
    const Material al = material_preset("al");
    CHECK_THAT(al.sigma, WithinRel(3.7382372929154730e7, 1e-12));
    CHECK_THAT(skin_depth(al.sigma, kOmega560), WithinRel(110e-6, 1e-12));
}

TEST_CASE("permittivity of the superconductor") {
    const Material nb = material_preset("nb");

    SECTION("T = 0: pure London screening, no dissipation") {
        const SlabMedium m = permittivity(nb, 0.0, kOmega560);
        REQUIRE_FALSE(m.perfect_mirror);
        CHECK_THAT(m.epsilon.real(), WithinRel(-5.9261075147266248e18, 1e-12));
        CHECK(m.epsilon.imag() == 0.0);
        // agrees with 1 - 1/(k lambda_L0)^2 evaluated directly
        const double kl = kK560 * 35e-9;
        CHECK_THAT(m.epsilon.real(), WithinRel(1.0 - 1.0 / (kl * kl), 1e-13));
    }

    SECTION("T = T_c: pure Drude form") {
        const SlabMedium m = permittivity(nb, 8.31, kOmega560);
        CHECK(m.epsilon.real() == 1.0);  // London term absent, exactly
        CHECK_THAT(m.epsilon.imag(), WithinRel(6.4196798516148438e13, 1e-12));
        const double delta = skin_depth(2e9, kOmega560);
        CHECK_THAT(m.epsilon.imag(), WithinRel(2.0 / (kK560 * kK560 * delta * delta), 1e-13));
    }

    SECTION("vanishing response tends to vacuum") {
        const Material faint = Material::normal_metal(1e-14);
        const SlabMedium m = permittivity(faint, 4.2, kOmega560);
        CHECK(m.epsilon.real() == 1.0);
        CHECK(m.epsilon.imag() < 1e-8);
    }

    SECTION("perfect conductor is flagged, not evaluated") {
        const SlabMedium m = permittivity(material_preset("perfect"), 4.2, kOmega560);
        CHECK(m.perfect_mirror);
    }
}

TEST_CASE("optical conductivity") {
    const Material nb = material_preset("nb");

    SECTION("T = 0 is purely imaginary") {
        const auto s = optical_conductivity(nb, 0.0, kOmega560);
        CHECK(s.real() == 0.0);
        CHECK_THAT(s.imag(),
                   WithinRel(1.0 / (kOmega560 * constants::mu0 * 35e-9 * 35e-9), 1e-13));
    }
    SECTION("T = T_c is purely real and equals sigma") {
        const auto s = optical_conductivity(nb, 8.31, kOmega560);
        CHECK(s.imag() == 0.0);
        CHECK_THAT(s.real(), WithinRel(2e9, 1e-12));
    }
    SECTION("normal metal: real part only") {
        const auto s = optical_conductivity(material_preset("al"), 4.2, kOmega560);
        CHECK(s.imag() == 0.0);
        CHECK_THAT(s.real(), WithinRel(3.7382372929154730e7, 1e-12));
    }
    SECTION("perfect conductor rejected") {
        CHECK_THROWS_AS(optical_conductivity(material_preset("perfect"), 4.2, kOmega560),
                        std::invalid_argument);
    }
}

TEST_CASE("permittivity and optical conductivity are consistent") {
    // eps == 1 + i sigma/(eps0 omega) to 1e-12 relative
    const Material nb = material_preset("nb");
    const Material al = material_preset("al");
    for (const Material* m : {&nb, &al}) {
        for (double T : {0.0, 2.0, 4.2, 8.0, 8.31, 9.5}) {
            for (double omega : {kOmega560, 10.0 * kOmega560}) {
                const SlabMedium slab = permittivity(*m, T, omega);
                const std::complex<double> sigma = optical_conductivity(*m, T, omega);
                const std::complex<double> reconstructed =
                    1.0 + std::complex<double>{0.0, 1.0} * sigma / (constants::eps0 * omega);
                CHECK(rel_diff(slab.epsilon, reconstructed) < 1e-12);
            }
        }
    }
}

TEST_CASE("passivity: Im eps >= 0 everywhere in the domain") {
    const Material nb = material_preset("nb");
    const Material nbn = material_preset("nb-nonlocal");
    const Material al = material_preset("al");
    for (const Material* m : {&nb, &nbn, &al})
        for (double T = 0.0; T <= 12.0; T += 0.37)
            for (double omega : {1e3, kOmega560, 1e9})
                CHECK(permittivity(*m, T, omega).epsilon.imag() >= 0.0);
}

TEST_CASE("two-fluid sum rule is exact") {
    const Material nb = material_preset("nb");
    for (double T = 0.0; T <= 10.0; T += 0.173) {
        const MediumResponse r = medium_response(nb, T, kOmega560);
        CHECK(r.ns_fraction + r.nn_fraction == 1.0);
    }
    const MediumResponse al = medium_response(material_preset("al"), 4.2, kOmega560);
    CHECK(al.ns_fraction + al.nn_fraction == 1.0);
}

TEST_CASE("medium response limits") {
    const Material nb = material_preset("nb");

    const MediumResponse at0 = medium_response(nb, 0.0, kOmega560);
    CHECK(at0.nn_fraction == 0.0);
    CHECK(std::isinf(at0.skin_depth_m));
    CHECK(at0.sigma_n == 0.0);

    const MediumResponse attc = medium_response(nb, 8.31, kOmega560);
    CHECK(attc.ns_fraction == 0.0);
    CHECK(std::isinf(attc.lambda_L_m));

    const MediumResponse pc = medium_response(material_preset("perfect"), 4.2, kOmega560);
    CHECK(pc.slab.perfect_mirror);
    CHECK(pc.lambda_L_m == 0.0);
    CHECK(pc.skin_depth_m == 0.0);
    CHECK(std::isinf(pc.sigma_n));
    CHECK(pc.ns_fraction + pc.nn_fraction == 1.0);
}

TEST_CASE("continuity at T_c") {
    // eps(T_c - dT) -> eps(T_c): the jump is slope-driven and scales
    // linearly in dT (the condensate fraction has d(n_s)/dT = -4/T_c at
    // T_c, so the relative jump is 4 dT/T_c * U_L^2/|eps(T_c)|, about
    // 3.7e-4 per 1e-9 T_c for the niobium parameters)
    const Material nb = material_preset("nb");
    const SlabMedium at = permittivity(nb, nb.tc_K, kOmega560);

    double prev = 0.0;
    for (double f : {1e-10, 1e-11, 1e-12}) {
        const SlabMedium below = permittivity(nb, nb.tc_K * (1.0 - f), kOmega560);
        const double jump = rel_diff(below.epsilon, at.epsilon);
        if (prev > 0.0) CHECK_THAT(jump / prev, WithinRel(0.1, 0.02));
        prev = jump;
    }
    CHECK(prev < 1e-6);  // dT = 1e-12 T_c sits below the 1e-6 mark
}

TEST_CASE("monotonicity of the dielectric response in temperature") {
    const Material nb = material_preset("nb");
    double prev_im = -1.0;
    double prev_abs_re = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= 80; ++i) {
        const double T = 8.31 * i / 80.0;
        const SlabMedium m = permittivity(nb, T, kOmega560);
        CHECK(m.epsilon.imag() >= prev_im);
        prev_im = m.epsilon.imag();
        if (T < 8.31) {
            CHECK(std::abs(m.epsilon.real()) <= prev_abs_re);
            prev_abs_re = std::abs(m.epsilon.real());
        }
    }
}

TEST_CASE("material construction rejects bad parameters") {
    CHECK_THROWS_AS(Material::superconductor(0.0, 2e9, 8.31), std::invalid_argument);
    CHECK_THROWS_AS(Material::superconductor(35e-9, -1.0, 8.31), std::invalid_argument);
    CHECK_THROWS_AS(Material::superconductor(35e-9, 2e9, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(Material::superconductor(35e-9, 2e9, 8.31, -4.0), std::invalid_argument);
    CHECK_THROWS_AS(Material::superconductor(35e-9, 2e9, 8.31, 4.0, -1.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(Material::normal_metal(0.0), std::invalid_argument);
    CHECK_THROWS_AS(Material::normal_metal_from_skin_depth(0.0, 560e3),
                    std::invalid_argument);
    CHECK_THROWS_AS(Material::normal_metal_from_skin_depth(110e-6, 0.0),
                    std::invalid_argument);
}

TEST_CASE("preset table") {
    REQUIRE(material_presets().size() == 4);

    const Material& nb = material_preset("nb");
    CHECK(nb.kind == MaterialKind::superconductor);
    CHECK(nb.lambda_L0_m == 35e-9);
    CHECK(nb.sigma_normal == 2e9);
    CHECK(nb.tc_K == 8.31);
    CHECK(nb.gc_exponent == 4.0);

    const Material& nbn = material_preset("nb-nonlocal");
    CHECK(nbn.lambda_L0_m == 105e-9);
    CHECK(nbn.sigma_normal == 2e9);
    CHECK(nbn.tc_K == 8.31);

    CHECK(material_preset("al").kind == MaterialKind::normal_metal);
    CHECK(material_preset("perfect").kind == MaterialKind::perfect_conductor);
    CHECK_THROWS_AS(material_preset("unobtainium"), std::invalid_argument);
}
