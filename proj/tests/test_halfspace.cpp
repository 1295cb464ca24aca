#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "spinflip/halfspace.hpp"
#include "spinflip/materials.hpp"
#include "spinflip/transition.hpp"
#include "support/simpson_oracle.hpp"

using namespace spinflip;
using Catch::Matchers::WithinRel;
using cd = std::complex<double>;

namespace {
const double kOmega560 = angular_frequency(TransitionSpec(560e3));
const double kKz50um = wavenumber(TransitionSpec(560e3)) * 50e-6;  // 5.8683660614647e-7

SlabMedium nb_at(double T) {
    return permittivity(material_preset("nb"), T, kOmega560);
}
SlabMedium al_slab() {
    return permittivity(material_preset("al"), 4.2, kOmega560);
}
}  // namespace

TEST_CASE("vacuum nullity") {
    auto ipar = integral_parallel(cd{1.0, 0.0}, 1e-6);
    auto iperp = integral_perp(cd{1.0, 0.0}, 1e-6);
    CHECK(ipar.converged);
    CHECK(iperp.converged);
    CHECK(ipar.value == cd{0.0, 0.0});
    CHECK(iperp.value == cd{0.0, 0.0});
}

TEST_CASE("perfect mirror limits at small kz") {
    const double kz = 1e-6;
    auto ipar = integral_parallel(SlabMedium::mirror(), kz);
    auto iperp = integral_perp(SlabMedium::mirror(), kz);
    REQUIRE(ipar.converged);
    REQUIRE(iperp.converged);

    // stated limits
    CHECK(std::abs(ipar.real() - 0.5) < 1e-3);
    CHECK(std::abs(iperp.real() + 0.5) < 1e-3);

    // second-order expansions: 1/2 - (2/5)(kz)^2 and -1/2 + (1/5)(kz)^2
    CHECK(std::abs(ipar.real() - (0.5 - 0.4 * kz * kz)) < 2e-8);
    CHECK(std::abs(iperp.real() - (-0.5 + 0.2 * kz * kz)) < 2e-8);
}

TEST_CASE("perfect mirror slab factor cancels to O((kz)^2)") {
    for (double kz : {1e-7, 1e-6, 1e-5, 1e-4}) {
        auto f = slab_factor(SlabMedium::mirror(), kz);
        REQUIRE(f.converged());
        // the residue is -(kz)^2/5 up to quadrature noise
        CHECK(std::abs(f.value() + kz * kz / 5.0) < 1e-3 * kz * kz + 1e-13);
        CHECK(std::abs(f.value()) < 1e-3 * kz);  // the coarse O(kz) statement
    }
}

TEST_CASE("evanescent sector is purely reactive for a real permittivity") {
    for (const SlabMedium& slab : {nb_at(0.0), SlabMedium::mirror()}) {
        auto ipar = integral_parallel(slab, kKz50um);
        auto iperp = integral_perp(slab, kKz50um);
        CHECK(std::abs(ipar.evanescent.real()) <= 1e-12 * std::abs(ipar.real()));
        CHECK(std::abs(iperp.evanescent.real()) <= 1e-12 * std::abs(iperp.real()));
        CHECK(ipar.evanescent.imag() != 0.0);
    }
}

TEST_CASE("frozen reference values") {
    // reference numbers from an independent 30-digit evaluation of the
    // defining integrals (tanh-sinh, cross-checked against two QUADPACK
    // formulations in different variables)
    struct Case {
        SlabMedium slab;
        double kz;
        double i_par, i_perp;
    };
    const Case cases[] = {
        {nb_at(4.0), kKz50um, 306819889.027303, 613639776.554747},
        {nb_at(4.2), kKz50um, 379879742.623267, 759759483.746709},
        {nb_at(1.0), kKz50um, 1103746.3855460128, 2207491.2710925336},
        {al_slab(), kKz50um, 4.12021852640151e16, 8.24043705281491e16},
    };
    for (const auto& c : cases) {
        auto ipar = integral_parallel(c.slab, c.kz);
        auto iperp = integral_perp(c.slab, c.kz);
        REQUIRE(ipar.converged);
        REQUIRE(iperp.converged);
        CHECK_THAT(ipar.real(), WithinRel(c.i_par, 1e-6));
        CHECK_THAT(iperp.real(), WithinRel(c.i_perp, 1e-6));
    }
}

TEST_CASE("error estimate brackets the true deviation") {
    auto ipar = integral_parallel(nb_at(4.2), kKz50um);
    const double truth = 379879742.623267;
    CHECK(std::abs(ipar.real() - truth) < 10.0 * ipar.error_re + 1e-6 * truth);
    CHECK(ipar.error_re < 1e-6 * truth);
}

TEST_CASE("slab factor follows the z^-4 law in the near field") {
    const SlabMedium slab = nb_at(4.2);
    for (double kz : {2e-7, 1e-6, 5e-6}) {
        const double f1 = slab_factor(slab, kz).value();
        const double f2 = slab_factor(slab, 2.0 * kz).value();
        CHECK_THAT(f2 / f1, WithinRel(1.0 / 16.0, 0.02));
    }
}

TEST_CASE("tail truncation is sound") {
    QuadratureSettings base;
    base.rel_tol = 1e-6;
    QuadratureSettings half = base;
    half.tail_exponent_cutoff = 22.0;
    for (const SlabMedium& slab : {nb_at(4.2), al_slab()}) {
        const double full = slab_factor(slab, kKz50um, base).value();
        const double trunc = slab_factor(slab, kKz50um, half).value();
        CHECK(std::abs(full - trunc) < 10.0 * base.rel_tol * std::abs(full));
    }
}

TEST_CASE("spin weights scale the two terms independently") {
    const SlabMedium slab = nb_at(4.2);
    auto f = slab_factor(slab, kKz50um, {}, 2.0, 0.5);
    auto ref = slab_factor(slab, kKz50um);
    CHECK(f.value() == 2.0 * ref.parallel.real() + 0.5 * ref.perp.real());
}

TEST_CASE("non-convergence is reported with partial data") {
    QuadratureSettings s;
    s.max_subdivisions = 1;
    s.rel_tol = 1e-12;
    auto f = slab_factor(al_slab(), kKz50um, s);
    CHECK_FALSE(f.converged());
    CHECK(f.error() > 0.0);
    CHECK(std::isfinite(f.value()));
    // partial value still lands in the right decade
    CHECK_THAT(f.value(), WithinRel(1.236065558e17, 0.5));
}

TEST_CASE("kz must be positive") {
    CHECK_THROWS_AS(integral_parallel(cd{1.0, 0.0}, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(integral_perp(cd{1.0, 0.0}, -1.0), std::invalid_argument);
}

TEST_CASE("oscillatory regime kz >= 1 stays convergent") {
    // outside the near field the retained mirror already bounds the
    // integrals; check convergence and the oracle agreement
    for (double kz : {1.0, 7.0, 40.0}) {
        auto ipar = integral_parallel(SlabMedium::mirror(), kz);
        auto iperp = integral_perp(SlabMedium::mirror(), kz);
        CHECK(ipar.converged);
        CHECK(iperp.converged);
        CHECK(std::abs(ipar.real()) < 1.0);
        CHECK(std::abs(iperp.real()) < 1.0);
        const auto oracle =
            simpson_oracle::spectral_integrals(cd{1.0, 0.0}, true, kz, 45.0, 1 << 18);
        CHECK(std::abs(ipar.real() - oracle.i_par.real()) < 1e-6);
        CHECK(std::abs(iperp.real() - oracle.i_perp.real()) < 1e-6);
    }
}

TEST_CASE("adaptive engine agrees with the Simpson oracle (spot checks)") {
    struct Case {
        SlabMedium slab;
        bool mirror;
    };
    const double kz = 1e-6;
    const SlabMedium cases[] = {nb_at(4.2), al_slab(), SlabMedium::mirror()};
    for (const SlabMedium& slab : cases) {
        const auto oracle = simpson_oracle::spectral_integrals(
            slab.epsilon, slab.perfect_mirror, kz, 45.0, 1 << 18);
        auto ipar = integral_parallel(slab, kz);
        auto iperp = integral_perp(slab, kz);
        CHECK_THAT(ipar.real(), WithinRel(oracle.i_par.real(), 1e-6));
        CHECK_THAT(iperp.real(), WithinRel(oracle.i_perp.real(), 1e-6));
    }
}
