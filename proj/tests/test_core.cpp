#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "relspec/core.hpp"

using namespace relspec;

TEST_CASE("potential value against a hand-computed reference") {
    PotentialSpec spec;
    spec.V0 = 1.0;
    spec.V1 = 2.0;
    spec.beta = 0.5;
    // V(3) for V0=1, V1=2, beta=0.5, q=1.
    CHECK(potential_value(spec, 3.0) ==
          doctest::Approx(-0.12222980220946091402).epsilon(1e-14));
}

TEST_CASE("potential limits") {
    PotentialSpec spec;
    spec.V0 = 1.0;
    spec.beta = 0.5;
    SUBCASE("vanishes at large r") {
        CHECK(std::fabs(potential_value(spec, 200.0)) < 1e-40);
    }
    SUBCASE("attractive near the origin for V1 = 0") {
        CHECK(potential_value(spec, 0.01) < -10.0);
    }
}

TEST_CASE("pole guard for q > 1") {
    PotentialSpec spec;
    spec.V0 = 1.0;
    spec.beta = 1.0;
    spec.q = 2.0;
    // 1 - q e^{-beta r} = 0 at r = ln 2.
    CHECK_THROWS_AS(potential_value(spec, std::log(2.0)), std::domain_error);
    CHECK(std::isfinite(potential_value(spec, 2.0)));
}

TEST_CASE("centrifugal surrogate approaches 1/r^2 for small beta r") {
    PotentialSpec spec;
    spec.beta = 0.01;
    const double r = 0.5;
    CHECK(centrifugal_approx(spec, r) == doctest::Approx(1.0 / (r * r)).epsilon(1e-2));
}

TEST_CASE("parameter presets") {
    SUBCASE("manning-rosen") {
        const PotentialSpec spec = manning_rosen_spec(4.0, 3.0, 2.0, 1.0);
        CHECK(spec.V0 == doctest::Approx(4.0 / 8.0));
        CHECK(spec.V1 == doctest::Approx(6.0 / 8.0));
        CHECK(spec.beta == doctest::Approx(0.5));
        CHECK(spec.q == 1.0);
    }
    SUBCASE("hulthen") {
        const PotentialSpec spec = hulthen_spec(0.3, 0.1, 1.0);
        CHECK(spec.V0 == 0.3);
        CHECK(spec.V1 == 0.0);
        CHECK(spec.q == 1.0);
    }
}

TEST_CASE("quantum number validation and angular factors") {
    CHECK_THROWS_AS(QuantumNumbers::kg(-1, 0), std::invalid_argument);
    CHECK_THROWS_AS(QuantumNumbers::kg(0, -1), std::invalid_argument);
    CHECK_THROWS_AS(QuantumNumbers::dirac(0, 0), std::invalid_argument);
    CHECK(QuantumNumbers::kg(0, 2).angular_factor() == 6.0);
    CHECK(QuantumNumbers::dirac(0, 2).angular_factor() == 2.0);
    CHECK(QuantumNumbers::dirac(0, -1).angular_factor() == 2.0);
    CHECK(QuantumNumbers::dirac(0, 2, Component::Lower).angular_factor() == 6.0);
}

TEST_CASE("spec validation") {
    PotentialSpec spec;
    spec.beta = -1.0;
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
    UnitSystem units;
    units.c = 0.0;
    CHECK_THROWS_AS(units.validate(), std::invalid_argument);
}
