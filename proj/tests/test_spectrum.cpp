#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "relspec/spectrum.hpp"

using namespace relspec;

namespace {

PotentialSpec make_spec(double V0, double V1, double beta) {
    PotentialSpec spec;
    spec.V0 = V0;
    spec.V1 = V1;
    spec.beta = beta;
    return spec;
}

double solved_energy(const PotentialSpec& spec, const QuantumNumbers& qn) {
    const SolveResult res = solve_level(spec, UnitSystem{}, qn);
    REQUIRE(res.status == SolveStatus::Converged);
    return res.level->E;
}

}  // namespace

TEST_CASE("coefficients at a known analytic root") {
    // V0=1, beta=0.2, ell=0, n=1 has the exact level E = -3/5 with A1 = 4.
    const PotentialSpec spec = make_spec(1.0, 0.0, 0.2);
    const CoefficientSet cs = coefficients(spec, UnitSystem{}, QuantumNumbers::kg(1, 0), -0.6);
    CHECK(cs.valid());
    CHECK(cs.A1 == doctest::Approx(4.0).epsilon(1e-14));
    CHECK(cs.A2 == doctest::Approx(6.0).epsilon(1e-14));
    CHECK(cs.D == doctest::Approx(0.0).scale(1.0).epsilon(1e-14));
    CHECK(quantization_residual(spec, UnitSystem{}, QuantumNumbers::kg(1, 0), -0.6) ==
          doctest::Approx(0.0).scale(1.0).epsilon(1e-13));
}

TEST_CASE("solver reproduces independently cross-checked energies") {
    // Frozen references: quantization-condition roots computed with an
    // independent multiprecision root finder and confirmed against the
    // Numerov oracle to below 1e-6.
    CHECK(solved_energy(make_spec(1.0, 0.0, 0.2), QuantumNumbers::kg(0, 0)) ==
          doctest::Approx(-0.88805101546282350).epsilon(1e-10));
    CHECK(solved_energy(make_spec(1.0, 0.0, 0.2), QuantumNumbers::kg(1, 0)) ==
          doctest::Approx(-0.6).epsilon(1e-10));
    CHECK(solved_energy(make_spec(1.0, 0.0, 0.2), QuantumNumbers::kg(2, 0)) ==
          doctest::Approx(-0.23711036867715495).epsilon(1e-10));
    CHECK(solved_energy(make_spec(1.0, 0.0, 0.1), QuantumNumbers::kg(0, 0)) ==
          doctest::Approx(-0.97115515443059151).epsilon(1e-10));
    CHECK(solved_energy(make_spec(1.0, 0.5, 0.2), QuantumNumbers::kg(2, 1)) ==
          doctest::Approx(0.85364624019870238).epsilon(1e-10));
    CHECK(solved_energy(make_spec(0.5, 0.25, 0.1), QuantumNumbers::kg(0, 1)) ==
          doctest::Approx(0.62312124664629357).epsilon(1e-10));
}

TEST_CASE("solver determinism") {
    const PotentialSpec spec = make_spec(1.0, 0.5, 0.2);
    const QuantumNumbers qn = QuantumNumbers::kg(1, 1);
    const SolveResult a = solve_level(spec, UnitSystem{}, qn);
    const SolveResult b = solve_level(spec, UnitSystem{}, qn);
    REQUIRE(a.status == SolveStatus::Converged);
    CHECK(a.level->E == b.level->E);  // bit-identical
}

TEST_CASE("no bound state for the free case") {
    const SolveResult res =
        solve_level(make_spec(0.0, 0.0, 0.5), UnitSystem{}, QuantumNumbers::kg(0, 0));
    CHECK(res.status == SolveStatus::NoBoundState);
}

TEST_CASE("closed-form relations vanish at solver roots") {
    const UnitSystem units;
    const PotentialSpec spec = make_spec(1.0, 0.5, 0.2);
    SUBCASE("klein-gordon and the manning-rosen mapping") {
        const QuantumNumbers qn = QuantumNumbers::kg(1, 1);
        const double E = solved_energy(spec, qn);
        CHECK(std::fabs(closed_form_residual_kg(spec, units, qn, E)) < 1e-10);
        const double b = 1.0 / spec.beta;
        const double A = 2.0 * b * b * spec.V0;
        const double alpha = 0.5 + std::sqrt(0.25 + 2.0 * b * b * spec.V1);
        CHECK(std::fabs(manning_rosen_residual(A, alpha, b, 1.0, 1, 1, E)) < 1e-10);
    }
    SUBCASE("hulthen") {
        CHECK(std::fabs(hulthen_residual(1.0, 0.2, 1.0, 1, 0, -0.6)) < 1e-12);
    }
    SUBCASE("dirac") {
        const QuantumNumbers qn = QuantumNumbers::dirac(1, -1);
        const double E = solved_energy(spec, qn);
        CHECK(std::fabs(closed_form_residual_dirac(spec, units, qn, E)) < 1e-10);
    }
}

TEST_CASE("dirac upper energies match kg at equal angular factor") {
    const PotentialSpec spec = make_spec(1.0, 0.5, 0.2);
    const double e_kg = solved_energy(spec, QuantumNumbers::kg(1, 1));
    CHECK(solved_energy(spec, QuantumNumbers::dirac(1, 2)) == e_kg);
    CHECK(solved_energy(spec, QuantumNumbers::dirac(1, -1)) == e_kg);
}

TEST_CASE("coulomb energy closed form") {
    CHECK(coulomb_energy(0.15, 0, 0) ==
          doctest::Approx((1.0 - 0.0225) / (1.0 + 0.0225)).epsilon(1e-15));
    CHECK(coulomb_energy(0.15, 1, 1) ==
          doctest::Approx((1.0 - 0.0225 / 9.0) / (1.0 + 0.0225 / 9.0)).epsilon(1e-15));
}

TEST_CASE("invalid coefficient region is reported") {
    // Outside the gap the A1 branch turns imaginary.
    const PotentialSpec spec = make_spec(1.0, 0.0, 0.2);
    CHECK_THROWS_AS(
        quantization_residual(spec, UnitSystem{}, QuantumNumbers::kg(0, 0), 1.5),
        std::domain_error);
}

TEST_CASE("solver config validation") {
    SolverConfig cfg;
    cfg.grid_points = 8;
    CHECK_THROWS_AS(
        solve_level(make_spec(1.0, 0.0, 0.2), UnitSystem{}, QuantumNumbers::kg(0, 0), cfg),
        std::invalid_argument);
}
