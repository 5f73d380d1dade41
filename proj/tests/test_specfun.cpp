#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "relspec/specfun.hpp"

using namespace relspec;

TEST_CASE("terminating hypergeometric hand-summed values") {
    // 2F1(-2, 3; 1; z) = 1 - 6z + 6z^2.
    CHECK(hyp2f1_terminating(2, 3.0, 1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(hyp2f1_terminating(2, 3.0, 1.0, 0.5) ==
          doctest::Approx(1.0 - 3.0 + 1.5).epsilon(1e-15));
    // n = 0 is identically 1.
    CHECK(hyp2f1_terminating(0, 17.5, 2.0, 0.9) == 1.0);
    // n = 1: 1 - (b/c) z.
    CHECK(hyp2f1_terminating(1, 4.0, 2.0, 0.25) == doctest::Approx(0.5));
}

TEST_CASE("hypergeometric derivative matches a finite difference") {
    TerminatingHypergeometric poly(5, 7.3, 2.1);
    const double z = 0.37, h = 1e-6;
    const double fd = (poly.value(z + h) - poly.value(z - h)) / (2.0 * h);
    CHECK(poly.derivative(z) == doctest::Approx(fd).epsilon(1e-8));
}

TEST_CASE("root counting on a known polynomial") {
    // 2F1(-2, 3; 1; z) = 1 - 6z + 6z^2: roots at (3 +- sqrt(3))/6, both in (0,1).
    TerminatingHypergeometric poly(2, 3.0, 1.0);
    CHECK(poly.count_roots(0.0, 1.0) == 2);
    CHECK(poly.count_roots(0.0, 0.3) == 1);
    CHECK(TerminatingHypergeometric(0, 3.0, 1.0).count_roots(0.0, 1.0) == 0);
}

TEST_CASE("ln_gamma reference values") {
    CHECK(ln_gamma(0.5) == doctest::Approx(0.57236494292470008707).epsilon(1e-13));
    CHECK(ln_gamma(1.0) == doctest::Approx(0.0).scale(1.0).epsilon(1e-14));
    CHECK(ln_gamma(7.25) == doctest::Approx(7.0521854507385394449).epsilon(1e-13));
    // Gamma(5) = 24.
    CHECK(std::exp(ln_gamma(5.0)) == doctest::Approx(24.0).epsilon(1e-13));
    CHECK_THROWS_AS(ln_gamma(0.0), std::domain_error);
    CHECK_THROWS_AS(ln_gamma(-1.5), std::domain_error);
}

TEST_CASE("gauss-legendre rule integrates polynomials exactly") {
    const GaussLegendreRule rule(8);
    // Degree 15 is exact for an 8-point rule: integral of x^14 over (-1,1).
    double acc = 0.0;
    for (size_t i = 0; i < rule.nodes.size(); ++i)
        acc += rule.weights[i] * std::pow(rule.nodes[i], 14);
    CHECK(acc == doctest::Approx(2.0 / 15.0).epsilon(1e-14));
}

TEST_CASE("composite integration") {
    const double s = integrate([](double x) { return std::sin(x); }, 0.0, 3.14159, 64);
    CHECK(s == doctest::Approx(1.0 - std::cos(3.14159)).epsilon(1e-12));
    CHECK_THROWS(integrate([](double x) { return 1.0 / (x - 0.5); }, 0.5, 0.5 + 1e-300, 4));
}

TEST_CASE("endpoint-refined integration handles power singularities") {
    // Euler beta integral B(2.2, 3.4) = int_0^1 x^{1.2}(1-x)^{2.4} dx.
    const double got = integrate_endpoint_refined(
        [](double x) { return std::pow(x, 1.2) * std::pow(1.0 - x, 2.4); }, 0.0, 1.0);
    CHECK(got == doctest::Approx(0.053362985385261340629).epsilon(1e-12));
    // Integrable inverse-square-root singularity at the left endpoint.
    const double got2 = integrate_endpoint_refined(
        [](double x) { return x > 0.0 ? 1.0 / std::sqrt(x) : 0.0; }, 0.0, 1.0);
    CHECK(got2 == doctest::Approx(2.0).epsilon(1e-7));
}
