#include "relspec/core.hpp"

#include <limits>

namespace relspec {

namespace {

// 1 - q e^{-beta r}, with a pole guard. The denominator can only vanish for
// q > 1 (at r = ln(q)/beta).
double screening_denominator(const PotentialSpec& spec, double r) {
    const double den = 1.0 - spec.q * std::exp(-spec.beta * r);
    if (std::fabs(den) < 16.0 * std::numeric_limits<double>::epsilon())
        throw std::domain_error("two-term potential: q e^{-beta r} = 1 (pole at r = " +
                                std::to_string(std::log(spec.q) / spec.beta) + ")");
    return den;
}

}  // namespace

double potential_value(const PotentialSpec& spec, double r) {
    if (!(r > 0.0)) throw std::domain_error("potential_value: r must be positive");
    const double ex = std::exp(-spec.beta * r);
    const double den = screening_denominator(spec, r);
    return -spec.V0 * ex / den + spec.V1 * ex * ex / (den * den);
}

double centrifugal_approx(const PotentialSpec& spec, double r) {
    if (!(r > 0.0)) throw std::domain_error("centrifugal_approx: r must be positive");
    const double ex = std::exp(-spec.beta * r);
    const double den = screening_denominator(spec, r);
    return spec.beta * spec.beta * ex / (den * den);
}

PotentialSpec manning_rosen_spec(double A, double alpha, double b, double m0) {
    if (!(b > 0.0)) throw std::invalid_argument("manning_rosen_spec: b must be positive");
    PotentialSpec spec;
    spec.V0 = A / (2.0 * b * b);
    spec.V1 = alpha * (alpha - 1.0) / (2.0 * b * b);
    spec.beta = 1.0 / b;
    spec.q = 1.0;
    spec.m0 = m0;
    spec.validate();
    return spec;
}

PotentialSpec hulthen_spec(double V0, double beta, double m0) {
    if (!(beta > 0.0)) throw std::invalid_argument("hulthen_spec: beta must be positive");
    PotentialSpec spec;
    spec.V0 = V0;
    spec.V1 = 0.0;
    spec.beta = beta;
    spec.q = 1.0;
    spec.m0 = m0;
    spec.validate();
    return spec;
}

}  // namespace relspec
