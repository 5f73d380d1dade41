#include "relspec/wavefunction.hpp"

#include <cmath>
#include <stdexcept>

namespace relspec {

double RadialFunction::upper_value_z(double z) const {
    return norm_ * std::pow(z, A1_) * std::pow(1.0 - z, 1.0 + D_) * poly_.value(z);
}

double RadialFunction::upper_derivative_dz(double z) const {
    const double zp = std::pow(z, A1_);
    const double op = std::pow(1.0 - z, 1.0 + D_);
    const double P = poly_.value(z);
    return norm_ * (A1_ * zp / z * op * P - (1.0 + D_) * zp * op / (1.0 - z) * P +
                    zp * op * poly_.derivative(z));
}

double RadialFunction::value_z(double z) const {
    if (kind_ == RadialKind::Dirac_g)
        throw std::logic_error("RadialFunction::value_z: lower component needs r");
    // Bound states vanish at both ends of the z-interval (A1 > 0, D > -1);
    // endpoint samples can land exactly on 0 or 1 after rounding.
    if (z <= 0.0 || z >= 1.0) return 0.0;
    return upper_value_z(z);
}

double RadialFunction::value(double r) const {
    if (!(r > 0.0)) throw std::domain_error("RadialFunction::value: r must be positive");
    const double z = z_of_r(r);
    if (z >= 1.0) throw std::domain_error("RadialFunction::value: q e^{-beta r} >= 1");
    if (kind_ != RadialKind::Dirac_g) return upper_value_z(z);
    const double f = upper_value_z(z);
    const double df_dr = -beta_ * z * upper_derivative_dz(z);
    return g_prefactor_ * (df_dr - kappa_ * f / r);
}

double RadialFunction::derivative(double r) const {
    if (kind_ == RadialKind::Dirac_g) {
        // No closed form kept for g'; central difference is adequate here.
        const double h = 1e-6 * std::max(r, 1.0);
        return (value(r + h) - value(r - h)) / (2.0 * h);
    }
    const double z = z_of_r(r);
    return -beta_ * z * upper_derivative_dz(z);
}

int RadialFunction::count_nodes() const { return poly_.count_roots(0.0, q_); }

namespace {

void require_bound_exponents(const CoefficientSet& cs) {
    if (!(cs.A1 > 0.0) || !(cs.D > -1.0))
        throw std::domain_error(
            "wavefunction: non-normalizable level (requires A1 > 0 and D > -1)");
}

double numeric_norm_integral(int n, double A1, double D, double beta, double q,
                             const TerminatingHypergeometric& poly) {
    // (1/beta) * int_0^q z^{2A1-1} (1-z)^{2+2D} poly(z)^2 dz, with geometric
    // panel refinement toward both endpoints.
    const auto integrand = [&](double z) {
        const double P = poly.value(z);
        return std::pow(z, 2.0 * A1 - 1.0) * std::pow(1.0 - z, 2.0 + 2.0 * D) * P * P;
    };
    return integrate_endpoint_refined(integrand, 0.0, q) / beta;
}

}  // namespace

double closed_form_norm(const PotentialSpec& spec, const EnergyLevel& level) {
    const CoefficientSet& cs = level.coeffs;
    require_bound_exponents(cs);
    const int n = level.quantum.n;
    double ln_n2 = std::log(spec.beta) + std::log(cs.A2) +
                   ln_gamma(n + 2.0 * cs.A1 + 1.0) + ln_gamma(2.0 * cs.A2 - n) -
                   ln_gamma(n + 1.0) - std::log(n + 1.0 + cs.D) -
                   ln_gamma(n + 2.0 + 2.0 * cs.D) - ln_gamma(2.0 * cs.A1) -
                   ln_gamma(1.0 + 2.0 * cs.A1);
    return std::exp(0.5 * ln_n2);
}

RadialFunction RadialFunction::build_upper(RadialKind kind, const PotentialSpec& spec,
                                           const EnergyLevel& level) {
    const CoefficientSet& cs = level.coeffs;
    require_bound_exponents(cs);
    TerminatingHypergeometric poly(level.quantum.n, -level.quantum.n + 2.0 * cs.A2,
                                   1.0 + 2.0 * cs.A1);
    RadialFunction rf(kind, level.quantum.n, cs.A1, cs.D, spec.beta, spec.q, level.E,
                      std::move(poly));

    const double I = numeric_norm_integral(level.quantum.n, cs.A1, cs.D, spec.beta,
                                           spec.q, rf.polynomial());
    const double numeric_N = 1.0 / std::sqrt(I);
    if (spec.q == 1.0) {
        const double N = closed_form_norm(spec, level);
        if (std::fabs(N * N * I - 1.0) <= 1e-8) {
            rf.norm_ = N;
            return rf;
        }
    }
    rf.norm_ = numeric_N;
    rf.numeric_norm_ = true;
    return rf;
}

RadialFunction kg_wavefunction(const PotentialSpec& spec, const UnitSystem& units,
                               const EnergyLevel& level) {
    (void)units;
    if (level.quantum.equation != Equation::KleinGordon)
        throw std::invalid_argument("kg_wavefunction: Klein-Gordon level required");
    return RadialFunction::build_upper(RadialKind::KG_u, spec, level);
}

RadialFunction dirac_upper(const PotentialSpec& spec, const UnitSystem& units,
                           const EnergyLevel& level) {
    (void)units;
    if (level.quantum.equation != Equation::Dirac ||
        level.quantum.component != Component::Upper)
        throw std::invalid_argument("dirac_upper: Dirac upper-component level required");
    return RadialFunction::build_upper(RadialKind::Dirac_f, spec, level);
}

RadialFunction dirac_lower(const PotentialSpec& spec, const UnitSystem& units,
                           const EnergyLevel& level, const RadialFunction& upper) {
    if (upper.kind() != RadialKind::Dirac_f)
        throw std::invalid_argument("dirac_lower: upper must be a Dirac f component");
    const double mc2 = spec.m0 * units.c * units.c;
    if (std::fabs(mc2 + level.E) < 1e-12 * mc2)
        throw std::domain_error("dirac_lower: E + m0 c^2 is degenerate");
    RadialFunction g = upper;
    g.kind_ = RadialKind::Dirac_g;
    g.g_prefactor_ = units.hbar * units.c / (mc2 + level.E);
    g.kappa_ = static_cast<double>(level.quantum.kappa);
    return g;
}

std::vector<double> evaluate_on_grid(const RadialFunction& rf,
                                     const std::vector<double>& r_grid) {
    std::vector<double> out;
    out.reserve(r_grid.size());
    for (double r : r_grid) out.push_back(rf.value(r));
    return out;
}

int count_nodes(const RadialFunction& rf) { return rf.count_nodes(); }

double norm_integral(const RadialFunction& rf) {
    if (rf.kind() == RadialKind::Dirac_g) {
        // g has no closed-form z-space density; integrate in r.
        const auto f2 = [&](double r) {
            const double v = rf.value(r);
            return v * v;
        };
        return integrate_endpoint_refined(f2, 1e-12 / rf.beta(), 60.0 / rf.beta());
    }
    const auto integrand = [&](double z) {
        const double v = rf.value_z(z);
        return v * v / z;
    };
    return integrate_endpoint_refined(integrand, 0.0, rf.q()) / rf.beta();
}

}  // namespace relspec
