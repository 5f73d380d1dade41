#include "relspec/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "relspec/specfun.hpp"

namespace relspec {

std::string CoefficientSet::failed_flag() const {
    if (!a1_real) return "A1_real";
    if (!a2_real) return "A2_real";
    if (!d_real) return "D_real";
    return "";
}

CoefficientSet coefficients(const PotentialSpec& spec, const UnitSystem& units,
                            const QuantumNumbers& qn, double E) {
    spec.validate();
    units.validate();
    const double Q = units.Q();
    const double mc2 = spec.m0 * units.c * units.c;
    const double b2 = spec.beta * spec.beta;

    CoefficientSet cs;
    cs.A1sq = Q * Q / b2 * (mc2 * mc2 - E * E);
    cs.a1_real = cs.A1sq >= 0.0;
    if (cs.a1_real) cs.A1 = std::sqrt(cs.A1sq);

    cs.A2sq = cs.A1sq +
              2.0 * Q * Q / (spec.q * b2) * (E + mc2) * (spec.V0 + spec.V1 / spec.q);
    cs.a2_real = cs.A2sq >= 0.0;
    if (cs.a2_real) cs.A2 = std::sqrt(cs.A2sq);

    cs.A3sq = qn.angular_factor() +
              2.0 * Q * Q * spec.V1 / (spec.q * b2) * (E + mc2);
    const double disc = 0.25 + cs.A3sq / spec.q;
    cs.d_real = disc >= 0.0;
    if (cs.d_real) cs.D = -0.5 + std::sqrt(disc);
    return cs;
}

double quantization_residual(const PotentialSpec& spec, const UnitSystem& units,
                             const QuantumNumbers& qn, double E) {
    const CoefficientSet cs = coefficients(spec, units, qn, E);
    if (!cs.valid())
        throw std::domain_error("quantization_residual: coefficient flag " +
                                cs.failed_flag() + " failed at E = " + std::to_string(E));
    return cs.A1 - cs.A2 + 1.0 + cs.D + qn.n;
}

namespace {

double closed_form_residual(const PotentialSpec& spec, const UnitSystem& units,
                            const QuantumNumbers& qn, double E) {
    const CoefficientSet cs = coefficients(spec, units, qn, E);
    if (!cs.valid())
        throw std::domain_error("closed_form_residual: coefficient flag " +
                                cs.failed_flag() + " failed at E = " + std::to_string(E));
    const double Q = units.Q();
    const double mc2 = spec.m0 * units.c * units.c;
    const double nd = qn.n + 1.0 + cs.D;
    const double vsum = spec.V0 + spec.V1 / spec.q;
    const double t1 = (E + mc2) * vsum / spec.q;
    const double t2sqrt = Q * (E + mc2) * vsum / (spec.q * spec.beta * nd);
    const double t3sqrt = nd * spec.beta / (2.0 * Q);
    return (E * E - mc2 * mc2) - t1 + t2sqrt * t2sqrt + t3sqrt * t3sqrt;
}

}  // namespace

double closed_form_residual_kg(const PotentialSpec& spec, const UnitSystem& units,
                               const QuantumNumbers& qn, double E) {
    if (qn.equation != Equation::KleinGordon)
        throw std::invalid_argument("closed_form_residual_kg: Klein-Gordon quantum numbers required");
    return closed_form_residual(spec, units, qn, E);
}

double closed_form_residual_dirac(const PotentialSpec& spec, const UnitSystem& units,
                                  const QuantumNumbers& qn, double E) {
    if (qn.equation != Equation::Dirac)
        throw std::invalid_argument("closed_form_residual_dirac: Dirac quantum numbers required");
    return closed_form_residual(spec, units, qn, E);
}

double manning_rosen_residual(double A, double alpha, double b, double m0, int n,
                              int ell, double E) {
    const double disc = 0.25 + ell * (ell + 1.0) + (E + m0) * alpha * (alpha - 1.0);
    if (disc < 0.0)
        throw std::domain_error("manning_rosen_residual: Gamma discriminant negative");
    const double gamma = n + 0.5 + std::sqrt(disc);
    const double strength = A + alpha * (alpha - 1.0);
    const double t1 = (E + m0) * strength / (2.0 * b * b);
    const double t2sqrt = (E + m0) * strength / (2.0 * b * gamma);
    const double t3sqrt = gamma / (2.0 * b);
    return (E * E - m0 * m0) - t1 + t2sqrt * t2sqrt + t3sqrt * t3sqrt;
}

double hulthen_residual(double V0, double beta, double m0, int n, int ell, double E) {
    const double nd = n + ell + 1.0;
    const double t1 = (E + m0) * V0;
    const double t2sqrt = (E + m0) * V0 / (beta * nd);
    const double t3sqrt = beta * nd / 2.0;
    return (E * E - m0 * m0) - t1 + t2sqrt * t2sqrt + t3sqrt * t3sqrt;
}

double coulomb_energy(double zeta, int n, int ell, double m0) {
    if (zeta < 0.0) throw std::domain_error("coulomb_energy: zeta must be >= 0");
    const double nd = n + ell + 1.0;
    const double gamma = zeta * zeta / (nd * nd);
    if (gamma >= 1.0) throw std::domain_error("coulomb_energy: zeta^2/(n+ell+1)^2 >= 1");
    return m0 * (1.0 - gamma) / (1.0 + gamma);
}

int polynomial_node_count(const PotentialSpec& spec, const UnitSystem& units,
                          const QuantumNumbers& qn, double E) {
    const CoefficientSet cs = coefficients(spec, units, qn, E);
    if (!cs.valid())
        throw std::domain_error("polynomial_node_count: coefficients invalid at E");
    TerminatingHypergeometric poly(qn.n, -qn.n + 2.0 * cs.A2, 1.0 + 2.0 * cs.A1);
    return poly.count_roots(0.0, spec.q);
}

namespace {

// Bisection/secant hybrid on a bracketed sign change.
template <typename F>
double refine_root(const F& f, double lo, double hi, double flo, double fhi, double tol) {
    for (int iter = 0; iter < 200 && (hi - lo) > tol; ++iter) {
        // Secant estimate, clamped into the middle 90% of the bracket.
        double mid = lo - flo * (hi - lo) / (fhi - flo);
        const double lo_guard = lo + 0.05 * (hi - lo);
        const double hi_guard = hi - 0.05 * (hi - lo);
        if (!(mid > lo_guard) || !(mid < hi_guard)) mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
            fhi = fm;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

SolveResult solve_level(const PotentialSpec& spec, const UnitSystem& units,
                        const QuantumNumbers& qn, const SolverConfig& config) {
    if (config.grid_points < 64)
        throw std::invalid_argument("solve_level: grid_points must be >= 64");
    if (!(config.tolerance > 0.0))
        throw std::invalid_argument("solve_level: tolerance must be positive");

    const double mc2 = spec.m0 * units.c * units.c;
    const double lo = -mc2 * (1.0 - config.window_margin);
    const double hi = mc2 * (1.0 - config.window_margin);
    const double tol = config.tolerance * mc2;

    const auto residual = [&](double E) {
        return quantization_residual(spec, units, qn, E);
    };

    // Scan the window on points where all coefficients are real.
    SolveResult result;
    double prev_E = 0.0, prev_f = 0.0;
    bool have_prev = false;
    for (int i = 0; i <= config.grid_points; ++i) {
        const double E = lo + (hi - lo) * i / config.grid_points;
        const CoefficientSet cs = coefficients(spec, units, qn, E);
        if (!cs.valid()) {
            have_prev = false;
            continue;
        }
        const double fE = cs.A1 - cs.A2 + 1.0 + cs.D + qn.n;
        if (have_prev && (fE < 0.0) != (prev_f < 0.0)) {
            const double root =
                refine_root(residual, prev_E, E, prev_f, fE, tol);
            EnergyLevel level;
            level.E = root;
            level.quantum = qn;
            level.residual = residual(root);
            level.coeffs = coefficients(spec, units, qn, root);
            level.bracket_lo = prev_E;
            level.bracket_hi = E;
            if (polynomial_node_count(spec, units, qn, root) == qn.n)
                result.candidates.push_back(level);
        }
        prev_E = E;
        prev_f = fE;
        have_prev = true;
    }

    if (result.candidates.empty()) {
        result.status = SolveStatus::NoBoundState;
        return result;
    }
    result.level = result.candidates.front();
    result.status = result.candidates.size() == 1 ? SolveStatus::Converged
                                                  : SolveStatus::MultipleRoots;
    return result;
}

}  // namespace relspec
