#pragma once

// The eigenvalue engine: energy-dependent coefficients of the transformed
// radial equation, the quantization residual A1 - A2 + 1 + D + n, bracketed
// root finding for bound-state energies, and the closed-form energy relations
// used as cross-checks.

#include <optional>
#include <string>
#include <vector>

#include "relspec/core.hpp"

namespace relspec {

struct CoefficientSet {
    double A1 = 0.0;     // (Q/beta) sqrt(m0^2 c^4 - E^2), >= 0 when real
    double A1sq = 0.0;
    double A2 = 0.0;     // + sqrt(A2sq) when real
    double A2sq = 0.0;
    double A3sq = 0.0;   // angular factor + 2 Q^2 V1 (E + m0 c^2)/(q beta^2)
    double D = 0.0;      // -1/2 + sqrt(1/4 + A3sq/q)
    bool a1_real = false;
    bool a2_real = false;
    bool d_real = false;

    bool valid() const { return a1_real && a2_real && d_real; }
    std::string failed_flag() const;
};

CoefficientSet coefficients(const PotentialSpec& spec, const UnitSystem& units,
                            const QuantumNumbers& qn, double E);

// f(E) = A1 - A2 + 1 + D + n; a bound state is a root f(E) = 0.
// Throws std::domain_error naming the failed flag if the coefficients are
// not all real at E.
double quantization_residual(const PotentialSpec& spec, const UnitSystem& units,
                             const QuantumNumbers& qn, double E);

// Left-minus-right of the closed-form energy relation obtained by eliminating
// A1 from the quantization condition:
//   E^2 - m0^2 c^4 = (1/q)(E + m0 c^2)(V0 + V1/q)
//                    - [Q (E + m0 c^2)(V0 + V1/q) / (q beta (n+1+D))]^2
//                    - [(n+1+D) beta / (2Q)]^2.
double closed_form_residual_kg(const PotentialSpec& spec, const UnitSystem& units,
                               const QuantumNumbers& qn, double E);

// Same relation with the Dirac angular factor kappa(kappa-1) (upper) or
// kappa(kappa+1) (lower) inside D.
double closed_form_residual_dirac(const PotentialSpec& spec, const UnitSystem& units,
                                  const QuantumNumbers& qn, double E);

// Manning-Rosen closed form in its native parameters (hbar = c = 1), with
// Gamma = n + 1/2 + sqrt(1/4 + ell(ell+1) + (E+m) alpha(alpha-1)).
double manning_rosen_residual(double A, double alpha, double b, double m0, int n,
                              int ell, double E);

// Hulthen closed form (V1 = 0, q = 1, hbar = c = 1).
double hulthen_residual(double V0, double beta, double m0, int n, int ell, double E);

// Coulomb-limit energy: E = m0 (1-gamma)/(1+gamma), gamma = zeta^2/(n+ell+1)^2.
double coulomb_energy(double zeta, int n, int ell, double m0 = 1.0);

struct SolverConfig {
    int grid_points = 512;      // uniform scan resolution over the energy window
    double tolerance = 1e-12;   // |dE| tolerance in units of m0 c^2
    double window_margin = 1e-9;  // fractional margin off the +-m0 c^2 edges
};

enum class SolveStatus { Converged, NoBoundState, MultipleRoots };

struct EnergyLevel {
    double E = 0.0;
    QuantumNumbers quantum;
    double residual = 0.0;       // quantization residual at E
    CoefficientSet coeffs;       // evaluated at E
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
};

struct SolveResult {
    SolveStatus status = SolveStatus::NoBoundState;
    std::optional<EnergyLevel> level;          // set when Converged or MultipleRoots
    std::vector<EnergyLevel> candidates;       // all node-count matches (MultipleRoots)
};

// Scans the bound-state window, brackets sign changes of the quantization
// residual, refines by a bisection/secant hybrid, and keeps the root whose
// wavefunction polynomial has exactly n interior zeros on (0, q).
SolveResult solve_level(const PotentialSpec& spec, const UnitSystem& units,
                        const QuantumNumbers& qn, const SolverConfig& config = {});

// Zero count of 2F1(-n, -n+2A2; 1+2A1; z) on (0, q) at energy E.
int polynomial_node_count(const PotentialSpec& spec, const UnitSystem& units,
                          const QuantumNumbers& qn, double E);

}  // namespace relspec
