#pragma once

// Independent ground truth: numerical eigenvalues of the radial equation
//   u'' = W(r; E) u,
//   W = Lambda * K(r) - Q^2 (E^2 - m0^2 c^4) + 2 Q^2 (E + m0 c^2) V(r),
// where K(r) is the Pekeris-type centrifugal surrogate (or the exact 1/r^2,
// for quantifying the approximation error).
//
// The integration runs on a logarithmic radial grid: with t = ln r and
// u = sqrt(r) v(t), the equation becomes v'' = (r^2 W + 1/4) v, which is
// regular at the origin and resolves both the short-range barrier and the
// long exponential tail on a uniform t-grid.

#include <functional>
#include <optional>

#include "relspec/core.hpp"

namespace relspec {

enum class CentrifugalModel { PekerisApprox, ExactInverseSquare };

struct ShootingProblem {
    PotentialSpec spec;
    UnitSystem units;
    QuantumNumbers quantum;
    double r_min = 0.0;   // 0 = default 1e-8/beta
    double r_max = 0.0;   // 0 = default 30/beta
    int steps = 200000;
    double match_r = 0.0;  // 0 = auto (effective-potential minimum)
    CentrifugalModel centrifugal = CentrifugalModel::PekerisApprox;

    double effective_r_min() const { return r_min > 0.0 ? r_min : 1e-8 / spec.beta; }
    double effective_r_max() const { return r_max > 0.0 ? r_max : 30.0 / spec.beta; }
};

struct SweepResult {
    double mismatch = 0.0;     // scaled log-derivative difference at the match point
    int nodes_outward = 0;     // interior sign changes of the outward solution
    int nodes_matched = 0;     // sign changes up to the classically forbidden tail
};

// Double-ended Numerov sweep at trial energy E; returns the scaled
// log-derivative mismatch at the matching radius.
double numerov_sweep(const ShootingProblem& prob, double E);

SweepResult numerov_sweep_full(const ShootingProblem& prob, double E);

struct OracleLevel {
    double E = 0.0;
    double mismatch = 0.0;        // residual mismatch at E
    double step_change = 0.0;     // |E(h) - E(h/2)| of the final halving
    int steps_used = 0;
};

// Eigenvalue with exactly n interior nodes, or nullopt when no bound state
// exists. Brackets via the node-count staircase of the outward sweep, refines
// by bisection, and step-halves until |dE| < tol.
std::optional<OracleLevel> oracle_eigenvalue(const ShootingProblem& prob, int n,
                                             double tol = 1e-8);

// Single-resolution eigenvalue (no step refinement); used for convergence
// order studies.
std::optional<double> oracle_eigenvalue_fixed_steps(const ShootingProblem& prob, int n);

// Propagates v'' = W(t) v across [t0, t1] on a uniform grid with the same
// fourth-order scheme the sweeps use, starting from the two seed values
// v(t0) and v(t0 + h); returns v(t1). Exposed for step-convergence checks.
double numerov_propagate(const std::function<double(double)>& W, double t0, double t1,
                         int steps, double v0, double v1);

}  // namespace relspec
