#pragma once

// Closed-form radial wavefunctions: Klein-Gordon u(r), Dirac upper f(r), and
// the reconstructed Dirac lower component g(r).
//
// With z = q e^{-beta r}, the bound-state solutions take the form
//   u(z) = N z^{A1} (1-z)^{1+D} 2F1(-n, -n+2A2; 1+2A1; z).

#include <vector>

#include "relspec/core.hpp"
#include "relspec/specfun.hpp"
#include "relspec/spectrum.hpp"

namespace relspec {

enum class RadialKind { KG_u, Dirac_f, Dirac_g };

class RadialFunction {
  public:
    double value(double r) const;

    // Pointwise evaluation at z = q e^{-beta r} directly (KG_u / Dirac_f only).
    double value_z(double z) const;

    // d/dr, via the chain rule dz/dr = -beta z on the closed form.
    double derivative(double r) const;

    RadialKind kind() const { return kind_; }
    double norm_constant() const { return norm_; }
    double exponent_z() const { return A1_; }       // power of z
    double exponent_1mz() const { return 1.0 + D_; }  // power of (1-z)
    double energy() const { return E_; }
    double beta() const { return beta_; }
    double q() const { return q_; }
    const TerminatingHypergeometric& polynomial() const { return poly_; }
    bool used_numeric_norm() const { return numeric_norm_; }

    double z_of_r(double r) const { return q_ * std::exp(-beta_ * r); }
    double r_of_z(double z) const { return -std::log(z / q_) / beta_; }

    // Interior zero count of the polynomial factor on z in (0, q).
    int count_nodes() const;

  private:
    friend RadialFunction kg_wavefunction(const PotentialSpec&, const UnitSystem&,
                                          const EnergyLevel&);
    friend RadialFunction dirac_upper(const PotentialSpec&, const UnitSystem&,
                                      const EnergyLevel&);
    friend RadialFunction dirac_lower(const PotentialSpec&, const UnitSystem&,
                                      const EnergyLevel&, const RadialFunction&);

    RadialFunction(RadialKind kind, int n, double A1, double D, double beta, double q,
                   double E, TerminatingHypergeometric poly)
        : kind_(kind), n_(n), A1_(A1), D_(D), beta_(beta), q_(q), E_(E),
          poly_(std::move(poly)) {}

    static RadialFunction build_upper(RadialKind kind, const PotentialSpec& spec,
                                      const EnergyLevel& level);

    double upper_value_z(double z) const;       // the f (or u) closed form
    double upper_derivative_dz(double z) const;

    RadialKind kind_;
    int n_;
    double A1_, D_, beta_, q_, E_;
    TerminatingHypergeometric poly_;
    double norm_ = 1.0;
    bool numeric_norm_ = false;
    // Dirac_g only: g = g_prefactor * (f' - kappa f / r).
    double g_prefactor_ = 0.0;
    double kappa_ = 0.0;
};

// Normalized Klein-Gordon u(r). Uses the closed-form normalization constant
// (verified against quadrature; replaced by the numeric value with a flag if
// the check fails, and always numeric for q != 1).
RadialFunction kg_wavefunction(const PotentialSpec& spec, const UnitSystem& units,
                               const EnergyLevel& level);

// Normalized Dirac upper component f(r).
RadialFunction dirac_upper(const PotentialSpec& spec, const UnitSystem& units,
                           const EnergyLevel& level);

// Lower component g(r) = hbar c/(m0 c^2 + E) (d/dr - kappa/r) f(r).
// Not separately renormalized.
RadialFunction dirac_lower(const PotentialSpec& spec, const UnitSystem& units,
                           const EnergyLevel& level, const RadialFunction& upper);

std::vector<double> evaluate_on_grid(const RadialFunction& rf,
                                     const std::vector<double>& r_grid);

int count_nodes(const RadialFunction& rf);

// Quadrature of the squared wavefunction over r in (0, inf), i.e.
// (1/beta) * integral of u(z)^2 / z over z in (0, q).
double norm_integral(const RadialFunction& rf);

// Closed-form normalization constant N for a converged level (q = 1):
//   N^2 = beta A2 Gamma(n+2A1+1) Gamma(2A2-n)
//         / (n! (n+1+D) Gamma(n+2+2D) Gamma(2A1) Gamma(1+2A1)).
double closed_form_norm(const PotentialSpec& spec, const EnergyLevel& level);

}  // namespace relspec
