#pragma once

// Physical model for the two-term screened exponential potential
//
//   V(r) = -V0 e^{-beta r}/(1 - q e^{-beta r}) + V1 e^{-2 beta r}/(1 - q e^{-beta r})^2
//
// together with the Pekeris-type surrogate for the centrifugal term and
// parameter presets for the Manning-Rosen, Hulthen and Coulomb-limit cases.

#include <cmath>
#include <stdexcept>
#include <string>

namespace relspec {

struct UnitSystem {
    double hbar = 1.0;
    double c = 1.0;

    // Q = 1/(hbar c), the inverse-action-speed scale of the wave equations.
    double Q() const { return 1.0 / (hbar * c); }

    void validate() const {
        if (!(hbar > 0.0) || !(c > 0.0))
            throw std::invalid_argument("UnitSystem: hbar and c must be positive");
    }
};

struct PotentialSpec {
    double V0 = 0.0;     // depth of the single-exponential term
    double V1 = 0.0;     // strength of the squared-denominator term
    double beta = 1.0;   // screening rate, inverse length
    double q = 1.0;      // screening shape
    double m0 = 1.0;     // particle rest mass

    void validate() const {
        if (!(beta > 0.0))
            throw std::invalid_argument("PotentialSpec: beta must be positive");
        if (!(q > 0.0))
            throw std::invalid_argument("PotentialSpec: q must be positive");
        if (!(m0 > 0.0))
            throw std::invalid_argument("PotentialSpec: m0 must be positive");
    }
};

enum class Equation { KleinGordon, Dirac };
enum class Component { Upper, Lower };

// Radial index n plus the angular quantum number: orbital ell for the
// Klein-Gordon equation, spin-orbit kappa (with component selector) for Dirac.
struct QuantumNumbers {
    int n = 0;
    Equation equation = Equation::KleinGordon;
    int ell = 0;
    int kappa = 1;
    Component component = Component::Upper;

    static QuantumNumbers kg(int n, int ell) {
        if (n < 0) throw std::invalid_argument("QuantumNumbers: n must be >= 0");
        if (ell < 0) throw std::invalid_argument("QuantumNumbers: ell must be >= 0");
        QuantumNumbers qn;
        qn.n = n;
        qn.equation = Equation::KleinGordon;
        qn.ell = ell;
        return qn;
    }

    static QuantumNumbers dirac(int n, int kappa, Component comp = Component::Upper) {
        if (n < 0) throw std::invalid_argument("QuantumNumbers: n must be >= 0");
        if (kappa == 0) throw std::invalid_argument("QuantumNumbers: kappa must be nonzero");
        QuantumNumbers qn;
        qn.n = n;
        qn.equation = Equation::Dirac;
        qn.kappa = kappa;
        qn.component = comp;
        return qn;
    }

    // Coefficient of the 1/r^2 barrier: ell(ell+1), kappa(kappa-1) for the
    // upper Dirac component, kappa(kappa+1) for the lower.
    double angular_factor() const {
        if (equation == Equation::KleinGordon)
            return static_cast<double>(ell) * (ell + 1);
        const double k = static_cast<double>(kappa);
        return component == Component::Upper ? k * (k - 1.0) : k * (k + 1.0);
    }

    std::string angular_label() const {
        if (equation == Equation::KleinGordon) return "ell=" + std::to_string(ell);
        return "kappa=" + std::to_string(kappa) +
               (component == Component::Upper ? " (upper)" : " (lower)");
    }
};

// V(r) of the two-term potential. Throws on the q>1 pole.
double potential_value(const PotentialSpec& spec, double r);

// Pekeris-type surrogate beta^2 e^{-beta r}/(1 - q e^{-beta r})^2 for 1/r^2.
double centrifugal_approx(const PotentialSpec& spec, double r);

// Manning-Rosen parameters: V0 = A/(2 b^2), V1 = alpha(alpha-1)/(2 b^2),
// beta = 1/b, q = 1.
PotentialSpec manning_rosen_spec(double A, double alpha, double b, double m0);

// Hulthen parameters: V1 = 0, q = 1.
PotentialSpec hulthen_spec(double V0, double beta, double m0);

}  // namespace relspec
