#pragma once

// Self-contained special functions: the terminating Gauss hypergeometric
// series, log-gamma, and Gauss-Legendre quadrature.

#include <functional>
#include <vector>

namespace relspec {

// 2F1(-n, b; c; z) truncated at degree n: a polynomial in z with coefficients
//   coeffs[0] = 1,
//   coeffs[k] = coeffs[k-1] * (-n+k-1)(b+k-1) / ((c+k-1) k).
class TerminatingHypergeometric {
  public:
    TerminatingHypergeometric(int n, double b, double c);

    double value(double z) const;       // Horner evaluation
    double derivative(double z) const;  // d/dz of the truncated polynomial

    int degree() const { return n_; }
    double b() const { return b_; }
    double c() const { return c_; }
    const std::vector<double>& coefficients() const { return coeffs_; }

    // Number of strict sign changes of the polynomial on the open interval
    // (lo, hi), located by dense sampling with bisection refinement.
    int count_roots(double lo, double hi) const;

  private:
    int n_;
    double b_, c_;
    std::vector<double> coeffs_;
};

double hyp2f1_terminating(int n, double b, double c, double z);
double hyp2f1_derivative(int n, double b, double c, double z);

// ln Gamma(x) for x > 0, Lanczos approximation, relative error <= 1e-13.
double ln_gamma(double x);

// Gauss-Legendre nodes and weights on (-1, 1).
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    explicit GaussLegendreRule(int order);
};

// Gauss-Legendre estimate of the integral of f over (lo, hi) with the given
// total node budget, split into equal panels of up to 32 nodes each.
// Throws if f produces a non-finite sample.
double integrate(const std::function<double(double)>& f, double lo, double hi, int nodes);

// Integral over (lo, hi) of an integrand with endpoint power singularities or
// sharp decay: panels are refined geometrically toward both endpoints.
double integrate_endpoint_refined(const std::function<double(double)>& f, double lo,
                                  double hi, int nodes_per_panel = 32, int levels = 52);

}  // namespace relspec
