#include "relspec/specfun.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace relspec {

TerminatingHypergeometric::TerminatingHypergeometric(int n, double b, double c)
    : n_(n), b_(b), c_(c) {
    if (n < 0) throw std::invalid_argument("TerminatingHypergeometric: n must be >= 0");
    // c + k must not vanish for k = 0..n-1 (denominator Pochhammer terms).
    for (int k = 0; k < n; ++k) {
        if (std::fabs(c + k) < 1e-300)
            throw std::invalid_argument(
                "TerminatingHypergeometric: c + " + std::to_string(k) +
                " vanishes inside the truncated series");
    }
    coeffs_.resize(static_cast<size_t>(n) + 1);
    coeffs_[0] = 1.0;
    for (int k = 1; k <= n; ++k)
        coeffs_[k] = coeffs_[k - 1] * (-n + k - 1) * (b + k - 1) / ((c + k - 1) * k);
}

double TerminatingHypergeometric::value(double z) const {
    double acc = coeffs_[n_];
    for (int k = n_ - 1; k >= 0; --k) acc = acc * z + coeffs_[k];
    return acc;
}

double TerminatingHypergeometric::derivative(double z) const {
    if (n_ == 0) return 0.0;
    double acc = n_ * coeffs_[n_];
    for (int k = n_ - 1; k >= 1; --k) acc = acc * z + k * coeffs_[k];
    return acc;
}

int TerminatingHypergeometric::count_roots(double lo, double hi) const {
    if (n_ == 0 || !(hi > lo)) return 0;
    // Dense sampling at Chebyshev points: for large parameters the Jacobi-like
    // roots accumulate towards the interval ends, and the quadratic clustering
    // of Chebyshev samples resolves them where a uniform grid cannot.
    const int samples = std::max(4096, 256 * (n_ + 1));
    int count = 0;
    double prev = 0.0;
    bool have_prev = false;
    for (int i = 1; i < samples; ++i) {
        const double frac = 0.5 * (1.0 - std::cos(M_PI * i / samples));
        const double z = lo + (hi - lo) * frac;
        const double v = value(z);
        if (v == 0.0) continue;  // grazing sample, neighbours carry the sign change
        if (have_prev && (v < 0.0) != (prev < 0.0)) ++count;
        prev = v;
        have_prev = true;
    }
    return count;
}

double hyp2f1_terminating(int n, double b, double c, double z) {
    return TerminatingHypergeometric(n, b, c).value(z);
}

double hyp2f1_derivative(int n, double b, double c, double z) {
    return TerminatingHypergeometric(n, b, c).derivative(z);
}

double ln_gamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("ln_gamma: x must be positive");
    // Lanczos, g = 7, 9 terms.
    static const double g = 7.0;
    static const double coef[9] = {
        0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
        771.32342877765313,      -176.61502916214059,   12.507343278686905,
        -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};
    if (x < 0.5) return ln_gamma(x + 1.0) - std::log(x);
    const double xm = x - 1.0;
    double acc = coef[0];
    for (int i = 1; i < 9; ++i) acc += coef[i] / (xm + i);
    const double t = xm + g + 0.5;
    return 0.5 * std::log(2.0 * M_PI) + (xm + 0.5) * std::log(t) - t + std::log(acc);
}

GaussLegendreRule::GaussLegendreRule(int order) {
    if (order < 1) throw std::invalid_argument("GaussLegendreRule: order must be >= 1");
    nodes.resize(order);
    weights.resize(order);
    const int m = (order + 1) / 2;
    for (int i = 1; i <= m; ++i) {
        // Newton iteration from the Chebyshev estimate of the i-th root.
        double z = std::cos(M_PI * (i - 0.25) / (order + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 1; j <= order; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
            }
            pp = order * (z * p1 - p2) / (z * z - 1.0);
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::fabs(z - z1) < 1e-15) break;
        }
        nodes[i - 1] = -z;
        nodes[order - i] = z;
        weights[i - 1] = 2.0 / ((1.0 - z * z) * pp * pp);
        weights[order - i] = weights[i - 1];
    }
}

namespace {

const GaussLegendreRule& rule32() {
    static const GaussLegendreRule rule(32);
    return rule;
}

double panel_integral(const std::function<double(double)>& f, double a, double b,
                      const GaussLegendreRule& rule) {
    const double xm = 0.5 * (a + b);
    const double xl = 0.5 * (b - a);
    double acc = 0.0;
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
        const double v = f(xm + xl * rule.nodes[i]);
        if (!std::isfinite(v))
            throw std::domain_error("integrate: non-finite sample at x = " +
                                    std::to_string(xm + xl * rule.nodes[i]));
        acc += rule.weights[i] * v;
    }
    return acc * xl;
}

}  // namespace

double integrate(const std::function<double(double)>& f, double lo, double hi, int nodes) {
    if (!(hi > lo)) throw std::invalid_argument("integrate: requires lo < hi");
    if (nodes < 2) throw std::invalid_argument("integrate: requires nodes >= 2");
    const int per_panel = std::min(nodes, 32);
    const int panels = (nodes + per_panel - 1) / per_panel;
    const GaussLegendreRule rule(per_panel);
    double acc = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double a = lo + (hi - lo) * p / panels;
        const double b = lo + (hi - lo) * (p + 1) / panels;
        acc += panel_integral(f, a, b, rule);
    }
    return acc;
}

double integrate_endpoint_refined(const std::function<double(double)>& f, double lo,
                                  double hi, int nodes_per_panel, int levels) {
    if (!(hi > lo)) throw std::invalid_argument("integrate_endpoint_refined: requires lo < hi");
    const GaussLegendreRule rule(std::max(nodes_per_panel, 4));
    const double mid_lo = lo + 0.25 * (hi - lo);
    const double mid_hi = lo + 0.75 * (hi - lo);
    double acc = panel_integral(f, mid_lo, mid_hi, rule);
    // Geometric panels shrinking toward each endpoint.
    double a = mid_lo;
    for (int k = 0; k < levels; ++k) {
        const double b = a;
        a = lo + 0.5 * (b - lo);
        acc += panel_integral(f, a, b, rule);
        if (std::fabs(acc) > 0.0 && (b - lo) < 1e-300) break;
    }
    double b = mid_hi;
    for (int k = 0; k < levels; ++k) {
        const double a2 = b;
        b = hi - 0.5 * (hi - a2);
        acc += panel_integral(f, a2, b, rule);
        if ((hi - a2) < 1e-300) break;
    }
    return acc;
}

}  // namespace relspec
