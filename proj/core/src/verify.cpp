#include "relspec/verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "relspec/core.hpp"
#include "relspec/oracle.hpp"
#include "relspec/specfun.hpp"
#include "relspec/spectrum.hpp"
#include "relspec/wavefunction.hpp"

namespace relspec {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_s(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

constexpr double kBetaGrid[] = {0.1, 0.2};
constexpr double kPotGrid[][2] = {{1.0, 0.0}, {1.0, 0.5}, {0.5, 0.25}};

struct GridLevel {
    PotentialSpec spec;
    QuantumNumbers qn;
    EnergyLevel level;
};

std::string describe(const GridLevel& gl) {
    std::ostringstream os;
    os << "beta=" << gl.spec.beta << " V0=" << gl.spec.V0 << " V1=" << gl.spec.V1
       << " " << gl.qn.angular_label() << " n=" << gl.qn.n;
    return os.str();
}

GridLevel solve_grid_level(const PotentialSpec& spec, const QuantumNumbers& qn) {
    const UnitSystem units;
    const SolveResult res = solve_level(spec, units, qn);
    if (res.status != SolveStatus::Converged || !res.level) {
        std::ostringstream os;
        os << "acceptance grid level did not converge: beta=" << spec.beta
           << " V0=" << spec.V0 << " V1=" << spec.V1 << " " << qn.angular_label()
           << " n=" << qn.n;
        throw std::runtime_error(os.str());
    }
    return {spec, qn, *res.level};
}

std::vector<GridLevel> kg_grid_levels() {
    std::vector<GridLevel> out;
    for (double beta : kBetaGrid)
        for (const auto& vv : kPotGrid)
            for (int ell : {0, 1})
                for (int n : {0, 1, 2}) {
                    PotentialSpec spec;
                    spec.V0 = vv[0];
                    spec.V1 = vv[1];
                    spec.beta = beta;
                    out.push_back(solve_grid_level(spec, QuantumNumbers::kg(n, ell)));
                }
    return out;
}

std::vector<GridLevel> dirac_grid_levels() {
    std::vector<GridLevel> out;
    for (double beta : kBetaGrid)
        for (const auto& vv : kPotGrid)
            for (int kappa : {1, -1, 2})
                for (int n : {0, 1, 2}) {
                    PotentialSpec spec;
                    spec.V0 = vv[0];
                    spec.V1 = vv[1];
                    spec.beta = beta;
                    out.push_back(solve_grid_level(spec, QuantumNumbers::dirac(n, kappa)));
                }
    return out;
}

// Root of the closed-form relation with the (n+1+D)^2 term sign flipped to
// the printed one; only used by the fault-injection hook.
double faulted_energy(const PotentialSpec& spec, const QuantumNumbers& qn) {
    const UnitSystem units;
    const double mc2 = spec.m0;
    const auto residual = [&](double E) {
        const CoefficientSet cs = coefficients(spec, units, qn, E);
        const double nd = qn.n + 1.0 + cs.D;
        const double vsum = spec.V0 + spec.V1 / spec.q;
        const double t1 = (E + mc2) * vsum / spec.q;
        const double t2s = (E + mc2) * vsum / (spec.q * spec.beta * nd);
        const double t3s = nd * spec.beta / 2.0;
        return (E * E - mc2 * mc2) - t1 + t2s * t2s - t3s * t3s;
    };
    const int grid = 4001;
    const double lo = -mc2 * (1.0 - 1e-9), hi = mc2 * (1.0 - 1e-9);
    double prev_E = lo, prev_f = residual(lo);
    for (int i = 1; i <= grid; ++i) {
        const double E = lo + (hi - lo) * i / grid;
        const double f = residual(E);
        if ((f < 0.0) != (prev_f < 0.0)) {
            double a = prev_E, b = E;
            while (b - a > 1e-13) {
                const double mid = 0.5 * (a + b);
                if ((residual(mid) < 0.0) == (prev_f < 0.0))
                    a = mid;
                else
                    b = mid;
            }
            return 0.5 * (a + b);
        }
        prev_E = E;
        prev_f = f;
    }
    return 0.0;  // no root; guaranteed to miss the oracle value
}

CriterionResult oracle_equivalence(int index, const std::string& name,
                                   const std::vector<GridLevel>& levels,
                                   const VerifyOptions& opt, bool allow_fault) {
    const auto t0 = Clock::now();
    CriterionResult res;
    res.index = index;
    res.name = name;
    res.threshold = 1e-6;
    for (const auto& gl : levels) {
        ShootingProblem prob;
        prob.spec = gl.spec;
        prob.quantum = gl.qn;
        prob.steps = opt.oracle_steps;
        const auto oracle = oracle_eigenvalue(prob, gl.qn.n);
        if (!oracle) {
            res.detail = "oracle found no bound state: " + describe(gl);
            res.measured = 1.0;
            res.seconds = elapsed_s(t0);
            return res;
        }
        double analytic = gl.level.E;
        if (allow_fault && opt.inject_sign_fault)
            analytic = faulted_energy(gl.spec, gl.qn);
        const double diff = std::fabs(analytic - oracle->E);
        if (diff > res.measured) {
            res.measured = diff;
            res.detail = describe(gl);
        }
    }
    res.pass = res.measured <= res.threshold;
    res.seconds = elapsed_s(t0);
    return res;
}

CriterionResult coulomb_limit(int index) {
    const auto t0 = Clock::now();
    CriterionResult res;
    res.index = index;
    res.name = "coulomb limit of the Hulthen case";
    res.threshold = 1e-4;
    const double zeta = 0.15;
    const UnitSystem units;
    bool monotone = true;
    for (int ell : {0, 1})
        for (int n : {0, 1}) {
            const double target = coulomb_energy(zeta, n, ell);
            double prev_err = -1.0;
            for (double beta : {1e-2, 1e-3, 1e-4}) {
                const PotentialSpec spec = hulthen_spec(zeta * beta, beta, 1.0);
                const SolveResult sr = solve_level(spec, units, QuantumNumbers::kg(n, ell));
                if (sr.status != SolveStatus::Converged) {
                    res.detail = "no bound state in Coulomb-limit scan";
                    res.measured = 1.0;
                    res.seconds = elapsed_s(t0);
                    return res;
                }
                const double err = std::fabs(sr.level->E - target);
                if (prev_err >= 0.0 && err >= prev_err) monotone = false;
                prev_err = err;
                if (beta == 1e-4 && err > res.measured) {
                    res.measured = err;
                    res.detail = "ell=" + std::to_string(ell) + " n=" + std::to_string(n);
                }
            }
        }
    res.pass = monotone && res.measured <= res.threshold;
    if (!monotone) res.detail += " (error not monotone in beta)";
    res.seconds = elapsed_s(t0);
    return res;
}

CriterionResult closed_form_consistency(int index, const std::vector<GridLevel>& kg,
                                        const std::vector<GridLevel>& dirac) {
    const auto t0 = Clock::now();
    CriterionResult res;
    res.index = index;
    res.name = "closed-form energy relations at quantization roots";
    res.threshold = 1e-9;
    const UnitSystem units;
    const auto track = [&](double value, const GridLevel& gl, const char* tag) {
        if (std::fabs(value) > res.measured) {
            res.measured = std::fabs(value);
            res.detail = std::string(tag) + ": " + describe(gl);
        }
    };
    for (const auto& gl : kg) {
        track(closed_form_residual_kg(gl.spec, units, gl.qn, gl.level.E), gl, "kg");
        if (gl.spec.V1 == 0.0) {
            track(hulthen_residual(gl.spec.V0, gl.spec.beta, gl.spec.m0, gl.qn.n,
                                   gl.qn.ell, gl.level.E),
                  gl, "hulthen");
        } else {
            // Invert the Manning-Rosen parameter map.
            const double b = 1.0 / gl.spec.beta;
            const double A = 2.0 * b * b * gl.spec.V0;
            const double alpha =
                0.5 + std::sqrt(0.25 + 2.0 * b * b * gl.spec.V1);
            track(manning_rosen_residual(A, alpha, b, gl.spec.m0, gl.qn.n, gl.qn.ell,
                                         gl.level.E),
                  gl, "manning-rosen");
        }
    }
    for (const auto& gl : dirac)
        track(closed_form_residual_dirac(gl.spec, units, gl.qn, gl.level.E), gl, "dirac");
    res.pass = res.measured <= res.threshold;
    res.seconds = elapsed_s(t0);
    return res;
}

CriterionResult normalization(int index, const std::vector<GridLevel>& kg) {
    const auto t0 = Clock::now();
    CriterionResult res;
    res.index = index;
    res.name = "closed-form normalization and the norm-integral identity";
    res.threshold = 1e-8;
    const UnitSystem units;
    for (const auto& gl : kg) {
        const RadialFunction u = kg_wavefunction(gl.spec, units, gl.level);
        if (u.used_numeric_norm()) {
            res.detail = "closed-form N rejected for " + describe(gl);
            res.measured = 1.0;
            res.seconds = elapsed_s(t0);
            return res;
        }
        const double dev = std::fabs(norm_integral(u) - 1.0);
        if (dev > res.measured) {
            res.measured = dev;
            res.detail = "norm: " + describe(gl);
        }
    }
    // Norm-integral identity for n = 0..3 on one family.
    for (int n = 0; n <= 3; ++n) {
        PotentialSpec spec;
        spec.V0 = 1.0;
        spec.V1 = 0.5;
        spec.beta = 0.2;
        const GridLevel gl = solve_grid_level(spec, QuantumNumbers::kg(n, 0));
        const CoefficientSet& cs = gl.level.coeffs;
        const double P = 2.0 * cs.A1 - 1.0;
        const double Q = 2.0 + 2.0 * cs.D;
        // Second polynomial parameter: n+P+Q+1, equal to -n+2A2 at the root.
        const double b2 = n + P + Q + 1.0;
        if (std::fabs(b2 - (-n + 2.0 * cs.A2)) > 1e-9 * std::fabs(b2)) {
            res.detail = "parameter identity broken at n=" + std::to_string(n);
            res.measured = 1.0;
            res.seconds = elapsed_s(t0);
            return res;
        }
        TerminatingHypergeometric poly(n, b2, P + 2.0);
        const auto integrand = [&](double z) {
            const double F = poly.value(z);
            return std::pow(z, P) * std::pow(1.0 - z, Q) * F * F;
        };
        const double quad = integrate_endpoint_refined(integrand, 0.0, 1.0);
        const double ln_closed =
            std::log(2.0) + ln_gamma(n + 1.0) + std::log(n + Q / 2.0) +
            ln_gamma(n + Q) + ln_gamma(P + 1.0) + ln_gamma(P + 2.0) -
            std::log(2.0 * n + P + Q + 1.0) - ln_gamma(n + P + 2.0) -
            ln_gamma(n + P + Q + 1.0);
        const double rel = std::fabs(quad - std::exp(ln_closed)) / std::exp(ln_closed);
        if (rel > res.measured) {
            res.measured = rel;
            res.detail = "integral identity: n=" + std::to_string(n);
        }
    }
    res.pass = res.measured <= res.threshold;
    res.seconds = elapsed_s(t0);
    return res;
}

CriterionResult node_theorem(int index, const std::vector<GridLevel>& kg,
                             const std::vector<GridLevel>& dirac) {
    const auto t0 = Clock::now();
    CriterionResult res;
    res.index = index;
    res.name = "node count equals the radial index";
    res.threshold = 0.0;
    const UnitSystem units;
    int mismatches = 0;
    for (const auto& gl : kg) {
        const RadialFunction u = kg_wavefunction(gl.spec, units, gl.level);
        if (count_nodes(u) != gl.qn.n) {
            ++mismatches;
            res.detail = describe(gl);
        }
    }
    for (const auto& gl : dirac) {
        const RadialFunction f = dirac_upper(gl.spec, units, gl.level);
        if (count_nodes(f) != gl.qn.n) {
            ++mismatches;
            res.detail = describe(gl);
        }
    }
    res.measured = mismatches;
    res.pass = mismatches == 0;
    res.seconds = elapsed_s(t0);
    return res;
}

CriterionResult dirac_kg_degeneracy(int index) {
    const auto t0 = Clock::now();
    CriterionResult res;
    res.index = index;
    res.name = "Dirac upper energies degenerate with Klein-Gordon";
    res.threshold = 1e-12;
    const UnitSystem units;
    for (double beta : kBetaGrid)
        for (const auto& vv : kPotGrid)
            for (int ell : {0, 1})
                for (int n : {0, 1, 2}) {
                    PotentialSpec spec;
                    spec.V0 = vv[0];
                    spec.V1 = vv[1];
                    spec.beta = beta;
                    const GridLevel kg = solve_grid_level(spec, QuantumNumbers::kg(n, ell));
                    std::vector<int> kappas = {ell + 1};
                    if (ell > 0) kappas.push_back(-ell);
                    for (int kappa : kappas) {
                        const GridLevel dl =
                            solve_grid_level(spec, QuantumNumbers::dirac(n, kappa));
                        const double diff = std::fabs(kg.level.E - dl.level.E);
                        if (diff > res.measured) {
                            res.measured = diff;
                            res.detail = describe(dl);
                        }
                    }
                }
    res.pass = res.measured <= res.threshold;
    res.seconds = elapsed_s(t0);
    return res;
}

CriterionResult kernel_checks(int index) {
    const auto t0 = Clock::now();
    CriterionResult res;
    res.index = index;
    res.name = "special-function kernel and Numerov order";
    res.threshold = 1e-13;
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> n_dist(0, 12);
    std::uniform_real_distribution<double> b_dist(-20.0, 20.0);
    std::uniform_real_distribution<double> c_dist(0.5, 20.0);
    std::uniform_real_distribution<double> z_dist(0.0, 1.0);

    // Terminating 2F1 against naive Pochhammer term summation.
    double hyp_err = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = n_dist(rng);
        const double b = b_dist(rng);
        const double c = c_dist(rng);
        const double z = z_dist(rng);
        const double fast = hyp2f1_terminating(n, b, c, z);
        double naive = 0.0, scale = 0.0, term = 1.0;
        for (int k = 0; k <= n; ++k) {
            naive += term;
            scale += std::fabs(term);
            term *= (-n + k) * (b + k) / ((c + k) * (k + 1.0)) * z;
        }
        hyp_err = std::max(hyp_err, std::fabs(fast - naive) / std::max(scale, 1.0));
    }

    // ln_gamma recurrence Gamma(x+1) = x Gamma(x).
    std::uniform_real_distribution<double> x_dist(0.1, 30.0);
    double lg_err = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const double x = x_dist(rng);
        const double lhs = std::exp(ln_gamma(x + 1.0));
        const double rhs = x * std::exp(ln_gamma(x));
        lg_err = std::max(lg_err, std::fabs(lhs - rhs) / rhs);
    }

    // Numerov convergence order over three step halvings on an equation with
    // a known solution: v(t) = exp(sin t) satisfies v'' = (cos^2 t - sin t) v.
    const auto W = [](double t) {
        return std::cos(t) * std::cos(t) - std::sin(t);
    };
    const double t1 = 2.0;
    const double exact = std::exp(std::sin(t1));
    std::vector<double> errs;
    for (int steps : {50, 100, 200, 400}) {
        const double h = t1 / steps;
        const double got = numerov_propagate(W, 0.0, t1, steps, 1.0,
                                             std::exp(std::sin(h)));
        errs.push_back(std::fabs(got - exact));
    }
    bool order4 = true;
    std::ostringstream ratios;
    for (size_t i = 0; i + 1 < errs.size(); ++i) {
        const double ratio = errs[i] / std::max(errs[i + 1], 1e-300);
        ratios << (i ? ", " : "") << ratio;
        if (ratio < 8.0) order4 = false;
    }
    res.measured = hyp_err;
    res.pass = hyp_err <= 1e-13 && lg_err <= 1e-12 && order4;
    std::ostringstream det;
    det << "2F1 err=" << hyp_err << ", ln_gamma err=" << lg_err
        << ", halving ratios=[" << ratios.str() << "]";
    res.detail = det.str();
    res.seconds = elapsed_s(t0);
    return res;
}

CriterionResult coupled_equation_residual(int index, const std::vector<GridLevel>& dirac) {
    const auto t0 = Clock::now();
    CriterionResult res;
    res.index = index;
    res.name = "Dirac first-order coupled-equation residual";
    res.threshold = 1e-8;
    const UnitSystem units;
    for (const auto& gl : dirac) {
        const RadialFunction f = dirac_upper(gl.spec, units, gl.level);
        const RadialFunction g = dirac_lower(gl.spec, units, gl.level, f);
        const double mc2 = gl.spec.m0;
        const double kappa = gl.qn.kappa;
        for (int i = 0; i <= 256; ++i) {
            const double r = 0.1 + (30.0 - 0.1) * i / 256.0;
            const double lhs = units.hbar * units.c *
                               (f.derivative(r) - kappa * f.value(r) / r);
            const double rhs = (mc2 + gl.level.E) * g.value(r);
            const double dev = std::fabs(lhs - rhs);
            if (dev > res.measured) {
                res.measured = dev;
                res.detail = describe(gl) + " at r=" + std::to_string(r);
            }
        }
    }
    res.pass = res.measured <= res.threshold;
    res.seconds = elapsed_s(t0);
    return res;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const VerifyOptions& options) {
    std::vector<GridLevel> kg_cache, dirac_cache;
    const auto kg = [&]() -> const std::vector<GridLevel>& {
        if (kg_cache.empty()) kg_cache = kg_grid_levels();
        return kg_cache;
    };
    const auto dirac = [&]() -> const std::vector<GridLevel>& {
        if (dirac_cache.empty()) dirac_cache = dirac_grid_levels();
        return dirac_cache;
    };
    const auto want = [&](int i) {
        return options.only_criterion == 0 || options.only_criterion == i;
    };

    std::vector<CriterionResult> out;
    if (want(1))
        out.push_back(oracle_equivalence(1, "Klein-Gordon oracle equivalence", kg(),
                                         options, /*allow_fault=*/true));
    if (want(2))
        out.push_back(oracle_equivalence(2, "Dirac radial oracle equivalence", dirac(),
                                         options, /*allow_fault=*/false));
    if (want(3)) out.push_back(coulomb_limit(3));
    if (want(4)) out.push_back(closed_form_consistency(4, kg(), dirac()));
    if (want(5)) out.push_back(normalization(5, kg()));
    if (want(6)) out.push_back(node_theorem(6, kg(), dirac()));
    if (want(7)) out.push_back(dirac_kg_degeneracy(7));
    if (want(8)) out.push_back(kernel_checks(8));
    if (want(9)) out.push_back(coupled_equation_residual(9, dirac()));
    return out;
}

}  // namespace relspec
