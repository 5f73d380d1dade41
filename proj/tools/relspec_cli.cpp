// Command-line front end: solve spectra, emit wavefunction tables, run the
// verification suite, and sweep a potential parameter.
//
// Exit codes: 0 success, 1 config error, 2 solver diagnostic,
// 3 verification failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "relspec/config.hpp"
#include "relspec/core.hpp"
#include "relspec/spectrum.hpp"
#include "relspec/verify.hpp"
#include "relspec/wavefunction.hpp"

using json = nlohmann::ordered_json;
using namespace relspec;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitSolver = 2;
constexpr int kExitVerify = 3;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

int emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return kExitOk;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open output file '" << out_path << "'\n";
        return kExitConfig;
    }
    out << text;
    return kExitOk;
}

struct CommonFlags {
    std::string config_path;
    std::string format;    // "", "json", "csv"
    std::string out_path;
    std::string equation;  // "", "kg", "dirac"
    double tol = 0.0;      // 0 = keep config value
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--config", flags.config_path, "Configuration file path");
    cmd->add_option("--format", flags.format, "Output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", flags.out_path, "Output file (default: stdout)");
    cmd->add_option("--equation", flags.equation, "Wave equation: kg or dirac")
        ->check(CLI::IsMember({"kg", "dirac"}));
    cmd->add_option("--tol", flags.tol, "Solver energy tolerance")
        ->check(CLI::PositiveNumber);
}

RunConfig load_config(const CommonFlags& flags) {
    RunConfig cfg;
    if (!flags.config_path.empty()) cfg = parse_config_file(flags.config_path);
    if (flags.format == "json") cfg.format = OutputFormat::Json;
    if (flags.format == "csv") cfg.format = OutputFormat::Csv;
    if (!flags.out_path.empty()) cfg.out_path = flags.out_path;
    if (flags.equation == "kg") cfg.equation = Equation::KleinGordon;
    if (flags.equation == "dirac") cfg.equation = Equation::Dirac;
    if (flags.tol > 0.0) cfg.solver.tolerance = flags.tol;
    return cfg;
}

std::vector<QuantumNumbers> quantum_list(const RunConfig& cfg) {
    std::vector<QuantumNumbers> out;
    for (int n : cfg.n_values) {
        if (cfg.equation == Equation::KleinGordon)
            for (int ell : cfg.ell_values) out.push_back(QuantumNumbers::kg(n, ell));
        else
            for (int kappa : cfg.kappa_values)
                out.push_back(QuantumNumbers::dirac(n, kappa));
    }
    return out;
}

const char* status_name(SolveStatus s) {
    switch (s) {
        case SolveStatus::Converged: return "converged";
        case SolveStatus::NoBoundState: return "no_bound_state";
        case SolveStatus::MultipleRoots: return "multiple_roots";
    }
    return "unknown";
}

struct SolveRow {
    QuantumNumbers qn;
    SolveResult result;
    std::optional<double> sweep_value;  // set by the sweep command
};

json row_to_json(const SolveRow& row, const std::string& sweep_parameter) {
    json rec;
    if (row.sweep_value) rec[sweep_parameter] = fmt(*row.sweep_value);
    rec["n"] = row.qn.n;
    rec["ell_or_kappa"] =
        row.qn.equation == Equation::KleinGordon ? row.qn.ell : row.qn.kappa;
    rec["component"] =
        row.qn.equation == Equation::KleinGordon
            ? "kg"
            : (row.qn.component == Component::Upper ? "upper" : "lower");
    if (row.result.level) {
        const EnergyLevel& lv = *row.result.level;
        rec["E"] = fmt(lv.E);
        rec["residual"] = fmt(lv.residual);
        rec["A1"] = fmt(lv.coeffs.A1);
        rec["A2"] = fmt(lv.coeffs.A2);
        rec["A3sq"] = fmt(lv.coeffs.A3sq);
        rec["D"] = fmt(lv.coeffs.D);
    } else {
        for (const char* key : {"E", "residual", "A1", "A2", "A3sq", "D"})
            rec[key] = nullptr;
    }
    rec["status"] = status_name(row.result.status);
    return rec;
}

std::string rows_to_text(const std::vector<SolveRow>& rows, const RunConfig& cfg,
                         const std::string& sweep_parameter) {
    if (cfg.format == OutputFormat::Json) {
        json doc;
        doc["records"] = json::array();
        for (const SolveRow& row : rows)
            doc["records"].push_back(row_to_json(row, sweep_parameter));
        return doc.dump(2) + "\n";
    }
    std::ostringstream os;
    if (!sweep_parameter.empty()) os << sweep_parameter << ",";
    os << "n,ell_or_kappa,component,E,residual,A1,A2,A3sq,D,status\n";
    for (const SolveRow& row : rows) {
        if (row.sweep_value) os << fmt(*row.sweep_value) << ",";
        os << row.qn.n << ","
           << (row.qn.equation == Equation::KleinGordon ? row.qn.ell : row.qn.kappa)
           << ","
           << (row.qn.equation == Equation::KleinGordon
                   ? "kg"
                   : (row.qn.component == Component::Upper ? "upper" : "lower"));
        if (row.result.level) {
            const EnergyLevel& lv = *row.result.level;
            os << "," << fmt(lv.E) << "," << fmt(lv.residual) << ","
               << fmt(lv.coeffs.A1) << "," << fmt(lv.coeffs.A2) << ","
               << fmt(lv.coeffs.A3sq) << "," << fmt(lv.coeffs.D);
        } else {
            os << ",,,,,,";
        }
        os << "," << status_name(row.result.status) << "\n";
    }
    return os.str();
}

int solve_rows(const RunConfig& cfg, const PotentialSpec& spec,
               std::optional<double> sweep_value, std::vector<SolveRow>& rows,
               bool& diagnostic) {
    for (const QuantumNumbers& qn : quantum_list(cfg)) {
        SolveRow row;
        row.qn = qn;
        row.sweep_value = sweep_value;
        row.result = solve_level(spec, cfg.units, qn, cfg.solver);
        if (row.result.status == SolveStatus::MultipleRoots) diagnostic = true;
        rows.push_back(std::move(row));
    }
    return kExitOk;
}

int cmd_solve(const CommonFlags& flags) {
    const RunConfig cfg = load_config(flags);
    std::vector<SolveRow> rows;
    bool diagnostic = false;
    solve_rows(cfg, cfg.spec, std::nullopt, rows, diagnostic);
    const int rc = emit(rows_to_text(rows, cfg, ""), cfg.out_path);
    if (rc != kExitOk) return rc;
    if (diagnostic) {
        std::cerr << "error: solver reported an ambiguous root (multiple_roots)\n";
        return kExitSolver;
    }
    return kExitOk;
}

int cmd_sweep(const CommonFlags& flags) {
    const RunConfig cfg = load_config(flags);
    if (cfg.sweep_parameter.empty())
        throw ConfigError("the sweep command requires a [sweep] section");
    std::vector<SolveRow> rows;
    bool diagnostic = false;
    for (double value : cfg.sweep_values) {
        PotentialSpec spec = cfg.spec;
        if (cfg.sweep_parameter == "V0") spec.V0 = value;
        else if (cfg.sweep_parameter == "V1") spec.V1 = value;
        else if (cfg.sweep_parameter == "beta") spec.beta = value;
        else if (cfg.sweep_parameter == "q") spec.q = value;
        else if (cfg.sweep_parameter == "mass") spec.m0 = value;
        spec.validate();
        solve_rows(cfg, spec, value, rows, diagnostic);
    }
    const int rc = emit(rows_to_text(rows, cfg, cfg.sweep_parameter), cfg.out_path);
    if (rc != kExitOk) return rc;
    if (diagnostic) {
        std::cerr << "error: solver reported an ambiguous root (multiple_roots)\n";
        return kExitSolver;
    }
    return kExitOk;
}

int cmd_wavefunction(const CommonFlags& flags) {
    const RunConfig cfg = load_config(flags);
    const QuantumNumbers qn = quantum_list(cfg).front();
    const SolveResult sr = solve_level(cfg.spec, cfg.units, qn, cfg.solver);
    if (sr.status != SolveStatus::Converged) {
        std::cerr << "error: requested level has no bound state ("
                  << status_name(sr.status) << ")\n";
        return kExitSolver;
    }
    const EnergyLevel& lv = *sr.level;
    const bool dirac = qn.equation == Equation::Dirac;
    const RadialFunction primary = dirac ? dirac_upper(cfg.spec, cfg.units, lv)
                                         : kg_wavefunction(cfg.spec, cfg.units, lv);
    std::optional<RadialFunction> lower;
    if (dirac) lower = dirac_lower(cfg.spec, cfg.units, lv, primary);

    std::vector<double> r_grid(cfg.r_points);
    for (int i = 0; i < cfg.r_points; ++i)
        r_grid[i] = cfg.r_points == 1
                        ? cfg.r_min
                        : cfg.r_min + (cfg.r_max - cfg.r_min) * i / (cfg.r_points - 1);

    std::string text;
    if (cfg.format == OutputFormat::Json) {
        json doc;
        doc["meta"] = {{"N", fmt(primary.norm_constant())},
                       {"A1", fmt(lv.coeffs.A1)},
                       {"D", fmt(lv.coeffs.D)},
                       {"E", fmt(lv.E)}};
        doc["rows"] = json::array();
        for (double r : r_grid) {
            json rec;
            rec["r"] = fmt(r);
            rec["z"] = fmt(primary.z_of_r(r));
            if (dirac) {
                rec["f"] = fmt(primary.value(r));
                rec["g"] = fmt(lower->value(r));
            } else {
                rec["u"] = fmt(primary.value(r));
            }
            doc["rows"].push_back(rec);
        }
        text = doc.dump(2) + "\n";
    } else {
        std::ostringstream os;
        os << "# N=" << fmt(primary.norm_constant()) << " A1=" << fmt(lv.coeffs.A1)
           << " D=" << fmt(lv.coeffs.D) << " E=" << fmt(lv.E) << "\n";
        os << (dirac ? "r,z,f,g\n" : "r,z,u\n");
        for (double r : r_grid) {
            os << fmt(r) << "," << fmt(primary.z_of_r(r)) << ","
               << fmt(primary.value(r));
            if (dirac) os << "," << fmt(lower->value(r));
            os << "\n";
        }
        text = os.str();
    }
    return emit(text, cfg.out_path);
}

int cmd_verify(const CommonFlags& flags, const VerifyOptions& options) {
    const RunConfig cfg = load_config(flags);  // validates when --config given
    const auto results = run_acceptance(options);
    std::ostringstream report;
    bool all_pass = true;
    std::string first_failure;
    for (const CriterionResult& cr : results) {
        report << "criterion " << cr.index << " [" << (cr.pass ? "pass" : "FAIL")
               << "] " << cr.name << ": measured=" << fmt(cr.measured)
               << " threshold=" << fmt(cr.threshold);
        if (!cr.detail.empty()) report << " (" << cr.detail << ")";
        report << "\n";
        if (!cr.pass && all_pass) {
            all_pass = false;
            first_failure = cr.name;
        }
    }
    if (!cfg.out_path.empty()) {
        json doc;
        doc["criteria"] = json::array();
        for (const CriterionResult& cr : results)
            doc["criteria"].push_back({{"index", cr.index},
                                       {"name", cr.name},
                                       {"pass", cr.pass},
                                       {"measured", fmt(cr.measured)},
                                       {"threshold", fmt(cr.threshold)},
                                       {"detail", cr.detail}});
        const int rc = emit(doc.dump(2) + "\n", cfg.out_path);
        if (rc != kExitOk) return rc;
    }
    std::cout << report.str();
    if (!all_pass) {
        std::cerr << "error: verification failed at criterion '" << first_failure
                  << "'\n";
        return kExitVerify;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bound states of the two-term screened exponential potential"};
    app.require_subcommand(1);

    CommonFlags solve_flags, wf_flags, verify_flags, sweep_flags;
    VerifyOptions verify_options;

    CLI::App* solve = app.add_subcommand("solve", "Solve the requested energy levels");
    add_common(solve, solve_flags);

    CLI::App* wf = app.add_subcommand("wavefunction", "Emit a radial wavefunction table");
    add_common(wf, wf_flags);

    CLI::App* verify = app.add_subcommand("verify", "Run the acceptance suite");
    add_common(verify, verify_flags);
    verify->add_flag("--inject-sign-fault", verify_options.inject_sign_fault,
                     "Test hook: corrupt a closed-form sign; the suite must fail");
    verify->add_option("--oracle-steps", verify_options.oracle_steps,
                       "Base grid resolution of the numerical oracle")
        ->check(CLI::Range(10000, 10000000));
    verify->add_option("--criterion", verify_options.only_criterion,
                       "Run a single criterion by index (0 = all)")
        ->check(CLI::Range(0, 9));

    CLI::App* sweep = app.add_subcommand("sweep", "Solve across a parameter sweep");
    add_common(sweep, sweep_flags);

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) return cmd_solve(solve_flags);
        if (wf->parsed()) return cmd_wavefunction(wf_flags);
        if (verify->parsed()) return cmd_verify(verify_flags, verify_options);
        if (sweep->parsed()) return cmd_sweep(sweep_flags);
    } catch (const ConfigError& e) {
        std::cerr << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSolver;
    }
    return kExitOk;
}
