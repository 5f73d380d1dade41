#pragma once

// Run configuration for the command-line tool: a small INI-style file with
// [section] headers and key = value lines. '#' and ';' start comments.
// The full grammar is documented in the top-level README.

#include <stdexcept>
#include <string>
#include <vector>

#include "relspec/core.hpp"
#include "relspec/spectrum.hpp"

namespace relspec {

class ConfigError : public std::runtime_error {
  public:
    ConfigError(const std::string& message, int line = 0, std::string field = {})
        : std::runtime_error(format(message, line, field)),
          line_(line),
          field_(std::move(field)) {}
    int line() const { return line_; }
    const std::string& field() const { return field_; }

  private:
    static std::string format(const std::string& message, int line,
                              const std::string& field);
    int line_ = 0;
    std::string field_;
};

enum class PotentialType { TwoTerm, ManningRosen, Hulthen, Coulomb };
enum class OutputFormat { Json, Csv };

struct RunConfig {
    PotentialType potential_type = PotentialType::TwoTerm;
    PotentialSpec spec;            // resolved two-term parameters
    double coulomb_zeta = 0.0;     // kept for the coulomb preset record

    Equation equation = Equation::KleinGordon;
    std::vector<int> n_values = {0};
    std::vector<int> ell_values = {0};    // Klein-Gordon
    std::vector<int> kappa_values = {1};  // Dirac

    SolverConfig solver;
    UnitSystem units;

    OutputFormat format = OutputFormat::Json;
    std::string out_path;  // empty = stdout

    // Radial grid for the wavefunction command.
    double r_min = 0.01;
    double r_max = 30.0;
    int r_points = 200;

    // Sweep command: vary one key of the potential section.
    std::string sweep_parameter;
    std::vector<double> sweep_values;
};

// Parses and validates; throws ConfigError with line/field diagnostics.
RunConfig parse_config_text(const std::string& text);
RunConfig parse_config_file(const std::string& path);

}  // namespace relspec
