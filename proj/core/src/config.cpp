#include "relspec/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace relspec {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return {};
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

struct Entry {
    std::string value;
    int line = 0;
    mutable bool used = false;
};

using Section = std::map<std::string, Entry>;

struct ParsedFile {
    std::map<std::string, Section> sections;
    std::map<std::string, int> section_lines;
};

ParsedFile tokenize(const std::string& text) {
    ParsedFile pf;
    std::istringstream in(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const size_t hash = line.find_first_of("#;");
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError("unterminated section header", lineno);
            section = trim(line.substr(1, line.size() - 2));
            if (section.empty()) throw ConfigError("empty section name", lineno);
            if (pf.sections.count(section))
                throw ConfigError("duplicate section [" + section + "]", lineno);
            pf.sections[section];
            pf.section_lines[section] = lineno;
            continue;
        }
        const size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("expected 'key = value'", lineno);
        if (section.empty())
            throw ConfigError("key outside any [section]", lineno);
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError("empty key", lineno);
        auto& sec = pf.sections[section];
        if (sec.count(key))
            throw ConfigError("duplicate key", lineno, section + "." + key);
        sec[key] = {value, lineno, false};
    }
    return pf;
}

class Reader {
  public:
    Reader(const ParsedFile& pf, std::string section)
        : section_(std::move(section)) {
        auto it = pf.sections.find(section_);
        sec_ = it == pf.sections.end() ? nullptr : &it->second;
    }

    bool present() const { return sec_ != nullptr; }
    bool has(const std::string& key) const { return sec_ && sec_->count(key); }

    const Entry* find(const std::string& key) const {
        if (!sec_) return nullptr;
        auto it = sec_->find(key);
        if (it == sec_->end()) return nullptr;
        it->second.used = true;
        return &it->second;
    }

    double number(const std::string& key, double fallback) const {
        const Entry* e = find(key);
        return e ? parse_number(*e, key) : fallback;
    }

    double required_number(const std::string& key) const {
        const Entry* e = find(key);
        if (!e)
            throw ConfigError("missing required key '" + key + "'", 0,
                              section_ + "." + key);
        return parse_number(*e, key);
    }

    int integer(const std::string& key, int fallback) const {
        const Entry* e = find(key);
        if (!e) return fallback;
        const double v = parse_number(*e, key);
        const int i = static_cast<int>(v);
        if (static_cast<double>(i) != v)
            throw ConfigError("expected an integer", e->line, section_ + "." + key);
        return i;
    }

    std::string text(const std::string& key, const std::string& fallback) const {
        const Entry* e = find(key);
        return e ? e->value : fallback;
    }

    std::vector<double> number_list(const std::string& key) const {
        const Entry* e = find(key);
        std::vector<double> out;
        if (!e) return out;
        for (const std::string& tok : split(e->value))
            out.push_back(parse_token(tok, e->line, key));
        return out;
    }

    std::vector<int> integer_list(const std::string& key,
                                  std::vector<int> fallback) const {
        const Entry* e = find(key);
        if (!e) return fallback;
        std::vector<int> out;
        for (const std::string& tok : split(e->value)) {
            const double v = parse_token(tok, e->line, key);
            const int i = static_cast<int>(v);
            if (static_cast<double>(i) != v)
                throw ConfigError("expected integers", e->line, section_ + "." + key);
            out.push_back(i);
        }
        if (out.empty())
            throw ConfigError("list must be non-empty", e->line, section_ + "." + key);
        return out;
    }

    void reject_unknown(std::initializer_list<const char*> known) const {
        if (!sec_) return;
        for (const auto& [key, entry] : *sec_) {
            if (std::find_if(known.begin(), known.end(), [&](const char* k) {
                    return key == k;
                }) == known.end())
                throw ConfigError("unknown key", entry.line, section_ + "." + key);
        }
    }

  private:
    static std::vector<std::string> split(const std::string& s) {
        std::vector<std::string> out;
        std::string cleaned = s;
        std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
        std::istringstream in(cleaned);
        std::string tok;
        while (in >> tok) out.push_back(tok);
        return out;
    }

    double parse_token(const std::string& tok, int line, const std::string& key) const {
        try {
            size_t pos = 0;
            const double v = std::stod(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument(tok);
            return v;
        } catch (const std::exception&) {
            throw ConfigError("not a number: '" + tok + "'", line, section_ + "." + key);
        }
    }

    double parse_number(const Entry& e, const std::string& key) const {
        return parse_token(e.value, e.line, key);
    }

    std::string section_;
    const Section* sec_ = nullptr;
};

}  // namespace

std::string ConfigError::format(const std::string& message, int line,
                                const std::string& field) {
    std::ostringstream os;
    os << "config error";
    if (line > 0) os << " (line " << line << ")";
    if (!field.empty()) os << " [" << field << "]";
    os << ": " << message;
    return os.str();
}

RunConfig parse_config_text(const std::string& text) {
    const ParsedFile pf = tokenize(text);
    for (const auto& [name, sec] : pf.sections) {
        static const char* known[] = {"potential", "quantum", "solver",
                                      "output",    "units",   "grid", "sweep"};
        if (std::find_if(std::begin(known), std::end(known), [&](const char* k) {
                return name == k;
            }) == std::end(known))
            throw ConfigError("unknown section [" + name + "]",
                              pf.section_lines.at(name));
    }

    RunConfig cfg;

    const Reader pot(pf, "potential");
    const std::string type = pot.text("type", "two_term");
    const double mass = pot.number("mass", 1.0);
    if (type == "two_term") {
        pot.reject_unknown({"type", "V0", "V1", "beta", "q", "mass"});
        cfg.potential_type = PotentialType::TwoTerm;
        cfg.spec.V0 = pot.number("V0", 0.0);
        cfg.spec.V1 = pot.number("V1", 0.0);
        cfg.spec.beta = pot.required_number("beta");
        cfg.spec.q = pot.number("q", 1.0);
        cfg.spec.m0 = mass;
    } else if (type == "manning_rosen") {
        pot.reject_unknown({"type", "A", "alpha", "b", "mass"});
        cfg.potential_type = PotentialType::ManningRosen;
        cfg.spec = manning_rosen_spec(pot.required_number("A"),
                                      pot.required_number("alpha"),
                                      pot.required_number("b"), mass);
    } else if (type == "hulthen") {
        pot.reject_unknown({"type", "V0", "beta", "mass"});
        cfg.potential_type = PotentialType::Hulthen;
        cfg.spec = hulthen_spec(pot.required_number("V0"),
                                pot.required_number("beta"), mass);
    } else if (type == "coulomb") {
        pot.reject_unknown({"type", "zeta", "beta", "mass"});
        cfg.potential_type = PotentialType::Coulomb;
        cfg.coulomb_zeta = pot.required_number("zeta");
        const double beta = pot.number("beta", 1e-4);
        cfg.spec = hulthen_spec(cfg.coulomb_zeta * beta, beta, mass);
    } else {
        const Entry* e = pot.find("type");
        throw ConfigError("unknown potential type '" + type + "'", e ? e->line : 0,
                          "potential.type");
    }
    try {
        cfg.spec.validate();
    } catch (const std::exception& ex) {
        throw ConfigError(ex.what(), pf.section_lines.count("potential")
                                         ? pf.section_lines.at("potential")
                                         : 0,
                          "potential");
    }

    const Reader quantum(pf, "quantum");
    quantum.reject_unknown({"equation", "n", "ell", "kappa", "component"});
    const std::string eq = quantum.text("equation", "kg");
    if (eq == "kg")
        cfg.equation = Equation::KleinGordon;
    else if (eq == "dirac")
        cfg.equation = Equation::Dirac;
    else
        throw ConfigError("equation must be 'kg' or 'dirac'", 0, "quantum.equation");
    cfg.n_values = quantum.integer_list("n", {0});
    cfg.ell_values = quantum.integer_list("ell", {0});
    cfg.kappa_values = quantum.integer_list("kappa", {1});
    for (int n : cfg.n_values)
        if (n < 0) throw ConfigError("n must be >= 0", 0, "quantum.n");
    for (int ell : cfg.ell_values)
        if (ell < 0) throw ConfigError("ell must be >= 0", 0, "quantum.ell");
    for (int kappa : cfg.kappa_values)
        if (kappa == 0) throw ConfigError("kappa must be nonzero", 0, "quantum.kappa");

    const Reader solver(pf, "solver");
    solver.reject_unknown({"grid", "tol", "margin"});
    cfg.solver.grid_points = solver.integer("grid", cfg.solver.grid_points);
    cfg.solver.tolerance = solver.number("tol", cfg.solver.tolerance);
    cfg.solver.window_margin = solver.number("margin", cfg.solver.window_margin);
    if (cfg.solver.grid_points < 64)
        throw ConfigError("grid must be >= 64", 0, "solver.grid");
    if (!(cfg.solver.tolerance > 0.0))
        throw ConfigError("tol must be > 0", 0, "solver.tol");

    const Reader output(pf, "output");
    output.reject_unknown({"format", "path"});
    const std::string fmt = output.text("format", "json");
    if (fmt == "json")
        cfg.format = OutputFormat::Json;
    else if (fmt == "csv")
        cfg.format = OutputFormat::Csv;
    else
        throw ConfigError("format must be 'json' or 'csv'", 0, "output.format");
    cfg.out_path = output.text("path", "");

    const Reader units(pf, "units");
    units.reject_unknown({"hbar", "c"});
    cfg.units.hbar = units.number("hbar", 1.0);
    cfg.units.c = units.number("c", 1.0);
    try {
        cfg.units.validate();
    } catch (const std::exception& ex) {
        throw ConfigError(ex.what(), 0, "units");
    }

    const Reader grid(pf, "grid");
    grid.reject_unknown({"r_min", "r_max", "points"});
    cfg.r_min = grid.number("r_min", cfg.r_min);
    cfg.r_max = grid.number("r_max", cfg.r_max);
    cfg.r_points = grid.integer("points", cfg.r_points);
    if (!(cfg.r_min > 0.0) || !(cfg.r_max > cfg.r_min))
        throw ConfigError("requires 0 < r_min < r_max", 0, "grid");
    if (cfg.r_points < 1)
        throw ConfigError("points must be >= 1", 0, "grid.points");

    const Reader sweep(pf, "sweep");
    sweep.reject_unknown({"parameter", "values"});
    if (sweep.present()) {
        cfg.sweep_parameter = sweep.text("parameter", "");
        cfg.sweep_values = sweep.number_list("values");
        static const char* sweepable[] = {"V0", "V1", "beta", "q", "mass"};
        if (std::find_if(std::begin(sweepable), std::end(sweepable),
                         [&](const char* k) { return cfg.sweep_parameter == k; }) ==
            std::end(sweepable))
            throw ConfigError("parameter must be one of V0, V1, beta, q, mass",
                              pf.section_lines.at("sweep"), "sweep.parameter");
        if (cfg.sweep_values.empty())
            throw ConfigError("values must be non-empty",
                              pf.section_lines.at("sweep"), "sweep.values");
    }

    return cfg;
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

}  // namespace relspec
