#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#ifndef RELSPEC_CLI_PATH
#error "RELSPEC_CLI_PATH must point at the command-line binary"
#endif

namespace {

std::string temp_path(const std::string& suffix) {
    static int counter = 0;
    return "/tmp/relspec_cli_" + std::to_string(::getpid()) + "_" +
           std::to_string(counter++) + suffix;
}

struct RunOutput {
    int exit_code = -1;
    std::string stdout_text;
};

RunOutput run_cli(const std::string& args) {
    const std::string out_file = temp_path(".out");
    const std::string cmd =
        std::string(RELSPEC_CLI_PATH) + " " + args + " > " + out_file + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    RunOutput res;
    res.exit_code = WEXITSTATUS(status);
    std::ifstream in(out_file, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    res.stdout_text = buf.str();
    std::remove(out_file.c_str());
    return res;
}

std::string write_config(const std::string& text) {
    const std::string path = temp_path(".ini");
    std::ofstream out(path);
    out << text;
    return path;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) out.push_back(line);
    return out;
}

const char* kTwoTermConfig = R"(
[potential]
type = two_term
V0 = 1.0
beta = 0.2

[quantum]
equation = kg
n = 0 1 2
ell = 0
)";

}  // namespace

TEST_CASE("solve emits one record per level with frozen energies") {
    const std::string cfg = write_config(kTwoTermConfig);
    const RunOutput res = run_cli("solve --config " + cfg + " --format csv");
    std::remove(cfg.c_str());
    CHECK(res.exit_code == 0);
    const auto lines = lines_of(res.stdout_text);
    REQUIRE(lines.size() == 4);
    CHECK(lines[0] == "n,ell_or_kappa,component,E,residual,A1,A2,A3sq,D,status");
    CHECK(lines[1].find("-0.8880510154") != std::string::npos);
    CHECK(lines[2].find("-0.600000000000") != std::string::npos);
    CHECK(lines[3].find("-0.2371103686") != std::string::npos);
    for (int i = 1; i <= 3; ++i)
        CHECK(lines[i].find("converged") != std::string::npos);
}

TEST_CASE("json output round-trips and is byte-stable") {
    const std::string cfg = write_config(kTwoTermConfig);
    const RunOutput a = run_cli("solve --config " + cfg);
    const RunOutput b = run_cli("solve --config " + cfg);
    std::remove(cfg.c_str());
    CHECK(a.exit_code == 0);
    CHECK(a.stdout_text == b.stdout_text);  // byte-stable
    const auto doc = nlohmann::ordered_json::parse(a.stdout_text);
    CHECK(doc["records"].size() == 3);
    CHECK(doc.dump(2) + "\n" == a.stdout_text);  // re-emission is identity
}

TEST_CASE("free potential reports no bound states with exit 0") {
    const std::string cfg = write_config(
        "[potential]\nV0 = 0\nV1 = 0\nbeta = 0.5\n[quantum]\nn = 0 1\nell = 0\n");
    const RunOutput res = run_cli("solve --config " + cfg + " --format csv");
    std::remove(cfg.c_str());
    CHECK(res.exit_code == 0);
    const auto lines = lines_of(res.stdout_text);
    REQUIRE(lines.size() == 3);
    CHECK(lines[1].find("no_bound_state") != std::string::npos);
    CHECK(lines[2].find("no_bound_state") != std::string::npos);
}

TEST_CASE("config errors exit 1") {
    const std::string cfg = write_config("[potential]\nbeta = broken\n");
    CHECK(run_cli("solve --config " + cfg).exit_code == 1);
    std::remove(cfg.c_str());
    CHECK(run_cli("solve --config /nonexistent.ini").exit_code == 1);
    const std::string cfg2 =
        write_config("[potential]\nbeta = 0.2\nV0 = 1\n[quantum]\nn =\n");
    CHECK(run_cli("verify --config " + cfg2).exit_code == 1);
    std::remove(cfg2.c_str());
}

TEST_CASE("wavefunction tables") {
    const std::string base = R"(
[potential]
V0 = 1.0
beta = 0.2

[quantum]
equation = kg
ell = 0
)";
    SUBCASE("ground state has no sign change; n=2 has two") {
        for (int n : {0, 2}) {
            const std::string cfg = write_config(
                base + "n = " + std::to_string(n) + "\n[grid]\npoints = 400\n");
            const RunOutput res =
                run_cli("wavefunction --config " + cfg + " --format csv");
            std::remove(cfg.c_str());
            REQUIRE(res.exit_code == 0);
            const auto lines = lines_of(res.stdout_text);
            REQUIRE(lines.size() == 402);  // meta + header + 400 rows
            CHECK(lines[0].rfind("# N=", 0) == 0);
            CHECK(lines[1] == "r,z,u");
            int sign_changes = 0;
            double prev = 0.0;
            for (size_t i = 2; i < lines.size(); ++i) {
                const size_t comma = lines[i].rfind(',');
                const double u = std::stod(lines[i].substr(comma + 1));
                if (i > 2 && (u < 0.0) != (prev < 0.0)) ++sign_changes;
                prev = u;
            }
            CHECK(sign_changes == n);
        }
    }
    SUBCASE("grid of one point yields one data row") {
        const std::string cfg = write_config(base + "n = 0\n[grid]\npoints = 1\n");
        const RunOutput res = run_cli("wavefunction --config " + cfg + " --format csv");
        std::remove(cfg.c_str());
        REQUIRE(res.exit_code == 0);
        CHECK(lines_of(res.stdout_text).size() == 3);
    }
    SUBCASE("dirac output carries f and g columns") {
        const std::string cfg = write_config(
            "[potential]\nV0 = 1.0\nbeta = 0.2\n[quantum]\nequation = dirac\nn = 0\n"
            "kappa = 1\n[grid]\npoints = 3\n");
        const RunOutput res = run_cli("wavefunction --config " + cfg + " --format csv");
        std::remove(cfg.c_str());
        REQUIRE(res.exit_code == 0);
        CHECK(lines_of(res.stdout_text)[1] == "r,z,f,g");
    }
    SUBCASE("unbound request exits 2") {
        const std::string cfg = write_config(
            "[potential]\nV0 = 0\nbeta = 0.2\n[quantum]\nn = 0\nell = 0\n");
        CHECK(run_cli("wavefunction --config " + cfg).exit_code == 2);
        std::remove(cfg.c_str());
    }
}

TEST_CASE("sweep emits the parameter column") {
    const std::string cfg = write_config(R"(
[potential]
V0 = 1.0
beta = 0.2

[quantum]
n = 0
ell = 0

[sweep]
parameter = V0
values = 0.5 1.0
)");
    const RunOutput res = run_cli("sweep --config " + cfg + " --format csv");
    std::remove(cfg.c_str());
    CHECK(res.exit_code == 0);
    const auto lines = lines_of(res.stdout_text);
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] ==
          "V0,n,ell_or_kappa,component,E,residual,A1,A2,A3sq,D,status");
    CHECK(lines[1].rfind("0.5,", 0) == 0);
    CHECK(lines[2].rfind("1,", 0) == 0);
    // Deeper well binds more strongly.
    const double e_half = std::stod(lines_of(res.stdout_text)[1].substr(
        lines[1].find(",kg,") + 4));
    const double e_full = std::stod(lines_of(res.stdout_text)[2].substr(
        lines[2].find(",kg,") + 4));
    CHECK(e_full < e_half);
}

TEST_CASE("sweep without a sweep section exits 1") {
    const std::string cfg = write_config("[potential]\nbeta = 0.2\nV0 = 1\n");
    CHECK(run_cli("sweep --config " + cfg).exit_code == 1);
    std::remove(cfg.c_str());
}

TEST_CASE("equation flag overrides the config") {
    const std::string cfg = write_config(
        "[potential]\nV0 = 1.0\nbeta = 0.2\n[quantum]\nn = 0\nell = 0\nkappa = 1\n");
    const RunOutput res =
        run_cli("solve --config " + cfg + " --format csv --equation dirac");
    std::remove(cfg.c_str());
    CHECK(res.exit_code == 0);
    CHECK(lines_of(res.stdout_text)[1].find("upper") != std::string::npos);
}

TEST_CASE("output file writing matches stdout") {
    const std::string cfg = write_config(kTwoTermConfig);
    const std::string out = temp_path(".json");
    const RunOutput direct = run_cli("solve --config " + cfg);
    const RunOutput redirected = run_cli("solve --config " + cfg + " --out " + out);
    std::remove(cfg.c_str());
    CHECK(redirected.exit_code == 0);
    std::ifstream in(out, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    std::remove(out.c_str());
    CHECK(buf.str() == direct.stdout_text);
}
