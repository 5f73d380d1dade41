#pragma once

// The verification suite: every check the `verify` command and the acceptance
// test binary run, with its measured value and threshold.

#include <string>
#include <vector>

namespace relspec {

struct CriterionResult {
    int index = 0;
    std::string name;
    bool pass = false;
    double measured = 0.0;   // worst observed value of the criterion metric
    double threshold = 0.0;
    double seconds = 0.0;
    std::string detail;      // worst-case parameter set, or failure note
};

struct VerifyOptions {
    // Test hook: derives the analytic energies of the oracle-equivalence
    // check from the closed-form relation with the sign of the (n+1+D)^2
    // term flipped, which must make that criterion fail.
    bool inject_sign_fault = false;
    // Oracle grid resolution (steps before refinement).
    int oracle_steps = 200000;
    // Run a single criterion by index (0 = the full suite).
    int only_criterion = 0;
};

std::vector<CriterionResult> run_acceptance(const VerifyOptions& options = {});

}  // namespace relspec
