// Acceptance gate: runs every verification criterion and prints one line per
// criterion. Exits non-zero if any fails.

#include <cstdio>
#include <cstring>
#include <exception>

#include "relspec/verify.hpp"

int main(int argc, char** argv) {
    relspec::VerifyOptions options;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--inject-sign-fault") == 0)
            options.inject_sign_fault = true;
        else if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc)
            options.only_criterion = std::atoi(argv[++i]);
        else {
            std::fprintf(stderr, "usage: %s [--inject-sign-fault] [--criterion N]\n",
                         argv[0]);
            return 2;
        }
    }

    try {
        const auto results = relspec::run_acceptance(options);
        bool all_pass = true;
        for (const auto& cr : results) {
            std::printf("criterion %d [%s] %s: measured=%.6g threshold=%.6g (%.1fs)%s%s\n",
                        cr.index, cr.pass ? "pass" : "FAIL", cr.name.c_str(),
                        cr.measured, cr.threshold, cr.seconds,
                        cr.detail.empty() ? "" : " -- ", cr.detail.c_str());
            all_pass = all_pass && cr.pass;
        }
        return all_pass ? 0 : 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "acceptance suite aborted: %s\n", e.what());
        return 2;
    }
}
