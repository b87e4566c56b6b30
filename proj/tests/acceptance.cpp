// Acceptance gate: one criterion per invocation, full-scale parameters.
// Usage: acceptance <A1..A12>; exit 0 iff the criterion passes.
#include <cstdio>
#include <exception>
#include <map>
#include <string>

#include "affine/experiments.hpp"

namespace {

struct Criterion {
    const char* id;
    const char* experiment;
    std::map<std::string, double> params;
};

const Criterion kCriteria[] = {
    {"A1", "denominator_identity", {}},
    {"A2", "character_duality", {}},
    {"A3", "verma_tri_oracle", {}},
    {"A4", "cone_stay", {}},
    {"A5", "string_law_independence", {}},
    {"A6", "verma_demazure_freq", {}},
    {"A7", "exp_strings_brownian", {}},
    {"A8", "phi_properties", {}},
    {"A9", "reconstruction", {}},
    {"A10", "kernel_oracle", {}},
    {"A11", "string_round_trip", {}},
    {"A12", "conditioned_string_density", {}},
};

}  // namespace

int main(int argc, char** argv) {
    const std::uint64_t seed = 20260823;
    std::string want = argc > 1 ? argv[1] : "";
    int exit_code = 0;
    bool matched = false;
    for (const Criterion& c : kCriteria) {
        if (!want.empty() && want != c.id) continue;
        matched = true;
        try {
            affine::ExperimentReport r = affine::run_experiment(c.experiment, c.params, seed);
            std::fputs(r.summary().c_str(), stdout);
            std::printf("%s %s: %s\n", c.id, c.experiment, r.pass ? "PASS" : "FAIL");
            if (!r.pass) exit_code = 1;
        } catch (const std::exception& e) {
            std::printf("%s %s: FAIL (%s)\n", c.id, c.experiment, e.what());
            exit_code = 1;
        }
        std::fflush(stdout);
    }
    if (!matched) {
        std::fprintf(stderr, "unknown criterion '%s' (expected A1..A12)\n", want.c_str());
        return 2;
    }
    return exit_code;
}
