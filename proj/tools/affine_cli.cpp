// Command line front end: characters, walk sampling, and the experiment catalog.
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "affine/characters.hpp"
#include "affine/experiments.hpp"
#include "affine/path.hpp"
#include "affine/stochastic.hpp"

namespace {

std::uint64_t default_seed() {
    if (const char* env = std::getenv("AFFINE_SEED")) return std::strtoull(env, nullptr, 10);
    return 1;
}

void write_out(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::fputs(text.c_str(), stdout);
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + path);
    f << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"affine path model toolkit"};
    app.require_subcommand(1);
    std::uint64_t seed = default_seed();
    app.add_option("--seed", seed, "rng seed (default from AFFINE_SEED)");

    // char
    auto* cchar = app.add_subcommand("char", "evaluate a Weyl-Kac character at rho_vee/m");
    long long lam_n = 1, lam_m = 0;
    double char_scale = 2.0;
    std::string char_out;
    cchar->add_option("--lambda-n", lam_n, "level of lambda");
    cchar->add_option("--lambda-m", lam_m, "alpha1/2 coefficient of lambda");
    cchar->add_option("--m", char_scale, "evaluation scale m");
    cchar->add_option("--output", char_out, "CSV output path (default stdout)");

    // sample
    auto* csample = app.add_subcommand("sample", "emit walk and string traces as CSV");
    int sample_m = 2;
    long long horizon = 20, n_replicas = 5;
    std::string sample_out;
    csample->add_option("--m", sample_m, "walk scale m");
    csample->add_option("--horizon", horizon, "number of steps");
    csample->add_option("--n-replicas", n_replicas, "number of walks");
    csample->add_option("--output", sample_out, "CSV output path (default stdout)");

    // experiment
    auto* cexp = app.add_subcommand("experiment", "run a catalog experiment");
    std::string exp_name, exp_out;
    std::vector<std::string> kv;
    double opt_m = -1, opt_p = -1, opt_h = -1, opt_n = -1;
    cexp->add_option("name", exp_name, "experiment name")->required();
    cexp->add_option("--m", opt_m, "scale m");
    cexp->add_option("--p", opt_p, "string depth p");
    cexp->add_option("--horizon", opt_h, "walk horizon H");
    cexp->add_option("--n-replicas", opt_n, "replica count n");
    cexp->add_option("--param", kv, "extra key=value parameter (repeatable)");
    cexp->add_option("--output", exp_out, "CSV output path (default stdout)");

    auto* clist = app.add_subcommand("list", "print the experiment catalog");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (clist->parsed()) {
            for (const auto& n : affine::experiment_catalog()) std::printf("%s\n", n.c_str());
            return 0;
        }
        if (cchar->parsed()) {
            affine::Weight lam = double(lam_n) * affine::kLambda0 + (lam_m / 2.0) * affine::kAlpha1;
            affine::EvalPoint h = affine::rho_vee_over(char_scale);
            affine::CharResult r = affine::weyl_kac_character(lam, h);
            std::string csv = "lambda_n,lambda_m,a,b,value,certified_error\n";
            csv += std::to_string(lam_n) + "," + std::to_string(lam_m) + "," +
                   affine::format_double(h.a) + "," + affine::format_double(h.b) + "," +
                   affine::format_double(r.value) + "," + affine::format_double(r.error) + "\n";
            write_out(char_out, csv);
            return 0;
        }
        if (csample->parsed()) {
            affine::MuStepSampler mu(sample_m);
            std::string csv = "replica,t,coord_t,coord_x,xi\n";
            for (long long i = 0; i < n_replicas; ++i) {
                affine::RngStream rng(seed, static_cast<std::uint64_t>(i));
                affine::WalkSample ws = affine::simulate_walk_pair(mu, horizon, rng, true);
                for (long long t = 1; t <= horizon; ++t) {
                    affine::Weight w = affine::evaluate(ws.plus_path, double(t));
                    csv += std::to_string(i) + "," + std::to_string(t) + "," +
                           affine::format_double(affine::pairing(w, affine::kC)) + "," +
                           affine::format_double(affine::pairing(w, affine::kAlpha1v)) + ",\"" +
                           ws.strings_at.at(t).str() + "\"\n";
                }
            }
            write_out(sample_out, csv);
            return 0;
        }
        // experiment
        std::map<std::string, double> params;
        if (opt_m >= 0) params["m"] = opt_m;
        if (opt_p >= 0) params["p"] = opt_p;
        if (opt_h >= 0) params["H"] = opt_h;
        if (opt_n >= 0) params["n"] = opt_n;
        for (const std::string& s : kv) {
            auto eq = s.find('=');
            if (eq == std::string::npos) {
                std::fprintf(stderr, "bad --param '%s', expected key=value\n", s.c_str());
                return 2;
            }
            params[s.substr(0, eq)] = std::stod(s.substr(eq + 1));
        }
        affine::ExperimentReport r = affine::run_experiment(exp_name, params, seed);
        write_out(exp_out, r.csv());
        std::fputs(r.summary().c_str(), stdout);
        return r.pass ? 0 : 1;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
