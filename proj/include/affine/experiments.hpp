#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace affine {

struct Statistic {
    std::string label;
    double value = 0.0;
    double err = 0.0;  // standard error or p-value, per label
};

struct ExperimentReport {
    std::string name;
    std::map<std::string, double> params;
    std::vector<Statistic> statistics;
    bool pass = false;
    std::vector<std::string> csv_rows;  // header first

    std::string csv() const;      // newline-joined rows
    std::string summary() const;  // "name,label,value,err,pass" per statistic
};

// Registered experiment names, in acceptance order.
const std::vector<std::string>& experiment_catalog();

// Deterministic in (name, params, seed); unknown names or keys throw.
ExperimentReport run_experiment(const std::string& name,
                                const std::map<std::string, double>& params,
                                std::uint64_t seed);

}  // namespace affine
