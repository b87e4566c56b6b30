#pragma once

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

namespace affine {

struct KsResult {
    double statistic = 0.0;
    double p_value = 1.0;
};

// One-sample KS against a CDF; asymptotic p-value.
KsResult ks_statistic(std::vector<double> sample, const std::function<double(double)>& cdf);
// Two-sample KS.
KsResult ks_statistic(std::vector<double> a, std::vector<double> b);

struct Interval {
    double lo = 0.0;
    double hi = 1.0;
};

// Wilson score interval.
Interval binomial_ci(long long successes, long long trials, double level);

double exp1_cdf(double x);
double normal_cdf(double x, double mean, double var);

double mean(const std::vector<double>& v);
double stderr_mean(const std::vector<double>& v);
double correlation(const std::vector<double>& x, const std::vector<double>& y);

// Replica driver: deterministic regardless of `parallel` because results are
// addressed by replica index; the body must only touch its own slot.
void for_each_replica(std::size_t n, const std::function<void(std::size_t)>& body, bool parallel);

}  // namespace affine
