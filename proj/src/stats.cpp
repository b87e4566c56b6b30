#include "affine/stats.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <stdexcept>

namespace affine {

namespace {

// asymptotic Kolmogorov distribution tail Q(lambda) = 2 sum (-1)^{j-1} e^{-2 j^2 lambda^2}
double kolmogorov_q(double lambda) {
    if (lambda < 0.1) return 1.0;
    double s = 0.0;
    for (int j = 1; j <= 200; ++j) {
        double term = 2.0 * ((j % 2 == 1) ? 1.0 : -1.0) * std::exp(-2.0 * j * j * lambda * lambda);
        s += term;
        if (std::abs(term) < 1e-16) break;
    }
    return std::min(1.0, std::max(0.0, s));
}

double ks_pvalue(double d, double n_eff) {
    double rn = std::sqrt(n_eff);
    return kolmogorov_q((rn + 0.12 + 0.11 / rn) * d);
}

}  // namespace

KsResult ks_statistic(std::vector<double> sample, const std::function<double(double)>& cdf) {
    if (sample.empty()) throw std::invalid_argument("empty sample");
    std::sort(sample.begin(), sample.end());
    double n = static_cast<double>(sample.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        double f = cdf(sample[i]);
        d = std::max(d, std::abs(f - static_cast<double>(i) / n));
        d = std::max(d, std::abs(static_cast<double>(i + 1) / n - f));
    }
    return {d, ks_pvalue(d, n)};
}

KsResult ks_statistic(std::vector<double> a, std::vector<double> b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("empty sample");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    double d = 0.0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        double x = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= x) ++i;
        while (j < b.size() && b[j] <= x) ++j;
        d = std::max(d, std::abs(double(i) / a.size() - double(j) / b.size()));
    }
    double n_eff = double(a.size()) * b.size() / (a.size() + b.size());
    return {d, ks_pvalue(d, n_eff)};
}

Interval binomial_ci(long long successes, long long trials, double level) {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (successes < 0 || successes > trials)
        throw std::invalid_argument("successes out of range");
    // normal quantile via Acklam-style rational approximation is overkill here;
    // the suite only uses a few standard levels
    double z;
    if (level >= 0.9985)      z = 3.2905;   // 99.9%
    else if (level >= 0.985)  z = 2.5758;   // 99%
    else if (level >= 0.945)  z = 1.9600;   // 95%
    else                      z = 1.6449;   // 90%
    double n = static_cast<double>(trials);
    double p = static_cast<double>(successes) / n;
    double z2 = z * z;
    double denom = 1.0 + z2 / n;
    double center = (p + z2 / (2.0 * n)) / denom;
    double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

double exp1_cdf(double x) { return x <= 0.0 ? 0.0 : 1.0 - std::exp(-x); }

double normal_cdf(double x, double m, double var) {
    return 0.5 * std::erfc(-(x - m) / std::sqrt(2.0 * var));
}

double mean(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
}

double stderr_mean(const std::vector<double>& v) {
    double m = mean(v), s = 0.0;
    for (double x : v) s += (x - m) * (x - m);
    return std::sqrt(s / (static_cast<double>(v.size()) - 1.0) /
                     static_cast<double>(v.size()));
}

double correlation(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("bad input");
    double mx = mean(x), my = mean(y);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
    }
    return sxy / std::sqrt(sxx * syy);
}

void for_each_replica(std::size_t n, const std::function<void(std::size_t)>& body, bool parallel) {
    if (parallel) {
        // exceptions cannot leave an OpenMP region; capture and rethrow
        std::exception_ptr err;
#pragma omp parallel for schedule(dynamic, 16)
        for (long long i = 0; i < static_cast<long long>(n); ++i) {
            try {
                body(static_cast<std::size_t>(i));
            } catch (...) {
#pragma omp critical(replica_err)
                if (!err) err = std::current_exception();
            }
        }
        if (err) std::rethrow_exception(err);
    } else {
        for (std::size_t i = 0; i < n; ++i) body(i);
    }
}

}  // namespace affine
