#include <doctest.h>

#include <cmath>

#include "affine/experiments.hpp"
#include "affine/rng.hpp"
#include "affine/stats.hpp"

using namespace affine;

TEST_CASE("ks one sample") {
    RngStream rng(1, 0);
    std::vector<double> xs(10000);
    for (auto& x : xs) x = rng.next_exp();
    KsResult r = ks_statistic(xs, exp1_cdf);
    CHECK(r.p_value > 1e-4);
    CHECK(r.statistic < 0.03);
    CHECK_THROWS(ks_statistic(std::vector<double>{}, exp1_cdf));

    // calibration: rejection rate at level 0.2 tracks 0.2
    int reject = 0;
    const int reps = 200;
    for (int i = 0; i < reps; ++i) {
        RngStream r2(2, i);
        std::vector<double> ys(500);
        for (auto& y : ys) y = r2.next_exp();
        if (ks_statistic(ys, exp1_cdf).p_value < 0.2) ++reject;
    }
    double rate = double(reject) / reps;
    CHECK(rate > 0.2 - 4.0 * std::sqrt(0.2 * 0.8 / reps));
    CHECK(rate < 0.2 + 4.0 * std::sqrt(0.2 * 0.8 / reps));
}

TEST_CASE("ks two sample") {
    RngStream rng(3, 0);
    std::vector<double> a(4000), b(4000), c(4000);
    for (auto& x : a) x = rng.next_gaussian();
    for (auto& x : b) x = rng.next_gaussian();
    for (auto& x : c) x = rng.next_gaussian() + 0.5;
    CHECK(ks_statistic(a, b).p_value > 1e-4);
    CHECK(ks_statistic(a, c).p_value < 1e-6);
}

TEST_CASE("binomial ci") {
    Interval z = binomial_ci(0, 50, 0.95);
    CHECK(z.lo == 0.0);
    Interval o = binomial_ci(50, 50, 0.95);
    CHECK(o.hi == 1.0);
    CHECK_THROWS(binomial_ci(5, 0, 0.95));
    CHECK_THROWS(binomial_ci(7, 5, 0.95));

    // coverage
    int cover = 0;
    const int reps = 500;
    for (int i = 0; i < reps; ++i) {
        RngStream rng(4, i);
        long long s = 0;
        for (int j = 0; j < 200; ++j) s += (rng.next_double() < 0.3);
        Interval ci = binomial_ci(s, 200, 0.95);
        cover += (ci.lo <= 0.3 && 0.3 <= ci.hi);
    }
    CHECK(double(cover) / reps > 0.90);
    CHECK(double(cover) / reps < 0.99);
}

TEST_CASE("basic stats") {
    std::vector<double> v{1.0, 2.0, 3.0, 4.0};
    CHECK(mean(v) == doctest::Approx(2.5));
    CHECK(stderr_mean(v) == doctest::Approx(std::sqrt(5.0 / 3.0 / 4.0)));
    std::vector<double> w{2.0, 4.0, 6.0, 8.0};
    CHECK(correlation(v, w) == doctest::Approx(1.0));
    CHECK(normal_cdf(0.0, 0.0, 1.0) == doctest::Approx(0.5));
    CHECK(exp1_cdf(0.0) == 0.0);
    CHECK(exp1_cdf(1.0) == doctest::Approx(1.0 - std::exp(-1.0)));
}

TEST_CASE("replica driver determinism") {
    std::vector<double> serial(200), par(200);
    auto fill = [](std::vector<double>& out) {
        return [&out](std::size_t i) {
            RngStream rng(99, i);
            double s = 0.0;
            for (int k = 0; k < 100; ++k) s += rng.next_gaussian();
            out[i] = s;
        };
    };
    for_each_replica(200, fill(serial), false);
    for_each_replica(200, fill(par), true);
    CHECK(serial == par);
}

TEST_CASE("experiment plumbing") {
    CHECK(experiment_catalog().size() == 12);
    CHECK_THROWS(run_experiment("no_such_experiment", {}, 1));
    CHECK_THROWS(run_experiment("denominator_identity", {{"bogus", 1.0}}, 1));

    ExperimentReport r = run_experiment("denominator_identity", {}, 1);
    CHECK(r.pass);
    CHECK(r.statistics.size() == 4);
    CHECK(!r.csv().empty());
    CHECK(r.summary().find("denominator_identity,") == 0);

    // identical (name, params, seed) gives byte-identical CSV, serial or parallel
    ExperimentReport a = run_experiment("string_law_independence",
                                        {{"n", 300.0}, {"H", 40.0}, {"parallel", 0.0}}, 7);
    ExperimentReport b = run_experiment("string_law_independence",
                                        {{"n", 300.0}, {"H", 40.0}, {"parallel", 1.0}}, 7);
    CHECK(a.csv() == b.csv());

    ExperimentReport rt = run_experiment("string_round_trip", {{"N", 5.0}}, 1);
    CHECK(rt.pass);
    ExperimentReport ph = run_experiment("phi_properties", {}, 1);
    CHECK(ph.pass);
}
