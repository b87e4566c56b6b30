#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "affine/crystal.hpp"

using namespace affine;

TEST_CASE("B(infinity) membership") {
    CHECK(member_b_infinity(StringCoords{}));
    CHECK(member_b_infinity(StringCoords({5, 3, 1})));
    CHECK(!member_b_infinity(StringCoords({0, 1, 3})));
    CHECK(member_b_infinity(StringCoords({7})));  // a0 unconstrained
    CHECK(member_b_infinity(StringCoords({0, 2, 3, 4})));
    CHECK(!member_b_infinity(StringCoords({0, 2, 3, 5})));
}

TEST_CASE("B(lambda) membership") {
    CHECK(member_b_lambda(StringCoords({1}), kLambda0));
    CHECK(!member_b_lambda(StringCoords({2}), kLambda0));
    CHECK(!member_b_lambda(StringCoords({1, 1}), kLambda0));
    CHECK(member_b_lambda(StringCoords({0, 1, 1}), kLambda0));
    CHECK_THROWS(member_b_lambda(StringCoords{}, -1.0 * kLambda0));
    CHECK_THROWS(member_b_lambda(StringCoords{}, 0.5 * kAlpha1));
}

TEST_CASE("enumerate B(lambda)") {
    auto e0 = enumerate_b_lambda(kLambda0, 0);
    REQUIRE(e0.size() == 1);
    CHECK(e0[0] == StringCoords{});

    auto e2 = enumerate_b_lambda(kLambda0, 2);
    REQUIRE(e2.size() == 3);
    CHECK(e2[0] == StringCoords{});
    CHECK(e2[1] == StringCoords({1}));
    CHECK(e2[2] == StringCoords({0, 1, 1}));

    // every enumerated element passes membership; brute-force completeness
    auto e6 = enumerate_b_lambda(kLambda0, 6);
    std::set<std::vector<long long>> seen;
    for (const auto& a : e6) {
        CHECK(member_b_lambda(a, kLambda0));
        CHECK(member_b_infinity(a));
        CHECK(seen.insert(a.a).second);  // exactly once
    }
    // brute force over all candidate vectors of depth <= 6, entries <= 6
    std::size_t count = 0;
    std::vector<long long> v(7, 0);
    std::function<void(std::size_t, long long)> rec = [&](std::size_t k, long long sum) {
        if (k == 7) {
            StringCoords a(v);
            if (a.total() <= 6 && member_b_lambda(a, kLambda0)) ++count;
            return;
        }
        for (long long x = 0; x + sum <= 6; ++x) {
            v[k] = x;
            rec(k + 1, sum + x);
        }
        v[k] = 0;
    };
    rec(0, 0);
    CHECK(count == e6.size());

    // nesting into a bigger weight
    auto big = enumerate_b_lambda(2.0 * kLambda0, 6);
    std::set<std::vector<long long>> bigset;
    for (const auto& a : big) bigset.insert(a.a);
    for (const auto& a : e6) CHECK(bigset.count(a.a) == 1);
}

TEST_CASE("omega weight") {
    CHECK(omega_weight(StringCoords{}) == Weight{});
    CHECK(omega_weight(StringCoords({1})) == kDelta - kAlpha1);
    CHECK(omega_weight(StringCoords({0, 1, 1})) == kDelta);
    for (const auto& a : enumerate_b_lambda(kLambda0, 7))
        CHECK(pairing(omega_weight(a), kRhov) == double(a.total()));
}

TEST_CASE("omega limit mod delta") {
    RealStringSeq fin;
    fin.entries = {1, 2, 1};
    fin.tail_mode = RealStringSeq::TailMode::zero;
    OmegaLimit om = omega_limit_mod_delta(fin, 1e-9);
    CHECK(om.converged);
    CHECK(om.x == doctest::Approx(pairing(omega_weight(StringCoords({1, 2, 1})), kAlpha1v)));

    RealStringSeq c2;
    c2.entries = {0, 2, 2, 2, 2, 2, 2, 2};
    c2.tail_mode = RealStringSeq::TailMode::constant;
    om = omega_limit_mod_delta(c2, 1e-9);
    CHECK(om.converged);
    CHECK(om.x == doctest::Approx(2.0));

    RealStringSeq lin;
    for (int k = 0; k < 40; ++k) lin.entries.push_back(k);
    lin.tail_mode = RealStringSeq::TailMode::zero;  // stored range itself diverges
    // partial values alternate between two limits on the stored range
    RealStringSeq lin2 = lin;
    lin2.tail_mode = RealStringSeq::TailMode::constant;
    CHECK(!omega_limit_mod_delta(lin2, 1e-3).converged);
}

TEST_CASE("Gamma membership") {
    RealStringSeq zero;
    zero.entries = {0, 0, 0};
    CHECK(member_gamma(zero, std::nullopt, 1e-9));
    CHECK(member_gamma(zero, ChamberPoint{2.0, 1.0}, 1e-9));

    RealStringSeq c2;
    c2.entries = {0, 2, 2, 2, 2, 2, 2, 2};
    c2.tail_mode = RealStringSeq::TailMode::constant;
    CHECK(member_gamma(c2, std::nullopt, 1e-9));

    // discrete members embed into the continuous crystal
    for (const auto& a : enumerate_b_lambda(kLambda0, 6)) {
        RealStringSeq x;
        for (long long v : a.a) x.entries.push_back(double(v));
        x.entries.resize(x.entries.size() + 2, 0.0);
        x.tail_mode = RealStringSeq::TailMode::zero;
        CHECK(member_gamma(x, ChamberPoint{1.0, 0.0}, 1e-9));
    }
    // and a violator: a0 too big for Lambda0
    RealStringSeq bad;
    bad.entries = {1.5, 0, 0};
    CHECK(!member_gamma(bad, ChamberPoint{1.0, 0.0}, 1e-9));
    CHECK(member_gamma(bad, std::nullopt, 1e-9));
}
