#include <doctest.h>

#include <cmath>

#include "affine/crystal.hpp"
#include "affine/path.hpp"
#include "affine/rng.hpp"

using namespace affine;

namespace {

PLPath pi0(double T = 1.0) { return straight_path(kLambda0, T); }

PLPath random_integral_path(RngStream& r, int steps) {
    // concatenation of unit segments with integral slopes around Lambda0
    PLPath p = straight_path(kLambda0 + double(int(r.next_u64() % 3) - 1) * kAlpha1, 1.0);
    for (int i = 1; i < steps; ++i) {
        Weight slope = kLambda0 + double(int(r.next_u64() % 3) - 1) * kAlpha1 +
                       double(int(r.next_u64() % 3) - 1) * kDelta;
        p = concatenate(p, straight_path(slope, 1.0));
    }
    return p;
}

bool close(Weight a, Weight b, double tol = 1e-12) {
    return std::abs(a.cL - b.cL) <= tol && std::abs(a.cA - b.cA) <= tol &&
           std::abs(a.cD - b.cD) <= tol;
}

}  // namespace

TEST_CASE("evaluate") {
    PLPath p = pi0();
    CHECK(evaluate(p, 0.5) == 0.5 * kLambda0);
    CHECK(evaluate(p, 0.0) == Weight{});
    CHECK(evaluate(p, 1.0) == kLambda0);
    CHECK_THROWS(evaluate(p, 1.5));
    CHECK_THROWS(evaluate(p, -0.1));
}

TEST_CASE("concatenate") {
    PLPath two = concatenate(pi0(), pi0());
    CHECK(two.horizon() == 2.0);
    CHECK(evaluate(two, 1.7) == 1.7 * kLambda0);
    RngStream r(3, 1);
    PLPath a = random_integral_path(r, 2), b = random_integral_path(r, 3),
           c = random_integral_path(r, 2);
    CHECK(concatenate(concatenate(a, b), c) == concatenate(a, concatenate(b, c)));
    Weight end = evaluate(concatenate(a, b), 5.0);
    CHECK(end == evaluate(a, 2.0) + evaluate(b, 3.0));
}

TEST_CASE("pitman transform basics") {
    CHECK(pitman_transform(1, pi0()) == pi0());
    // t Lambda0 - (t/2) alpha1 maps to t Lambda0 + (t/2) alpha1
    PLPath p = straight_path(kLambda0 - 0.5 * kAlpha1, 1.0);
    PLPath q = pitman_transform(1, p);
    CHECK(close(evaluate(q, 1.0), kLambda0 + 0.5 * kAlpha1));
    CHECK(close(evaluate(q, 0.3), 0.3 * (kLambda0 + 0.5 * kAlpha1)));
    // idempotence on random paths
    RngStream r(11, 0);
    for (int i = 0; i < 20; ++i) {
        PLPath x = random_integral_path(r, 6);
        for (int j = 0; j < 2; ++j) {
            PLPath once = pitman_transform(j, x);
            CHECK(pitman_transform(j, once) == once);
            // result pairing is nonnegative at breakpoints
            for (const Weight& w : once.values)
                CHECK(pairing(w, simple_coroot(j)) >= -1e-12);
        }
    }
}

TEST_CASE("pitman transform matches dense grid oracle") {
    RngStream r(12, 0);
    PLPath x = random_integral_path(r, 8);
    PLPath y = pitman_transform(0, x);
    int G = 4000;
    double runmin = 0.0;
    for (int g = 1; g <= G; ++g) {
        double t = 8.0 * g / G;
        runmin = std::min(runmin, pairing(evaluate(x, t), kAlpha0v));
        Weight expect = evaluate(x, t) - runmin * kAlpha0;
        // grid running min lags the true one by at most the segment slope * step
        CHECK(close(evaluate(y, t), expect, 8.0 / G * 8.0));
    }
}

TEST_CASE("canonical dominant") {
    auto [d0, a0] = canonical_dominant(pi0());
    CHECK(d0 == pi0());
    CHECK(a0 == StringCoords{});

    PLPath p = straight_path(kLambda0 - 0.5 * kAlpha1, 1.0);
    auto [d1, a1] = canonical_dominant(p);
    CHECK(a1 == StringCoords({0, 1}));
    CHECK(close(evaluate(d1, 1.0), kLambda0 + 0.5 * kAlpha1));

    // endpoint bookkeeping on random integral paths
    RngStream r(13, 0);
    for (int i = 0; i < 20; ++i) {
        PLPath x = random_integral_path(r, 6);
        auto [dom, a] = canonical_dominant(x);
        Weight shift{};
        for (std::size_t k = 0; k < a.size(); ++k)
            shift = shift + double(a.a[k]) * simple_root(k % 2);
        CHECK(close(evaluate(dom, 6.0), evaluate(x, 6.0) + shift));
        for (const Weight& w : dom.values) {
            CHECK(pairing(w, kAlpha0v) >= -1e-12);
            CHECK(pairing(w, kAlpha1v) >= -1e-12);
        }
    }
}

TEST_CASE("inverse pitman") {
    for (double x : {0.0, 0.5, 1.0, 3.0})
        CHECK(inverse_pitman(1, x, pi0(), 1.0) == pi0());

    PLPath q = inverse_pitman(0, 1.0, pi0(), 1.0);
    // t Lambda0 + t alpha1 - t delta
    CHECK(close(evaluate(q, 1.0), kLambda0 + kAlpha1 - kDelta));
    CHECK(close(evaluate(q, 0.25), 0.25 * (kLambda0 + kAlpha1 - kDelta)));
    PLPath back = pitman_transform(0, q);
    CHECK(close(evaluate(back, 1.0), kLambda0));
    for (std::size_t j = 0; j < back.times.size(); ++j)
        CHECK(close(back.values[j], back.times[j] * kLambda0));
}

TEST_CASE("reconstruct round trip") {
    PLPath base = pi0();
    CHECK(reconstruct_from_strings(base, StringCoords{}) == base);
    PLPath one = reconstruct_from_strings(base, StringCoords({1}));
    CHECK(close(evaluate(one, 1.0), kLambda0 + kAlpha1 - kDelta));

    for (const StringCoords& a : enumerate_b_lambda(kLambda0, 8)) {
        PLPath eta = reconstruct_from_strings(base, a);
        auto [dom, rec] = canonical_dominant(eta);
        CHECK(rec == a);
        for (std::size_t j = 0; j < dom.times.size(); ++j)
            CHECK(close(dom.values[j], dom.times[j] * kLambda0));
    }
    CHECK_THROWS(reconstruct_from_strings(base, StringCoords({1, 1})));
}

TEST_CASE("inverse pitman infinite horizon") {
    // strongly dominant long path: certification succeeds
    PLPath p = straight_path(kLambda0 + 0.25 * kAlpha1, 40.0);
    PLPath q = inverse_pitman_inf(1, 1.0, p, -1.0);
    CHECK(q.horizon() == 40.0);
    // at t=0 the future infimum is 0, so nothing is subtracted there
    CHECK(close(evaluate(q, 0.0), Weight{}));
    // once the future infimum clears x=1 the shift saturates at alpha1
    CHECK(close(evaluate(q, 8.0), 8.0 * (kLambda0 + 0.25 * kAlpha1) - kAlpha1));
    // flat path: tail certification must fail
    PLPath flat = straight_path(kLambda0, 5.0);
    CHECK_THROWS(inverse_pitman_inf(1, 1.0, flat, -1.0));
}

TEST_CASE("serialization round trip") {
    RngStream r(14, 0);
    for (int i = 0; i < 10; ++i) {
        PLPath x = pitman_transform(0, random_integral_path(r, 5));
        PLPath y = deserialize_path(serialize_path(x));
        CHECK(x == y);  // bit-exact
    }
    // a path with awkward fractions
    PLPath p({0.0, 1.0 / 3.0, 1.0}, {Weight{}, {1.0 / 3.0, -0.1, 0.7}, {2.0, 0.25, -1e-17}});
    CHECK(deserialize_path(serialize_path(p)) == p);
}
