#include <doctest.h>

#include <cmath>

#include "affine/characters.hpp"
#include "affine/crystal.hpp"

using namespace affine;

TEST_CASE("weyl-kac basics") {
    for (double m : {1.0, 2.0, 5.0}) {
        EvalPoint h = rho_vee_over(m);
        CHECK(weyl_kac_character(Weight{}, h).value == doctest::Approx(1.0).epsilon(1e-12));
        // highest weight term dominates: ch * e^{-<lambda,h>} >= 1
        for (Weight lam : {kLambda0, 2.0 * kLambda0 + kAlpha1, 3.0 * kLambda0 + 0.5 * kAlpha1}) {
            double lamh = 2.0 * lam.cA * h.a + lam.cD * h.b;
            CHECK(weyl_kac_character(lam, h).value * std::exp(-lamh) >= 1.0);
        }
    }
    CHECK_THROWS(weyl_kac_character(kLambda0, EvalPoint{0.1, -1.0}));
    CHECK_THROWS(weyl_kac_character(kAlpha1, rho_vee_over(2)));  // not dominant of theta form

    // delta shift
    EvalPoint h = rho_vee_over(2);
    double base = weyl_kac_character(kLambda0, h).value;
    double shifted = weyl_kac_character(kLambda0 + 3.0 * kDelta, h).value;
    CHECK(shifted == doctest::Approx(base * std::exp(3.0 * h.b)).epsilon(1e-12));
}

TEST_CASE("character vs crystal string sum") {
    EvalPoint h = rho_vee_over(2);
    double th = weyl_kac_character(kLambda0, h).value;
    double cs = character_string_sum(kLambda0, h, 45);
    CHECK(std::abs(th - cs) / th < 1e-6);  // full-precision N=60 check lives in acceptance
}

TEST_CASE("verma character modes") {
    EvalPoint h = rho_vee_over(2);
    double q = std::exp(-0.5);
    double prod = verma_character(h, VermaMode::product);
    double sum = verma_character(h, VermaMode::string_sum, 1e-12, 90);
    double inv = verma_character(h, VermaMode::inverse_denominator);
    CHECK(std::abs(prod - sum) / prod < 1e-8);
    CHECK(std::abs(prod - inv) / prod < 1e-10);
    // explicit product form at rho_vee/m
    double ref = 1.0;
    for (int n = 0; n < 200; ++n)
        ref /= (1.0 - std::pow(q, 1.0 + 2.0 * n)) * (1.0 - std::pow(q, 1.0 + 2.0 * n)) *
               (1.0 - std::pow(q, 2.0 * n + 2.0));
    CHECK(prod == doctest::Approx(ref).epsilon(1e-10));
    // b -> infinity: product -> 1
    CHECK(verma_character(rho_vee_over(0.01), VermaMode::product) ==
          doctest::Approx(1.0).epsilon(1e-4));
}

TEST_CASE("denominator identity") {
    for (double m : {1.0, 2.0, 5.0, 10.0}) {
        EvalPoint h = rho_vee_over(m);
        double p = denominator_product(h);
        double s = denominator_sum(h);
        CHECK(std::abs(p - s) / std::abs(p) < 1e-10);
    }
}

TEST_CASE("demazure characters") {
    EvalPoint h = rho_vee_over(2);
    double q = std::exp(-0.5);
    CHECK(demazure_character(kLambda0, 0, h, 60) == doctest::Approx(1.0 + q).epsilon(1e-12));
    double full = weyl_kac_character(kLambda0, h).value;
    double prev = 0.0;
    for (int p = 0; p <= 8; ++p) {
        double v = demazure_character(kLambda0, p, h, 40);
        CHECK(v >= prev);
        CHECK(v <= full + 1e-12);
        prev = v;
    }
    // large p at fixed N equals the N-truncated full string sum
    CHECK(demazure_character(kLambda0, 25, h, 20) ==
          doctest::Approx(character_string_sum(kLambda0, h, 20)).epsilon(1e-13));
}

TEST_CASE("verma-demazure characters") {
    EvalPoint h = rho_vee_over(2);
    double q = std::exp(-0.5);
    CHECK(verma_demazure_character(0, h, 200) == doctest::Approx(1.0 / (1.0 - q)).epsilon(1e-12));
    CHECK(verma_demazure_character(1, h, 200) ==
          doctest::Approx(1.0 / ((1.0 - q) * (1.0 - q))).epsilon(1e-10));
    double verma = verma_character(h, VermaMode::product);
    double prev = 0.0;
    for (int p = 0; p <= 10; ++p) {
        double v = verma_demazure_character(p, h, 90);
        CHECK(v >= prev - 1e-12);
        CHECK(v <= verma * (1.0 + 1e-9));
        prev = v;
    }
    CHECK(verma_demazure_character(40, h, 90) == doctest::Approx(verma).epsilon(1e-6));
}

TEST_CASE("verma majorization") {
    for (double m : {1.0, 2.0, 5.0}) {
        EvalPoint h = rho_vee_over(m);
        double verma = verma_character(h, VermaMode::product);
        for (Weight lam : {Weight{}, kLambda0, 2.0 * kLambda0, 2.0 * kLambda0 + kAlpha1,
                           4.0 * kLambda0 + kAlpha1}) {
            double lamh = 2.0 * lam.cA * h.a + lam.cD * h.b;
            double normalized = weyl_kac_character(lam, h).value * std::exp(-lamh);
            CHECK(normalized <= verma * (1.0 + 1e-12));
        }
    }
}
