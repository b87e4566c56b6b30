#pragma once

#include <complex>

#include "affine/weight.hpp"

namespace affine {

// h = a * alpha1^vee + b * d, with b > 0 for convergence.
struct EvalPoint {
    double a = 0.0;
    double b = 1.0;
};

inline EvalPoint rho_vee_over(double m) { return {0.5 / m, 2.0 / m}; }

struct CharResult {
    double value = 0.0;
    double error = 0.0;  // certified truncation bound
};

// Weyl-Kac character of V(lambda), lambda = n Lambda0 + m' alpha1/2 dominant,
// as a ratio of theta-like sums; a delta component multiplies by e^{cD b}.
CharResult weyl_kac_character(Weight lambda, EvalPoint h, double tol = 1e-14);
std::complex<double> weyl_kac_character_c(Weight lambda, std::complex<double> a, double b,
                                          double tol = 1e-14);

enum class VermaMode { product, string_sum, inverse_denominator };

// Character of the Verma module M(0); string_sum truncates at total <= N.
double verma_character(EvalPoint h, VermaMode mode, double tol = 1e-12, long long N = 90);

// Demazure character ch^{w_p}_lambda: B(lambda) sum restricted to a_{p+1} = 0.
double demazure_character(Weight lambda, int p, EvalPoint h, long long N);

// Verma-Demazure character: B(infinity) sum restricted to a_{p+1} = 0.
double verma_demazure_character(int p, EvalPoint h, long long N);

// Full B(lambda) string sum, truncated at total <= N (crystal-side oracle).
double character_string_sum(Weight lambda, EvalPoint h, long long N);

// Two sides of the denominator identity.
double denominator_product(EvalPoint h, double tol = 1e-14);
double denominator_sum(EvalPoint h, double tol = 1e-14);

}  // namespace affine
