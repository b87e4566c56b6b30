#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "affine/path.hpp"
#include "affine/weight.hpp"

namespace affine {

// B(infinity): a_k/k >= a_{k+1}/(k+1) for k >= 1, a_0 unconstrained.
bool member_b_infinity(const StringCoords& a);

// B(lambda): additionally a_p <= <lambda - sum_{k>p} a_k alpha_k, alpha_p^vee>.
bool member_b_lambda(const StringCoords& a, Weight lambda);

// All a in B(lambda) with sum <= N, ordered by (total, entries lexicographic).
std::vector<StringCoords> enumerate_b_lambda(Weight lambda, long long N);
// Streaming variant, same order not guaranteed (depth-first).
void enumerate_b_lambda_visit(Weight lambda, long long N,
                              const std::function<void(const StringCoords&)>& visit);
// As above but with a_k = 0 forced for k > max_top (max_top < 0 means no cap).
void enumerate_b_lambda_visit_capped(Weight lambda, long long N, long long max_top,
                                     const std::function<void(const StringCoords&)>& visit);

// omega(a) = sum a_k alpha_k with alpha_{2k} = alpha_0, alpha_{2k+1} = alpha_1.
Weight omega_weight(const StringCoords& a);

// Continuous string sequence with a tail convention past the stored range.
struct RealStringSeq {
    enum class TailMode { zero, constant };
    std::vector<double> entries;
    TailMode tail_mode = TailMode::zero;
};

struct OmegaLimit {
    bool converged = false;
    double x = 0.0;  // pairing of the limit with alpha1^vee
};

// lim_n sum_{k<n} x_k alpha_k + x_n alpha_n / 2, taken mod delta.
OmegaLimit omega_limit_mod_delta(const RealStringSeq& x, double tol);

// Gamma(infinity) / Gamma(lambda) membership; lambda given mod delta,
// std::nullopt means Gamma(infinity).
bool member_gamma(const RealStringSeq& x, std::optional<ChamberPoint> lambda, double tol);

}  // namespace affine
