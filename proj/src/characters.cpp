#include "affine/characters.hpp"

#include <quadmath.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "affine/crystal.hpp"

namespace affine {

namespace {

// theta_{M,N}(h) = sum_k sinh(a(M+2kN)) e^{-b(kM+k^2 N)}
template <typename S>
S theta_sum(double M, double N, S a, double b, double tol, double* bound) {
    using std::abs;
    S total = std::sinh(a * M);
    double worst = 0.0;
    int quiet = 0;
    for (int k = 1; k < 10000; ++k) {
        S tp = std::sinh(a * (M + 2.0 * k * N)) * std::exp(-b * (k * M + double(k) * k * N));
        S tm = std::sinh(a * (M - 2.0 * k * N)) * std::exp(-b * (-k * M + double(k) * k * N));
        total += tp + tm;
        double mag = abs(tp) + abs(tm);
        if (mag < tol * (abs(total) + 1e-300)) {
            ++quiet;
            worst = std::max(worst, mag);
            if (quiet >= 3) break;
        } else {
            quiet = 0;
        }
    }
    if (bound) *bound = 3.0 * worst;
    return total;
}

void check_theta_lambda(Weight lambda, double* n, double* mp) {
    *n = lambda.cL;
    *mp = 2.0 * lambda.cA;
    if (*n != std::floor(*n) || *mp != std::floor(*mp) || *mp < 0.0 || *mp > *n)
        throw std::invalid_argument("lambda must be n Lambda0 + m' alpha1/2, 0 <= m' <= n");
}

double pair_h(Weight w, EvalPoint h) { return 2.0 * w.cA * h.a + w.cD * h.b; }

}  // namespace

CharResult weyl_kac_character(Weight lambda, EvalPoint h, double tol) {
    if (h.b <= 0.0) throw std::invalid_argument("need <delta,h> > 0");
    double n, mp;
    check_theta_lambda(lambda, &n, &mp);
    double bn = 0.0, bd = 0.0;
    double num = theta_sum(mp + 1.0, n + 2.0, h.a, h.b, tol, &bn);
    double den = theta_sum(1.0, 2.0, h.a, h.b, tol, &bd);
    double shift = std::exp(lambda.cD * h.b);
    double v = shift * num / den;
    double err = shift * (bn + std::abs(v) * bd) / std::abs(den);
    return {v, err};
}

std::complex<double> weyl_kac_character_c(Weight lambda, std::complex<double> a, double b,
                                          double tol) {
    if (b <= 0.0) throw std::invalid_argument("need <delta,h> > 0");
    double n, mp;
    check_theta_lambda(lambda, &n, &mp);
    std::complex<double> num = theta_sum(mp + 1.0, n + 2.0, a, b, tol, nullptr);
    std::complex<double> den = theta_sum(1.0, 2.0, a, b, tol, nullptr);
    return std::exp(lambda.cD * b) * num / den;
}

double denominator_product(EvalPoint h, double tol) {
    if (h.b <= 0.0) throw std::invalid_argument("need b > 0");
    double w0 = h.b - 2.0 * h.a;  // <alpha0,h>
    double w1 = 2.0 * h.a;        // <alpha1,h>
    if (w0 <= 0.0 || w1 <= 0.0)
        throw std::invalid_argument("positive root pairings must be positive");
    double prod = 1.0;
    for (int n = 0; n < 100000; ++n) {
        double f = (1.0 - std::exp(-(w0 + n * h.b))) * (1.0 - std::exp(-(w1 + n * h.b))) *
                   (1.0 - std::exp(-(n + 1.0) * h.b));
        prod *= f;
        if (std::abs(1.0 - f) < tol) break;
    }
    return prod;
}

double denominator_sum(EvalPoint h, double tol) {
    if (h.b <= 0.0) throw std::invalid_argument("need b > 0");
    Weight s1rho = reflect(1, kRho);
    // The alternating sum cancels to a tiny multiple of its largest term
    // (the product side vanishes like b^3 as b -> 0), so accumulate in
    // quad precision to keep full double accuracy in the result.
    __float128 aq = h.a, bq = h.b;
    // weight components here are exact in double (half-integers), so the
    // pairing itself must also be formed in quad to survive the cancellation
    auto pair_q = [&](const Weight& w) { return 2.0Q * w.cA * aq + w.cD * bq; };
    auto term = [&](long long k) -> __float128 {
        Weight tk = translate(k, kRho) - kRho;
        Weight tks = translate(k, s1rho) - kRho;
        return expq(pair_q(tk)) - expq(pair_q(tks));
    };
    (void)tol;
    __float128 total = term(0);
    double peak = static_cast<double>(fabsq(total));
    int quiet = 0;
    for (long long k = 1; k < 100000; ++k) {
        __float128 t = term(k) + term(-k);
        total += t;
        double td = static_cast<double>(fabsq(t));
        peak = std::max(peak, td);
        if (td < 1e-36 * (peak + 1e-300)) {
            if (++quiet >= 3) return static_cast<double>(total);
        } else {
            quiet = 0;
        }
    }
    throw std::runtime_error("denominator sum did not converge");
}

namespace {

// Weighted count of B(infinity) chains (entries at indices 1..p, all >= 1,
// a_k(k+1) >= a_{k+1}k), grouped by total: C[s] = sum over chains with total s
// of we^{#even-index entries weighted} ... each entry contributes w(parity)^a_k.
// max_top < 0 means unlimited (bounded by N anyway).
std::vector<double> chain_sums(double we, double wo, long long N, long long max_top) {
    std::vector<double> C(static_cast<std::size_t>(N) + 1, 0.0);
    C[0] = 1.0;  // empty chain
    long long top = (max_top >= 0) ? std::min(max_top, N) : N;
    if (top < 1) return C;
    // level state: D[a][s], chains with lowest index k so far
    std::vector<std::vector<double>> cur(static_cast<std::size_t>(N) + 1,
                                         std::vector<double>(static_cast<std::size_t>(N) + 1, 0.0));
    auto w = [&](long long k) { return (k % 2 == 0) ? we : wo; };
    for (long long k = top; k >= 1; --k) {
        // chains starting (top index) at k
        for (long long a = 1; a <= N - (k - 1); ++a)
            cur[a][a] += std::pow(w(k), static_cast<double>(a));
        if (k == 1) break;
        std::vector<std::vector<double>> nxt(
            static_cast<std::size_t>(N) + 1,
            std::vector<double>(static_cast<std::size_t>(N) + 1, 0.0));
        for (long long a = 1; a <= N; ++a)
            for (long long s = a; s <= N; ++s) {
                double v = cur[a][s];
                if (v == 0.0) continue;
                long long lo = (a * (k - 1) + k - 1) / k;  // ceil(a(k-1)/k)
                if (lo < 1) lo = 1;
                for (long long ap = lo; ap <= N - s; ++ap)
                    nxt[ap][s + ap] += v * std::pow(w(k - 1), static_cast<double>(ap));
            }
        cur.swap(nxt);
    }
    for (long long a = 1; a <= N; ++a)
        for (long long s = a; s <= N; ++s) C[s] += cur[a][s];
    return C;
}

double binf_sum(EvalPoint h, long long N, long long max_top) {
    double we = std::exp(-(h.b - 2.0 * h.a));  // e^{-<alpha0,h>}
    double wo = std::exp(-2.0 * h.a);          // e^{-<alpha1,h>}
    std::vector<double> C = chain_sums(we, wo, N, max_top);
    double total = 0.0;
    for (long long s = 0; s <= N; ++s) {
        if (C[s] == 0.0) continue;
        // free a0 with remaining budget N - s
        double g = (we == 1.0) ? static_cast<double>(N - s + 1)
                               : (1.0 - std::pow(we, static_cast<double>(N - s + 1))) / (1.0 - we);
        total += C[s] * g;
    }
    return total;
}

}  // namespace

double verma_character(EvalPoint h, VermaMode mode, double tol, long long N) {
    if (h.b <= 0.0) throw std::invalid_argument("need b > 0");
    switch (mode) {
        case VermaMode::product: {
            double w0 = h.b - 2.0 * h.a, w1 = 2.0 * h.a;
            if (w0 <= 0.0 || w1 <= 0.0)
                throw std::invalid_argument("positive root pairings must be positive");
            double prod = 1.0;
            for (int n = 0; n < 100000; ++n) {
                double f = (1.0 - std::exp(-(w0 + n * h.b))) * (1.0 - std::exp(-(w1 + n * h.b))) *
                           (1.0 - std::exp(-(n + 1.0) * h.b));
                prod *= f;
                if (std::abs(1.0 - f) < tol) break;
            }
            return 1.0 / prod;
        }
        case VermaMode::string_sum:
            return binf_sum(h, N, -1);
        case VermaMode::inverse_denominator:
            return 1.0 / denominator_sum(h, tol);
    }
    throw std::invalid_argument("bad mode");
}

double verma_demazure_character(int p, EvalPoint h, long long N) {
    if (h.b <= 0.0) throw std::invalid_argument("need b > 0");
    if (p < 0) throw std::invalid_argument("p must be >= 0");
    return binf_sum(h, N, p);
}

double demazure_character(Weight lambda, int p, EvalPoint h, long long N) {
    if (h.b <= 0.0) throw std::invalid_argument("need b > 0");
    if (p < 0) throw std::invalid_argument("p must be >= 0");
    double we = std::exp(-(h.b - 2.0 * h.a));
    double wo = std::exp(-2.0 * h.a);
    double total = 0.0;
    enumerate_b_lambda_visit_capped(lambda, N, p, [&](const StringCoords& a) {
        double w = 1.0;
        for (std::size_t k = 0; k < a.size(); ++k)
            w *= std::pow((k % 2 == 0) ? we : wo, static_cast<double>(a.a[k]));
        total += w;
    });
    // overall e^{<lambda,h>} prefactor
    return std::exp(pair_h(lambda, h)) * total;
}

double character_string_sum(Weight lambda, EvalPoint h, long long N) {
    if (h.b <= 0.0) throw std::invalid_argument("need b > 0");
    double we = std::exp(-(h.b - 2.0 * h.a));
    double wo = std::exp(-2.0 * h.a);
    double total = 0.0;
    enumerate_b_lambda_visit(lambda, N, [&](const StringCoords& a) {
        double w = 1.0;
        for (std::size_t k = 0; k < a.size(); ++k)
            w *= std::pow((k % 2 == 0) ? we : wo, static_cast<double>(a.a[k]));
        total += w;
    });
    return std::exp(pair_h(lambda, h)) * total;
}

}  // namespace affine
