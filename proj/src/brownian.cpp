#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "affine/stochastic.hpp"

namespace affine {

namespace {

// sum_k e^{-s x} sinh(s(2kt+x)) e^{-2(kx+k^2 t)}, exponents combined to avoid
// overflow; the e^{-2k^2 t} factor makes the tails quiet quickly
template <typename S>
S phi_series(S s, double t, double x, double tol) {
    if (t <= 0.0) throw std::invalid_argument("phi requires t > 0");
    auto term = [&](double k) -> S {
        double base = -2.0 * k * (x + k * t);
        S e1 = std::exp(S(2.0 * k * t) * s + base);
        S e2 = std::exp(S(-2.0 * x - 2.0 * k * t) * s + base);
        return 0.5 * (e1 - e2);
    };
    S sum = term(0.0);
    int quiet = 0;
    for (long long k = 1; k <= 100000; ++k) {
        S d = term(static_cast<double>(k)) + term(static_cast<double>(-k));
        sum += d;
        if (std::abs(d) < tol * std::max(1.0, std::abs(sum))) {
            if (++quiet >= 3) break;
        } else {
            quiet = 0;
        }
    }
    return sum;
}

}  // namespace

double harmonic_phi(double t, double x, double tol) {
    return phi_series<double>(0.5, t, x, tol);
}

std::complex<double> harmonic_phi_c(double u, double t, double x, double tol) {
    // 1/cosh(pi u) normalizes so that 2 phi_{iu+1/2}(t,x) is the Fourier
    // transform E[e^{-iu<L,a1v>} 1{xi in Gamma}], verified by Monte Carlo;
    // it keeps |phi_{iu+1/2}| <= phi_{1/2} on the cone
    return phi_series(std::complex<double>(0.5, u), t, x, tol) /
           std::cosh(std::numbers::pi * u);
}

double harmonic_phi_dx(double t, double x, double tol) {
    if (t <= 0.0) throw std::invalid_argument("phi requires t > 0");
    auto term = [&](double k) {
        double base = -2.0 * k * (x + k * t);
        double e1 = std::exp(k * t + base);                 // d/dx factor -2k
        double e2 = std::exp(-x - k * t + base);            // d/dx factor -(1+2k)
        return 0.5 * (-2.0 * k * e1 + (1.0 + 2.0 * k) * e2);
    };
    double sum = term(0.0);
    int quiet = 0;
    for (long long k = 1; k <= 100000; ++k) {
        double d = term(static_cast<double>(k)) + term(static_cast<double>(-k));
        sum += d;
        if (std::abs(d) < tol * std::max(1.0, std::abs(sum))) {
            if (++quiet >= 3) break;
        } else {
            quiet = 0;
        }
    }
    return sum;
}

GridPath simulate_brownian_grid(double T, double dt, double drift, RngStream& rng) {
    if (dt <= 0.0 || T <= 0.0) throw std::invalid_argument("need T, dt > 0");
    std::size_t n = static_cast<std::size_t>(std::llround(std::ceil(T / dt)));
    GridPath g;
    g.t0 = 0.0;
    g.dt = dt;
    g.x.resize(n + 1);
    g.x[0] = 0.0;
    double sd = std::sqrt(dt);
    for (std::size_t j = 0; j < n; ++j)
        g.x[j + 1] = g.x[j] + drift * dt + sd * rng.next_gaussian();
    return g;
}

std::vector<double> grid_string_coords(const GridPath& g, int K) {
    std::vector<double> xi(static_cast<std::size_t>(K), 0.0);
    std::vector<double> x = g.x;
    for (int k = 0; k < K; ++k) {
        bool even = (k % 2 == 0);
        double m = 0.0, run = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < x.size(); ++j) {
            double t = g.time(j);
            double p = even ? (t - x[j]) : x[j];
            run = std::min(run, p);
            x[j] = even ? (x[j] + 2.0 * run) : (x[j] - 2.0 * run);
            m = run;
        }
        xi[static_cast<std::size_t>(k)] = -m;
        if (k > 0 && xi[k] == 0.0 && xi[k - 1] == 0.0) break;  // alternating pass is a no-op
    }
    return xi;
}

double killed_kernel(double s, double y, double t, double x, double drift) {
    if (!(0.0 < s && s < t)) throw std::invalid_argument("need 0 < s < t");
    if (!(0.0 <= y && y <= s && 0.0 < x && x < t)) return 0.0;
    // Time inversion Z(v) = v X(1/v) maps the moving walls 0 < X(r) < r to the
    // fixed strip 0 < Z < 1, where the two-wall image series is exact; drift
    // enters only through the Girsanov tilt on the endpoints.
    double tau_c = t - s;
    double tau = 1.0 / s - 1.0 / t;
    double a = x / t, b = y / s;
    auto g = [](double v, double d) {
        return std::exp(-0.5 * d * d / v) / std::sqrt(2.0 * std::numbers::pi * v);
    };
    double strip = g(tau, b - a) - g(tau, b + a);
    int quiet = 0;
    for (int k = 1; k <= 200; ++k) {
        double d = g(tau, b - a + 2.0 * k) - g(tau, b + a + 2.0 * k) +
                   g(tau, b - a - 2.0 * k) - g(tau, b + a - 2.0 * k);
        strip += d;
        if (std::abs(d) < 1e-18 * std::max(1.0, std::abs(strip))) {
            if (++quiet >= 2) break;
        } else {
            quiet = 0;
        }
    }
    return std::exp(drift * (x - y) - 0.5 * drift * drift * tau_c) * g(tau_c, x - y) * strip /
           g(tau, b - a);
}

GridPath simulate_conditioned_A_chain(int m, double T, RngStream& rng) {
    if (T <= 0.0) throw std::invalid_argument("need T > 0");
    long long H = static_cast<long long>(std::ceil(T * m));
    MuStepSampler mu(m);
    PitmanCascade cascade;
    GridPath g;
    g.t0 = 0.0;
    g.dt = 1.0 / static_cast<double>(m);
    g.x.reserve(static_cast<std::size_t>(H) + 1);
    g.x.push_back(0.0);
    Weight end{};
    for (long long n = 0; n < H; ++n) {
        std::size_t idx = mu.sample_index(rng);
        const PLPath& step = mu.path(idx);
        for (std::size_t j = 1; j < step.times.size(); ++j)
            cascade.feed(end + step.values[j], static_cast<double>(n) + step.times[j]);
        end = end + step.values.back();
        g.x.push_back(pairing(cascade.plus_endpoint(), kAlpha1v) / static_cast<double>(m));
    }
    return g;
}

GridPath simulate_conditioned_A_sde(double T, double dt, RngStream& rng, double t_entrance) {
    if (!(0.0 < t_entrance && t_entrance < T) || dt <= 0.0)
        throw std::invalid_argument("need 0 < t_entrance < T and dt > 0");
    // entrance marginal at t_entrance: killed kernel from near the corner,
    // reweighted by phi_{1/2} (the Doob h-transform), sampled by inverse CDF
    const int ngrid = 512;
    static thread_local double cached_t = -1.0;
    static thread_local std::vector<double> cdf;
    if (cached_t != t_entrance) {
        cdf.assign(ngrid + 1, 0.0);
        double h = t_entrance / ngrid;
        double prev = 0.0;
        for (int i = 1; i <= ngrid; ++i) {
            double xi = i * h;
            double f = (i == ngrid) ? 0.0
                                    : killed_kernel(1e-4, 5e-5, t_entrance, xi) *
                                          harmonic_phi(t_entrance, xi);
            cdf[i] = cdf[i - 1] + 0.5 * (prev + f) * h;
            prev = f;
        }
        cached_t = t_entrance;
    }
    double u = rng.next_double() * cdf.back();
    auto it = std::lower_bound(cdf.begin(), cdf.end(), u);
    int hi = std::max<int>(1, static_cast<int>(it - cdf.begin()));
    double frac = (u - cdf[hi - 1]) / std::max(1e-300, cdf[hi] - cdf[hi - 1]);
    double x0 = (hi - 1 + frac) * t_entrance / ngrid;

    GridPath g;
    g.t0 = t_entrance;
    g.dt = dt;
    std::size_t n = static_cast<std::size_t>(std::llround(std::ceil((T - t_entrance) / dt)));
    g.x.reserve(n + 1);
    g.x.push_back(x0);
    double x = x0;
    for (std::size_t j = 0; j < n; ++j) {
        double t = g.time(j);
        // adaptive substeps: keep the diffusion scale well under the wall
        // distance, and integrate the Bessel-3 part of the drift exactly
        // (near a wall the h-transform drift is 1/d plus a smooth remainder;
        // a plain Euler step overshoots and the wall becomes absorbing)
        double done = 0.0;
        while (done < dt) {
            double ts = t + done;
            double d = std::min(x, ts - x);
            double h = std::min(dt - done, std::max(0.0625 * d * d, dt / 1024.0));
            double tn = ts + h, sd = std::sqrt(h);
            double b = 0.5 + harmonic_phi_dx(ts, x) / harmonic_phi(ts, x);
            bool lower = x <= ts - x;
            // smooth remainder after removing the singular 1/d term of the
            // nearer wall (for the upper wall in the coordinate y = t - x)
            double bs = lower ? b - 1.0 / x : (1.0 - b) - 1.0 / (ts - x);
            bs = std::clamp(bs, -1.0 / sd, 1.0 / sd);
            double xn;
            int tries = 0;
            do {
                double z1 = rng.next_gaussian();
                double z2 = rng.next_gaussian();
                double z3 = rng.next_gaussian();
                double r0 = lower ? x : ts - x;
                double m = r0 + bs * h + sd * z1;
                double rn = std::sqrt(m * m + h * (z2 * z2 + z3 * z3));
                xn = lower ? rn : tn - rn;
            } while ((xn <= 0.0 || xn >= tn) && ++tries < 100);
            if (xn <= 0.0 || xn >= tn) xn = 0.5 * tn;  // interior fallback, never sticks
            x = xn;
            done += h;
        }
        g.x.push_back(x);
    }
    return g;
}

GridPath reconstruct_process(const GridPath& A, const std::vector<double>& xi_p, double T_obs,
                             double margin_scale) {
    if (T_obs > A.back_time()) throw std::invalid_argument("T_obs beyond the path horizon");
    std::vector<double> x = A.x;
    std::size_t n = x.size();
    std::vector<double> h(n);
    for (std::size_t kk = xi_p.size(); kk-- > 0;) {
        double s = xi_p[kk];
        bool even = (kk % 2 == 0);
        // backward future infimum of the relevant pairing
        for (std::size_t j = n; j-- > 0;) {
            double g = even ? (A.time(j) - x[j]) : x[j];
            h[j] = (j + 1 < n) ? std::min(g, h[j + 1]) : g;
        }
        // tail certification: the infimum near the horizon must clear the one
        // actually used, otherwise data past the horizon could change it
        double used = std::min(s, h[0]);
        double tail = std::numeric_limits<double>::infinity();
        for (std::size_t j = (3 * n) / 4; j < n; ++j)
            tail = std::min(tail, even ? (A.time(j) - x[j]) : x[j]);
        if (tail < used + margin_scale * s)
            throw std::runtime_error("uncertified tail in reconstruction");
        for (std::size_t j = 0; j < n; ++j) {
            double c = std::min(s, h[j]);
            x[j] = even ? (x[j] + 2.0 * c) : (x[j] - 2.0 * c);
        }
    }
    GridPath out;
    out.t0 = A.t0;
    out.dt = A.dt;
    std::size_t keep = static_cast<std::size_t>(std::floor((T_obs - A.t0) / A.dt + 1e-9)) + 1;
    out.x.assign(x.begin(), x.begin() + std::min(keep, n));
    return out;
}

PsiResult psi_p(double u, ChamberPoint lambda, int p, long long n_mc, RngStream& rng) {
    if (!lambda.interior()) throw std::invalid_argument("lambda must be interior");
    if (n_mc < 1) throw std::invalid_argument("n_mc must be >= 1");
    double phi = harmonic_phi(lambda.t, lambda.x);
    if (phi < 1e-300) throw std::runtime_error("phi underflow, lambda too close to the walls");
    std::complex<double> acc{0.0, 0.0};
    double acc2 = 0.0;
    for (long long i = 0; i < n_mc; ++i) {
        ExpStringSample s = sample_exp_strings(rng, p, {p});
        RealStringSeq seq{s.xi_p[0], RealStringSeq::TailMode::zero};
        if (!member_gamma(seq, lambda, 1e-9)) continue;
        std::complex<double> z = std::exp(std::complex<double>(0.0, -u * s.lp_x[0]));
        acc += z;
        acc2 += 1.0;  // |z| = 1
    }
    double n = static_cast<double>(n_mc);
    std::complex<double> mean_z = acc / n;
    double var = std::max(0.0, acc2 / n - std::norm(mean_z));
    std::complex<double> pref =
        std::exp(std::complex<double>(0.0, u * lambda.x)) / (2.0 * phi);
    PsiResult r;
    r.value = pref * mean_z;
    r.stderr_mod = std::abs(pref) * std::sqrt(var / n);
    return r;
}

}  // namespace affine
