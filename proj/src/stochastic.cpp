#include "affine/stochastic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "affine/characters.hpp"

namespace affine {

// --- MuStepSampler ---------------------------------------------------------

MuStepSampler::MuStepSampler(int m, double residual_tol, long long n_cap) : m_(m) {
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    EvalPoint h = rho_vee_over(static_cast<double>(m));
    ch_ = weyl_kac_character(kLambda0, h).value;
    double q = std::exp(-1.0 / static_cast<double>(m));
    long long N = 40;
    for (;; N += 15) {
        elems_ = enumerate_b_lambda(kLambda0, N);
        double total = 0.0;
        cum_.clear();
        cum_.reserve(elems_.size());
        for (const auto& a : elems_) {
            total += std::pow(q, static_cast<double>(a.total()));
            cum_.push_back(total);
        }
        if (ch_ - total <= residual_tol * ch_) break;
        if (N >= n_cap)
            throw std::runtime_error("mu^m residual mass bound unachievable at N cap");
    }
    paths_.resize(elems_.size());
}

double MuStepSampler::mass(std::size_t idx) const {
    double q = std::exp(-1.0 / static_cast<double>(m_));
    return std::pow(q, static_cast<double>(elems_[idx].total())) / ch_;
}

const PLPath& MuStepSampler::path(std::size_t idx) {
    std::lock_guard<std::mutex> guard(lock_);
    if (!paths_[idx])
        paths_[idx] = std::make_unique<PLPath>(
            reconstruct_from_strings(straight_path(kLambda0, 1.0), elems_[idx]));
    return *paths_[idx];
}

std::size_t MuStepSampler::sample_index(RngStream& rng) const {
    double u = rng.next_double() * cum_.back();
    auto it = std::lower_bound(cum_.begin(), cum_.end(), u);
    std::size_t idx = static_cast<std::size_t>(it - cum_.begin());
    return std::min(idx, cum_.size() - 1);
}

std::pair<StringCoords, PLPath> sample_mu_step(int m, RngStream& rng) {
    MuStepSampler sampler(m);  // convenience entry point; heavy, prefer reuse
    std::size_t idx = sampler.sample_index(rng);
    return {sampler.element(idx), sampler.path(idx)};
}

// --- PitmanCascade ---------------------------------------------------------

PitmanCascade::PitmanCascade(bool record_output) : record_(record_output) {
    layers_.push_back(Layer{0, 0.0, Weight{}});
    if (record_) out_.push_back({0.0, Weight{}});
}

void PitmanCascade::emit(Weight w, double t) {
    out_end_ = w;
    if (record_) {
        if (!out_.empty() && out_.back().first == t)
            out_.back().second = w;
        else
            out_.push_back({t, w});
    }
}

void PitmanCascade::feed_layer(std::size_t k, Weight from, Weight to, double t0, double t1) {
    Layer& L = layers_[k];
    bool sentinel = (k + 1 == layers_.size());
    if (sentinel) {
        // pass-through until either pairing would cross below zero
        double f0 = pairing(from, kAlpha0v), f1 = pairing(to, kAlpha0v);
        double g0 = pairing(from, kAlpha1v), g1 = pairing(to, kAlpha1v);
        double uc = 2.0;  // crossing parameter in (0,1], 2 = none
        if (f1 < 0.0 && f0 > f1) uc = std::min(uc, std::max(0.0, (0.0 - f0) / (f1 - f0)));
        if (g1 < 0.0 && g0 > g1) uc = std::min(uc, std::max(0.0, (0.0 - g0) / (g1 - g0)));
        if (uc > 1.0) {
            L.in_end = to;
            emit(to, t1);
            return;
        }
        double tc = t0 + uc * (t1 - t0);
        Weight wc = (1.0 - uc) * from + uc * to;
        L.in_end = wc;
        emit(wc, tc);
        // promote the sentinel to a real layer and grow a fresh sentinel
        layers_.push_back(Layer{static_cast<int>((k + 1) % 2), 0.0, wc});
        last_change_ = tc;
        if (tc < t1) feed_layer(k, wc, to, tc, t1);
        return;
    }

    // note: recursive calls can grow layers_, so re-index instead of holding
    // the reference across them
    Coweight av = simple_coroot(L.parity);
    Weight alpha = simple_root(L.parity);
    double g0 = pairing(from, av), g1 = pairing(to, av);
    double M = L.min;
    L.in_end = to;
    if (g1 >= M) {
        feed_layer(k + 1, from - M * alpha, to - M * alpha, t0, t1);
        return;
    }
    // running min decreases during this segment
    last_change_ = t1;
    if (g0 > M) {
        double u = (M - g0) / (g1 - g0);
        double tc = t0 + u * (t1 - t0);
        Weight wc = (1.0 - u) * from + u * to;
        layers_[k].min = g1;
        if (tc > t0) feed_layer(k + 1, from - M * alpha, wc - M * alpha, t0, tc);
        feed_layer(k + 1, wc - M * alpha, to - g1 * alpha, tc, t1);
    } else {
        // min follows the pairing across the whole segment
        layers_[k].min = g1;
        feed_layer(k + 1, from - g0 * alpha, to - g1 * alpha, t0, t1);
    }
}

void PitmanCascade::feed(Weight target, double t1) {
    // t1 == t_ is a zero-duration segment; distinct breakpoint times can
    // collapse in floating point after an integer offset is added
    if (t1 < t_) throw std::invalid_argument("time must advance");
    feed_layer(0, layers_[0].in_end, target, t_, t1);
    t_ = t1;
}

double PitmanCascade::xi(std::size_t k) const {
    if (k + 1 >= layers_.size()) return 0.0;
    return -layers_[k].min;
}

StringCoords PitmanCascade::strings() const {
    std::vector<long long> a;
    for (std::size_t k = 0; k + 1 < layers_.size(); ++k) {
        double v = -layers_[k].min;
        double r = std::llround(v);
        if (std::abs(v - r) > 1e-6) throw std::runtime_error("non-integral string coordinate");
        a.push_back(std::llround(v));
    }
    return StringCoords(std::move(a));
}

// --- walks ------------------------------------------------------------------

WalkSample simulate_walk_pair(MuStepSampler& mu, long long H, RngStream& rng,
                              bool record_paths) {
    if (H < 1) throw std::invalid_argument("H must be >= 1");
    WalkSample ws;
    ws.m = mu.m();
    ws.H = H;
    PitmanCascade cascade(record_paths);
    std::vector<double> times{0.0};
    std::vector<Weight> values{Weight{}};
    Weight end{};
    // margin rule bookkeeping: minima of the cone pairings of the plus path
    // over the second half, sampled at integer times
    double min0 = std::numeric_limits<double>::infinity(), min1 = min0;
    for (long long n = 0; n < H; ++n) {
        std::size_t idx = mu.sample_index(rng);
        const PLPath& step = mu.path(idx);
        for (std::size_t j = 1; j < step.times.size(); ++j) {
            Weight w = end + step.values[j];
            double t = static_cast<double>(n) + step.times[j];
            cascade.feed(w, t);
            if (record_paths) {
                if (t == times.back()) {
                    values.back() = w;
                } else {
                    times.push_back(t);
                    values.push_back(w);
                }
            }
        }
        end = end + step.values.back();
        if (record_paths) ws.strings_at[n + 1] = cascade.strings();
        if (2 * (n + 1) >= H) {
            Weight pe = cascade.plus_endpoint();
            min0 = std::min(min0, pairing(pe, kAlpha0v));
            min1 = std::min(min1, pairing(pe, kAlpha1v));
        }
    }
    ws.xi_inf = cascade.strings();
    Weight pe = cascade.plus_endpoint();
    ws.stabilized = cascade.last_change_time() <= 0.5 * static_cast<double>(H) &&
                    pairing(pe, kAlpha0v) >= min0 + 2.0 && pairing(pe, kAlpha1v) >= min1 + 2.0;
    if (record_paths) {
        ws.path = PLPath(std::move(times), std::move(values));
        std::vector<double> pt;
        std::vector<Weight> pv;
        for (const auto& [t, w] : cascade.plus_breakpoints()) {
            if (!pt.empty() && t == pt.back()) continue;
            pt.push_back(t);
            pv.push_back(w);
        }
        ws.plus_path = PLPath(std::move(pt), std::move(pv));
    }
    return ws;
}

WalkSample simulate_walk_pair(int m, long long H, RngStream& rng, bool record_paths) {
    MuStepSampler mu(m);
    return simulate_walk_pair(mu, H, rng, record_paths);
}

// --- kernel oracle -----------------------------------------------------------

std::vector<KernelEntry> plus_kernel_oracle(int m, Weight lambda, long long N) {
    double l0 = pairing(lambda, kAlpha0v), l1 = pairing(lambda, kAlpha1v);
    if (l0 < 0 || l1 < 0 || l0 != std::floor(l0) || l1 != std::floor(l1))
        throw std::invalid_argument("lambda must be dominant integral");
    EvalPoint h = rho_vee_over(static_cast<double>(m));
    double ch_lambda = weyl_kac_character(lambda, h).value;
    double ch_l0 = weyl_kac_character(kLambda0, h).value;
    PLPath base = straight_path(kLambda0, 1.0);
    std::vector<KernelEntry> out;
    for (const StringCoords& a : enumerate_b_lambda(kLambda0, N)) {
        PLPath eta = reconstruct_from_strings(base, a);
        bool inside = true;
        for (const Weight& w : eta.values) {
            Weight v = lambda + w;
            // touching a wall is allowed (closed chamber); tolerate fp noise
            if (pairing(v, kAlpha0v) < -1e-9 || pairing(v, kAlpha1v) < -1e-9) {
                inside = false;
                break;
            }
        }
        if (!inside) continue;
        Weight endpoint = lambda + eta.values.back();
        double mass = weyl_kac_character(endpoint, h).value / (ch_lambda * ch_l0);
        out.push_back({a, endpoint, mass});
    }
    return out;
}

// --- exponential strings ------------------------------------------------------

ExpStringSample sample_exp_strings(RngStream& rng, int K, const std::vector<int>& plist) {
    for (int p : plist)
        if (p > K) throw std::invalid_argument("K must cover every requested p");
    ExpStringSample s;
    s.eps.resize(static_cast<std::size_t>(K) + 1);
    for (auto& e : s.eps) e = rng.next_exp();

    auto build_xi = [&](int p) {
        std::vector<double> xi(static_cast<std::size_t>(p) + 1);
        xi[0] = s.eps[0];
        // xi_k / k = sum_{n=k}^{p} 2 eps_n / (n(n+1)), accumulated backward
        double acc = 0.0;
        std::vector<double> tail(static_cast<std::size_t>(p) + 2, 0.0);
        for (int n = p; n >= 1; --n) {
            acc += 2.0 * s.eps[n] / (static_cast<double>(n) * (n + 1.0));
            tail[n] = acc;
        }
        for (int k = 1; k <= p; ++k) xi[k] = static_cast<double>(k) * tail[k];
        return xi;
    };

    for (int p : plist) {
        std::vector<double> xi = build_xi(p);
        double lx = 0.0;
        for (int k = 0; k <= p; ++k)
            lx += 2.0 * xi[k] * ((k % 2 == 1) ? 1.0 : -1.0);
        s.xi_p.push_back(std::move(xi));
        s.lp_x.push_back(lx);
    }

    s.xi_inf = build_xi(K);
    s.xi_inf_tail_bound = 2.0 / (static_cast<double>(K) + 1.0);  // mean of the dropped tail of xi_k/k, times k
    // truncate the martingale at an odd index so consecutive terms pair up
    // and the dropped tail has mean exactly zero
    int k_top = (K % 2 == 0) ? K - 1 : K;
    for (int k = 0; k <= k_top; ++k)
        s.l_x += 2.0 * s.eps[k] / (2.0 * (k / 2) + 1.0) * ((k % 2 == 1) ? 1.0 : -1.0);
    return s;
}

}  // namespace affine
