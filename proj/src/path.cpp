#include "affine/path.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "affine/crystal.hpp"

namespace affine {

bool operator<(const StringCoords& x, const StringCoords& y) {
    long long tx = x.total(), ty = y.total();
    if (tx != ty) return tx < ty;
    return x.a < y.a;
}

std::string StringCoords::str() const {
    std::string s;
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (k) s += ' ';
        s += std::to_string(a[k]);
    }
    return s;
}

PLPath::PLPath(std::vector<double> t, std::vector<Weight> v)
    : times(std::move(t)), values(std::move(v)) {
    if (times.size() != values.size() || times.size() < 2)
        throw std::invalid_argument("path needs matching times/values, at least two");
    if (times.front() != 0.0) throw std::invalid_argument("path must start at time 0");
    if (!(values.front() == Weight{})) throw std::invalid_argument("path must start at 0");
    for (std::size_t j = 1; j < times.size(); ++j)
        if (!(times[j - 1] < times[j])) throw std::invalid_argument("times must increase");
}

PLPath straight_path(Weight slope, double T) {
    return PLPath({0.0, T}, {Weight{}, T * slope});
}

Weight evaluate(const PLPath& p, double t) {
    if (t < 0.0 || t > p.horizon()) throw std::out_of_range("time outside [0,T]");
    auto it = std::lower_bound(p.times.begin(), p.times.end(), t);
    std::size_t j = static_cast<std::size_t>(it - p.times.begin());
    if (j < p.times.size() && p.times[j] == t) return p.values[j];
    // t strictly inside segment (j-1, j)
    double t0 = p.times[j - 1], t1 = p.times[j];
    double u = (t - t0) / (t1 - t0);
    return (1.0 - u) * p.values[j - 1] + u * p.values[j];
}

PLPath concatenate(const PLPath& p, const PLPath& q) {
    PLPath r = p;
    double T = p.horizon();
    Weight end = p.values.back();
    for (std::size_t j = 1; j < q.times.size(); ++j) {
        r.times.push_back(T + q.times[j]);
        r.values.push_back(end + q.values[j]);
    }
    return r;
}

PitmanResult pitman_transform_shift(int i, const PLPath& p) {
    Coweight av = simple_coroot(i);
    Weight alpha = simple_root(i);
    PLPath out;
    out.times = {0.0};
    out.values = {p.values[0]};
    double M = pairing(p.values[0], av);  // running min so far (0 for paths from 0)
    for (std::size_t j = 0; j + 1 < p.times.size(); ++j) {
        double t0 = p.times[j], t1 = p.times[j + 1];
        double g0 = pairing(p.values[j], av);
        double g1 = pairing(p.values[j + 1], av);
        if (g1 >= M) {
            // running min constant on this segment
            out.times.push_back(t1);
            out.values.push_back(p.values[j + 1] - M * alpha);
        } else {
            if (g0 > M) {
                // min detaches mid-segment; insert the crossing point
                double u = (M - g0) / (g1 - g0);
                double tc = t0 + u * (t1 - t0);
                if (tc > t0 && tc < t1) {
                    Weight wc = (1.0 - u) * p.values[j] + u * p.values[j + 1];
                    out.times.push_back(tc);
                    out.values.push_back(wc - M * alpha);
                }
            }
            // min follows the path for the rest of the segment
            out.times.push_back(t1);
            out.values.push_back(p.values[j + 1] - g1 * alpha);
            M = g1;
        }
    }
    double start = pairing(p.values[0], av);
    return {std::move(out), start - M};
}

PLPath pitman_transform(int i, const PLPath& p) {
    return pitman_transform_shift(i, p).path;
}

std::pair<PLPath, StringCoords> canonical_dominant(const PLPath& p, int max_passes) {
    PLPath cur = p;
    std::vector<long long> a;
    std::vector<double> raw;
    int zero_run = 0;
    for (int k = 0; k < max_passes; ++k) {
        PitmanResult r = pitman_transform_shift(k % 2, cur);
        raw.push_back(r.shift);
        if (std::abs(r.shift) <= 1e-9) {
            raw.back() = 0.0;
            ++zero_run;
        } else {
            zero_run = 0;
            cur = std::move(r.path);
        }
        if (zero_run >= 2) {
            a.reserve(raw.size());
            for (double v : raw) {
                double rv = std::llround(v);
                if (std::abs(v - rv) > 1e-6)
                    throw std::runtime_error("non-integral string coordinate");
                a.push_back(std::llround(v));
            }
            return {cur, StringCoords(std::move(a))};
        }
    }
    throw std::runtime_error("canonical_dominant did not stabilize");
}

namespace {

// min(x, inf_{s in [t,T]} <p(s),a_i^vee>) as a piecewise affine function,
// merged into the output path. Future infima computed backward.
PLPath inverse_with_future_inf(int i, double x, const PLPath& p) {
    if (x < 0.0) throw std::invalid_argument("string coordinate must be >= 0");
    Coweight av = simple_coroot(i);
    Weight alpha = simple_root(i);
    std::size_t n = p.times.size();
    // future minimum at each breakpoint
    std::vector<double> fut(n);
    fut[n - 1] = pairing(p.values[n - 1], av);
    for (std::size_t j = n - 1; j-- > 0;)
        fut[j] = std::min(pairing(p.values[j], av), fut[j + 1]);

    // build backward, then reverse
    std::vector<double> rt;
    std::vector<Weight> rv;
    auto emit = [&](double t, const Weight& w, double F) {
        rt.push_back(t);
        rv.push_back(w - std::min(x, F) * alpha);
    };
    emit(p.times[n - 1], p.values[n - 1], fut[n - 1]);
    for (std::size_t j = n - 1; j-- > 0;) {
        double t0 = p.times[j], t1 = p.times[j + 1];
        double g0 = pairing(p.values[j], av);
        double g1 = pairing(p.values[j + 1], av);
        double H1 = fut[j + 1];  // future min just right of the segment
        // on (t0,t1): h(t) = min(g(t) if decreasing toward t1 ... , H1)
        if (g0 > H1) {
            // h constant H1 near t1; detaches where g crosses H1 (if g dips)
            if (g1 < g0) {
                // g decreasing: g(t) <= H1 for t >= tc is impossible since g1 >= fut[j+1] = H1
                // (g1 >= H1 by definition), so h = H1 on the whole open segment
            }
            emit(t0, p.values[j], fut[j]);
        } else {
            // g0 <= H1: h follows g on a left part [t0, tc], constant H1 after
            if (g1 > H1 && g1 != g0) {
                double u = (H1 - g0) / (g1 - g0);
                double tc = t0 + u * (t1 - t0);
                if (tc > t0 && tc < t1) {
                    Weight wc = (1.0 - u) * p.values[j] + u * p.values[j + 1];
                    emit(tc, wc, H1);
                }
            }
            emit(t0, p.values[j], fut[j]);
        }
    }
    std::reverse(rt.begin(), rt.end());
    std::reverse(rv.begin(), rv.end());

    // insert the single detach point where the future min crosses x
    // (future min is nondecreasing in t); F = min(x, h)
    PLPath out;
    out.times.clear();
    out.values.clear();
    // recompute h at the collected breakpoints to find the crossing
    // h at rt[j] equals pairing difference: rv[j] = p(rt) - min(x,h)*alpha
    // simpler: rebuild with h tracked alongside
    // (we already subtracted min(x,h) at breakpoints; crossing insertion below
    // works on the h values, recovered from the original path)
    std::vector<double> hvals(rt.size());
    {
        // recompute future min at the refined breakpoints
        std::size_t m = rt.size();
        hvals[m - 1] = pairing(evaluate(p, rt[m - 1]), av);
        for (std::size_t j = m - 1; j-- > 0;)
            hvals[j] = std::min(pairing(evaluate(p, rt[j]), av), hvals[j + 1]);
    }
    out.times.push_back(rt[0]);
    out.values.push_back(evaluate(p, rt[0]) - std::min(x, hvals[0]) * simple_root(i));
    for (std::size_t j = 0; j + 1 < rt.size(); ++j) {
        double h0 = hvals[j], h1 = hvals[j + 1];
        if (h0 < x && h1 > x) {
            double u = (x - h0) / (h1 - h0);
            double tc = rt[j] + u * (rt[j + 1] - rt[j]);
            if (tc > rt[j] && tc < rt[j + 1]) {
                out.times.push_back(tc);
                out.values.push_back(evaluate(p, tc) - x * alpha);
            }
        }
        out.times.push_back(rt[j + 1]);
        out.values.push_back(evaluate(p, rt[j + 1]) - std::min(x, h1) * alpha);
    }
    return out;
}

}  // namespace

PLPath inverse_pitman(int i, double x, const PLPath& p, double T) {
    if (T != p.horizon())
        throw std::invalid_argument("finite-horizon inverse requires T = path horizon");
    return inverse_with_future_inf(i, x, p);
}

PLPath inverse_pitman_inf(int i, double x, const PLPath& p, double margin) {
    Coweight av = simple_coroot(i);
    double T = p.horizon();
    double global = pairing(p.values[0], av);
    double tail = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < p.times.size(); ++j) {
        double g = pairing(p.values[j], av);
        global = std::min(global, g);
        if (p.times[j] >= 0.75 * T) tail = std::min(tail, g);
    }
    if (margin < 0.0) margin = 2.0 * x;
    if (!(tail >= std::min(x, global) + margin))
        throw std::runtime_error("inconclusive horizon: tail infimum not certified");
    return inverse_with_future_inf(i, x, p);
}

PLPath reconstruct_from_strings(const PLPath& dominant, const StringCoords& a) {
    if (!member_b_lambda(a, dominant.values.back()))
        throw std::invalid_argument("string coordinates not in B(lambda)");
    PLPath cur = dominant;
    double T = dominant.horizon();
    for (std::size_t k = a.size(); k-- > 0;) {
        if (a.a[k] == 0) continue;
        cur = inverse_pitman(static_cast<int>(k % 2), static_cast<double>(a.a[k]), cur, T);
    }
    return cur;
}

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string serialize_path(const PLPath& p) {
    std::string s = format_double(p.horizon()) + " " + std::to_string(p.times.size()) + "\n";
    for (std::size_t j = 0; j < p.times.size(); ++j) {
        s += format_double(p.times[j]);
        s += ' ';
        s += format_double(p.values[j].cL);
        s += ' ';
        s += format_double(p.values[j].cA);
        s += ' ';
        s += format_double(p.values[j].cD);
        s += '\n';
    }
    return s;
}

PLPath deserialize_path(const std::string& text) {
    std::istringstream in(text);
    double T;
    std::size_t n;
    if (!(in >> T >> n)) throw std::runtime_error("bad path header");
    std::vector<double> times(n);
    std::vector<Weight> values(n);
    for (std::size_t j = 0; j < n; ++j) {
        std::string tok[4];
        for (auto& t : tok)
            if (!(in >> t)) throw std::runtime_error("truncated path data");
        double v[4];
        for (int k = 0; k < 4; ++k) {
            auto res = std::from_chars(tok[k].data(), tok[k].data() + tok[k].size(), v[k]);
            if (res.ec != std::errc{}) throw std::runtime_error("bad number in path data");
        }
        times[j] = v[0];
        values[j] = {v[1], v[2], v[3]};
    }
    return PLPath(std::move(times), std::move(values));
}

}  // namespace affine
