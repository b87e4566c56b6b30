#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "affine/weight.hpp"

namespace affine {

// Crystal element: finitely supported nonnegative integers, trailing zeros trimmed.
struct StringCoords {
    std::vector<long long> a;

    StringCoords() = default;
    explicit StringCoords(std::vector<long long> v) : a(std::move(v)) { trim(); }

    void trim() {
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    long long total() const {
        long long s = 0;
        for (long long v : a) s += v;
        return s;
    }
    long long at(std::size_t k) const { return k < a.size() ? a[k] : 0; }
    std::size_t size() const { return a.size(); }

    friend bool operator==(const StringCoords& x, const StringCoords& y) { return x.a == y.a; }
    friend bool operator<(const StringCoords& x, const StringCoords& y);
    std::string str() const;  // space-separated entries
};

// Piecewise linear path on [0,T], path(0) = 0, linear between breakpoints.
struct PLPath {
    std::vector<double> times;    // 0 = t0 < ... < tn = T
    std::vector<Weight> values;   // values[0] = 0

    PLPath() : times{0.0}, values{Weight{}} {}
    PLPath(std::vector<double> t, std::vector<Weight> v);

    double horizon() const { return times.back(); }
    std::size_t segments() const { return times.size() - 1; }

    friend bool operator==(const PLPath& p, const PLPath& q) {
        return p.times == q.times && p.values == q.values;
    }
};

// t |-> t*Lambda0 on [0,T]
PLPath straight_path(Weight slope, double T);

Weight evaluate(const PLPath& p, double t);
PLPath concatenate(const PLPath& p, const PLPath& q);

// Exact Pitman transform; also reports the endpoint shift -inf<p,alpha_i^vee>.
struct PitmanResult {
    PLPath path;
    double shift;  // >= 0; 0 iff the transform was a no-op
};
PitmanResult pitman_transform_shift(int i, const PLPath& p);
PLPath pitman_transform(int i, const PLPath& p);

// Alternating transforms P_{a0}, P_{a1}, ... until two consecutive no-ops.
std::pair<PLPath, StringCoords> canonical_dominant(const PLPath& p, int max_passes = 10000);

// I_{alpha_i}^{x,T}: subtract min(x, future infimum of the pairing) * alpha_i.
PLPath inverse_pitman(int i, double x, const PLPath& p, double T);
// T = infinity mode: future infima computed on [t, horizon], certified by
// requiring the infimum over the final quarter to clear the attained one by margin.
PLPath inverse_pitman_inf(int i, double x, const PLPath& p, double margin);

// The unique path in the Littelmann module of `dominant` with string coords a.
PLPath reconstruct_from_strings(const PLPath& dominant, const StringCoords& a);

// Text format: header "T n", then one "t cL cA cD" line per breakpoint.
// Shortest round-trip decimal printing, bit-exact on re-read.
std::string serialize_path(const PLPath& p);
PLPath deserialize_path(const std::string& text);

// Shortest decimal representation that round-trips the double exactly.
std::string format_double(double v);

}  // namespace affine
