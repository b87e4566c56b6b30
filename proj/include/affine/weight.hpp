#pragma once

#include <cmath>
#include <stdexcept>

namespace affine {

// Weight space of affine sl2 in the basis (Lambda0, alpha1, delta).
struct Weight {
    double cL = 0.0;  // coefficient of Lambda0
    double cA = 0.0;  // coefficient of alpha1
    double cD = 0.0;  // coefficient of delta

    friend Weight operator+(Weight a, Weight b) {
        return {a.cL + b.cL, a.cA + b.cA, a.cD + b.cD};
    }
    friend Weight operator-(Weight a, Weight b) {
        return {a.cL - b.cL, a.cA - b.cA, a.cD - b.cD};
    }
    friend Weight operator*(double s, Weight w) {
        return {s * w.cL, s * w.cA, s * w.cD};
    }
    friend Weight operator-(Weight w) { return {-w.cL, -w.cA, -w.cD}; }
    friend bool operator==(Weight a, Weight b) {
        return a.cL == b.cL && a.cA == b.cA && a.cD == b.cD;
    }
};

// Coweight space in the basis (c, alpha1^vee, d).
struct Coweight {
    double cC = 0.0;
    double cAv = 0.0;
    double cDv = 0.0;

    friend Coweight operator+(Coweight a, Coweight b) {
        return {a.cC + b.cC, a.cAv + b.cAv, a.cDv + b.cDv};
    }
    friend Coweight operator*(double s, Coweight h) {
        return {s * h.cC, s * h.cAv, s * h.cDv};
    }
};

inline constexpr Weight kLambda0{1.0, 0.0, 0.0};
inline constexpr Weight kAlpha1{0.0, 1.0, 0.0};
inline constexpr Weight kDelta{0.0, 0.0, 1.0};
inline constexpr Weight kAlpha0{0.0, -1.0, 1.0};   // delta - alpha1
inline constexpr Weight kRho{2.0, 0.5, 0.0};       // 2*Lambda0 + alpha1/2

inline constexpr Coweight kC{1.0, 0.0, 0.0};
inline constexpr Coweight kAlpha1v{0.0, 1.0, 0.0};
inline constexpr Coweight kD{0.0, 0.0, 1.0};
inline constexpr Coweight kAlpha0v{1.0, -1.0, 0.0};  // c - alpha1^vee
inline constexpr Coweight kRhov{0.0, 0.5, 2.0};      // 2d + alpha1^vee/2

// Generated by <Lambda0,c>=1, <alpha1,alpha1v>=2, <delta,d>=1, rest zero.
inline double pairing(Weight w, Coweight h) {
    return w.cL * h.cC + 2.0 * w.cA * h.cAv + w.cD * h.cDv;
}

inline Coweight simple_coroot(int i) {
    if (i == 0) return kAlpha0v;
    if (i == 1) return kAlpha1v;
    throw std::invalid_argument("simple root index must be 0 or 1");
}

inline Weight simple_root(int i) {
    if (i == 0) return kAlpha0;
    if (i == 1) return kAlpha1;
    throw std::invalid_argument("simple root index must be 0 or 1");
}

inline Weight reflect(int i, Weight w) {
    return w - pairing(w, simple_coroot(i)) * simple_root(i);
}

// Translation part of the affine Weyl group, normalized invariant form:
// (w,delta) = cL, (w,alpha1) = 2*cA.
inline Weight translate(long long k, Weight w) {
    double wd = w.cL;
    double wa = 2.0 * w.cA;
    double kk = static_cast<double>(k);
    return w + kk * wd * kAlpha1 - (kk * wa + kk * kk * wd) * kDelta;
}

inline double level(Weight w) { return w.cL; }
inline double delta_part(Weight w) { return w.cD; }

// Image in the quotient mod delta, chamber coordinates (t,x).
struct ChamberPoint {
    double t = 0.0;  // pairing with c
    double x = 0.0;  // pairing with alpha1^vee

    bool interior() const { return 0.0 < x && x < t; }
    bool closure(double tol = 0.0) const { return -tol <= x && x <= t + tol; }
};

inline ChamberPoint project_mod_delta(Weight w) {
    return {pairing(w, kC), pairing(w, kAlpha1v)};
}

}  // namespace affine
