#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "affine/crystal.hpp"
#include "affine/path.hpp"
#include "affine/rng.hpp"
#include "affine/weight.hpp"

namespace affine {

// --- discrete chain ------------------------------------------------------

// Step law mu^m on B(Lambda0): P(a) = q^{sum a} / ch_{Lambda0}(rho_vee/m).
class MuStepSampler {
  public:
    explicit MuStepSampler(int m, double residual_tol = 1e-10, long long n_cap = 130);

    int m() const { return m_; }
    std::size_t support_size() const { return elems_.size(); }
    double char_value() const { return ch_; }
    double mass(std::size_t idx) const;
    const StringCoords& element(std::size_t idx) const { return elems_[idx]; }
    const PLPath& path(std::size_t idx);  // lazily built and cached, thread safe
    std::size_t sample_index(RngStream& rng) const;

  private:
    int m_;
    double ch_;
    std::vector<StringCoords> elems_;
    std::vector<double> cum_;  // cumulative masses
    std::vector<std::unique_ptr<PLPath>> paths_;
    std::mutex lock_;
};

std::pair<StringCoords, PLPath> sample_mu_step(int m, RngStream& rng);

// Streaming alternating Pitman transforms of a growing path; layer k holds the
// running minimum of the pairing with alpha_{k mod 2}, so xi_k(t) = -min_k(t).
class PitmanCascade {
  public:
    explicit PitmanCascade(bool record_output = false);

    // extend the input path linearly from its current endpoint to (t1, target)
    void feed(Weight target, double t1);

    std::size_t depth() const { return layers_.size() - 1; }  // excludes sentinel
    double xi(std::size_t k) const;
    StringCoords strings() const;  // requires near-integer values
    Weight plus_endpoint() const { return out_end_; }
    double now() const { return t_; }
    double last_change_time() const { return last_change_; }
    const std::vector<std::pair<double, Weight>>& plus_breakpoints() const { return out_; }

  private:
    struct Layer {
        int parity;
        double min = 0.0;   // running min of the input pairing (<= 0)
        Weight in_end{};    // current input endpoint
    };
    void feed_layer(std::size_t k, Weight from, Weight to, double t0, double t1);
    void emit(Weight w, double t);

    std::vector<Layer> layers_;  // last one is the pass-through sentinel
    double t_ = 0.0;
    double last_change_ = 0.0;
    bool record_;
    Weight out_end_{};
    std::vector<std::pair<double, Weight>> out_;
};

struct WalkSample {
    PLPath path;        // Pi^m on [0,H]
    PLPath plus_path;   // P Pi^m
    std::map<long long, StringCoords> strings_at;
    int m = 1;
    long long H = 0;
    bool stabilized = false;   // margin rule, see simulate_walk_pair
    StringCoords xi_inf;       // strings at H (the xi(infinity) candidate)
};

WalkSample simulate_walk_pair(int m, long long H, RngStream& rng, bool record_paths = true);
WalkSample simulate_walk_pair(MuStepSampler& mu, long long H, RngStream& rng,
                              bool record_paths = true);

struct KernelEntry {
    StringCoords step;
    Weight endpoint;  // lambda + eta(1)
    double mass;
};

// One-step law of the cone-conditioned walk from lambda (enumerated, exact).
std::vector<KernelEntry> plus_kernel_oracle(int m, Weight lambda, long long N);

// --- exponential string coordinates --------------------------------------

struct ExpStringSample {
    std::vector<double> eps;                // iid Exp(1), indices 0..K
    std::vector<std::vector<double>> xi_p;  // for each requested p: xi_{.,p}, length p+1
    std::vector<double> xi_inf;             // truncated xi(infinity), length K+1
    double xi_inf_tail_bound = 0.0;         // bound on the dropped tail of xi_k/k
    std::vector<double> lp_x;               // <L_p, alpha1^vee> for each requested p
    double l_x = 0.0;                       // <L, alpha1^vee> (truncated series)
};

ExpStringSample sample_exp_strings(RngStream& rng, int K, const std::vector<int>& plist);

// --- Brownian / conditioned diffusion side --------------------------------

// phi_{1/2}(t,x) and phi_{iu+1/2}(t,x) (the latter includes the 1/cosh u factor).
double harmonic_phi(double t, double x, double tol = 1e-14);
std::complex<double> harmonic_phi_c(double u, double t, double x, double tol = 1e-14);
double harmonic_phi_dx(double t, double x, double tol = 1e-14);  // d/dx phi_{1/2}

// Uniform-grid scalar path: value j lives at time t0 + j*dt.
struct GridPath {
    double t0 = 0.0;
    double dt = 1.0;
    std::vector<double> x;
    double time(std::size_t j) const { return t0 + dt * static_cast<double>(j); }
    double back_time() const { return time(x.size() - 1); }
};

// x-coordinate of B(t) = t Lambda0 + (b_t + t/2) alpha1/2 on a grid.
GridPath simulate_brownian_grid(double T, double dt, double drift, RngStream& rng);

// xi_0..xi_{K-1} of a grid path via iterated grid Pitman transforms; stops
// early if a full alternating pass is a no-op.
std::vector<double> grid_string_coords(const GridPath& g, int K);

// Transition density of the drifted BM killed at the cone walls x=0, x=t.
double killed_kernel(double s, double y, double t, double x, double drift = 0.5);

// Doob-conditioned process A. The chain route follows the discrete
// construction (Pi^m_+ / m at integer times); the SDE route integrates the
// h-transform generator and is what large-scale runs use.
GridPath simulate_conditioned_A_chain(int m, double T, RngStream& rng);
GridPath simulate_conditioned_A_sde(double T, double dt, RngStream& rng, double t_entrance = 0.2);

// Composition I_0^{xi_0} ... I_p^{xi_p} A of inverse transforms, on [0, T_obs].
GridPath reconstruct_process(const GridPath& A, const std::vector<double>& xi_p, double T_obs,
                             double margin_scale = 2.0);

struct PsiResult {
    std::complex<double> value;
    double stderr_mod = 0.0;  // standard error of the Monte Carlo mean (modulus)
};

PsiResult psi_p(double u, ChamberPoint lambda, int p, long long n_mc, RngStream& rng);

}  // namespace affine
