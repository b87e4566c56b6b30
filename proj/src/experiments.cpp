#include "affine/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "affine/characters.hpp"
#include "affine/crystal.hpp"
#include "affine/path.hpp"
#include "affine/stats.hpp"
#include "affine/stochastic.hpp"

namespace affine {

std::string ExperimentReport::csv() const {
    std::string out;
    for (const auto& r : csv_rows) {
        out += r;
        out += '\n';
    }
    return out;
}

std::string ExperimentReport::summary() const {
    std::string out;
    for (const auto& s : statistics) {
        out += name + "," + s.label + "," + format_double(s.value) + "," + format_double(s.err) +
               "," + (pass ? "1" : "0") + "\n";
    }
    return out;
}

namespace {

std::string num(double v) { return format_double(v); }

class Params {
  public:
    explicit Params(const std::map<std::string, double>& given) : given_(given) {}

    double get(const std::string& key, double def) {
        used_.insert(key);
        auto it = given_.find(key);
        double v = (it == given_.end()) ? def : it->second;
        resolved_[key] = v;
        return v;
    }
    long long geti(const std::string& key, long long def) {
        return std::llround(get(key, static_cast<double>(def)));
    }
    void finish(ExperimentReport& r) const {
        for (const auto& [k, v] : given_)
            if (!used_.count(k)) throw std::invalid_argument("unknown param: " + k);
        r.params = resolved_;
    }

  private:
    std::map<std::string, double> given_;
    std::map<std::string, double> resolved_;
    std::set<std::string> used_;
};

void stat(ExperimentReport& r, const std::string& label, double value, double err) {
    r.statistics.push_back({label, value, err});
}

// character via the alternating Weyl-orbit numerator over the product
// denominator; a second evaluator, independent of the theta-ratio route
double weyl_numerator(Weight nu, EvalPoint h) {
    auto ph = [&](Weight w) { return 2.0 * w.cA * h.a + w.cD * h.b; };
    double base = ph(nu);
    auto term = [&](long long k) {
        return std::exp(ph(translate(k, nu)) - base) - std::exp(ph(translate(k, reflect(1, nu))) - base);
    };
    double s = term(0);
    int quiet = 0;
    for (long long k = 1; k <= 4000; ++k) {
        double d = term(k) + term(-k);
        s += d;
        if (std::abs(d) < 1e-16 * std::max(1.0, std::abs(s))) {
            if (++quiet >= 3) break;
        } else {
            quiet = 0;
        }
    }
    return s;  // = e^{-<nu,h>} sum_w det(w) e^{<w(nu),h>}
}

double alt_character(Weight lam, EvalPoint h) {
    double lamh = 2.0 * lam.cA * h.a + lam.cD * h.b;
    return weyl_numerator(lam + kRho, h) / weyl_numerator(kRho, h) * std::exp(lamh);
}

// ---- A1 -------------------------------------------------------------------

ExperimentReport ex_denominator_identity(Params& P, std::uint64_t) {
    ExperimentReport r;
    double m_sel = P.get("m", 0.0);  // 0 means the full {1,2,5,10} sweep
    std::vector<double> ms = m_sel > 0.0 ? std::vector<double>{m_sel}
                                         : std::vector<double>{1.0, 2.0, 5.0, 10.0};
    r.csv_rows.push_back("m,product,sum,rel_err");
    r.pass = true;
    for (double m : ms) {
        EvalPoint h = rho_vee_over(m);
        double p = denominator_product(h), s = denominator_sum(h);
        double rel = std::abs(p - s) / std::abs(p);
        stat(r, "rel_err_m=" + num(m), rel, 0.0);
        r.csv_rows.push_back(num(m) + "," + num(p) + "," + num(s) + "," + num(rel));
        r.pass = r.pass && rel < 1e-10;
    }
    return r;
}

// ---- A2 -------------------------------------------------------------------

ExperimentReport ex_character_duality(Params& P, std::uint64_t) {
    ExperimentReport r;
    EvalPoint h = rho_vee_over(P.get("m", 2.0));
    long long N = P.geti("N", 60);
    r.csv_rows.push_back("lambda,theta,string_sum,rel_err");
    r.pass = true;
    struct Case {
        const char* name;
        Weight lam;
    } cases[] = {{"Lambda0", kLambda0}, {"2Lambda0+alpha1", 2.0 * kLambda0 + kAlpha1}};
    for (const auto& c : cases) {
        double th = weyl_kac_character(c.lam, h).value;
        double cs = character_string_sum(c.lam, h, N);
        double rel = std::abs(th - cs) / th;
        stat(r, std::string("rel_err_") + c.name, rel, 0.0);
        r.csv_rows.push_back(std::string(c.name) + "," + num(th) + "," + num(cs) + "," + num(rel));
        r.pass = r.pass && rel < 1e-8;
    }
    return r;
}

// ---- A3 -------------------------------------------------------------------

ExperimentReport ex_verma_tri_oracle(Params& P, std::uint64_t) {
    ExperimentReport r;
    EvalPoint h = rho_vee_over(P.get("m", 2.0));
    long long N = P.geti("N", 90);
    double prod = verma_character(h, VermaMode::product);
    double sum = verma_character(h, VermaMode::string_sum, 1e-12, N);
    double inv = verma_character(h, VermaMode::inverse_denominator);
    double d1 = std::abs(prod - sum) / prod;
    double d2 = std::abs(prod - inv) / prod;
    double d3 = std::abs(sum - inv) / prod;
    stat(r, "rel_err_prod_vs_string", d1, 0.0);
    stat(r, "rel_err_prod_vs_invden", d2, 0.0);
    stat(r, "rel_err_string_vs_invden", d3, 0.0);
    r.csv_rows.push_back("mode,value");
    r.csv_rows.push_back("product," + num(prod));
    r.csv_rows.push_back("string_sum," + num(sum));
    r.csv_rows.push_back("inverse_denominator," + num(inv));
    r.pass = d1 < 1e-8 && d2 < 1e-8 && d3 < 1e-8;
    return r;
}

// ---- A4 -------------------------------------------------------------------

ExperimentReport ex_cone_stay(Params& P, std::uint64_t seed) {
    ExperimentReport r;
    int m = static_cast<int>(P.geti("m", 2));
    long long n = P.geti("n", 100000);
    long long H = P.geti("H", 400);
    bool parallel = P.get("parallel", 1.0) != 0.0;
    MuStepSampler mu(m);
    double target = 1.0 / verma_character(rho_vee_over(m), VermaMode::product);
    std::vector<std::uint8_t> stay_h(n), stay_2h(n);
    for_each_replica(static_cast<std::size_t>(n), [&](std::size_t i) {
        RngStream rng(seed, i);
        Weight end{};
        long long step = 0;
        bool alive = true;
        while (alive && step < 2 * H) {
            const PLPath& eta = mu.path(mu.sample_index(rng));
            for (std::size_t j = 1; j < eta.values.size() && alive; ++j) {
                Weight w = end + eta.values[j];
                if (pairing(w, kAlpha0v) < -1e-9 || pairing(w, kAlpha1v) < -1e-9) alive = false;
            }
            end = end + eta.values.back();
            ++step;
        }
        stay_h[i] = alive || step > H;
        stay_2h[i] = alive;
    }, parallel);
    long long c1 = 0, c2 = 0;
    for (long long i = 0; i < n; ++i) {
        c1 += stay_h[i];
        c2 += stay_2h[i];
    }
    double f1 = double(c1) / n, f2 = double(c2) / n;
    double se = std::sqrt(target * (1.0 - target) / n);
    stat(r, "freq_H", f1, se);
    stat(r, "freq_2H", f2, se);
    stat(r, "target", target, 0.0);
    r.csv_rows.push_back("horizon,frequency,target,se");
    r.csv_rows.push_back(num(double(H)) + "," + num(f1) + "," + num(target) + "," + num(se));
    r.csv_rows.push_back(num(double(2 * H)) + "," + num(f2) + "," + num(target) + "," + num(se));
    // bias is nonnegative in expectation and shrinks with the horizon; the
    // walks are nested so f1 >= f2 holds pathwise
    r.pass = std::abs(f1 - target) < 4.0 * se && f1 >= f2 && f2 - target > -4.0 * se;
    return r;
}

// ---- walk helpers for A5/A6 ------------------------------------------------

// ---- A5 -------------------------------------------------------------------

ExperimentReport ex_string_law_independence(Params& P, std::uint64_t seed) {
    ExperimentReport r;
    int m = static_cast<int>(P.geti("m", 2));
    long long n = P.geti("n", 100000);
    long long H = P.geti("H", 200);
    bool parallel = P.get("parallel", 1.0) != 0.0;
    MuStepSampler mu(m);
    double q = std::exp(-1.0 / m);
    double V = verma_character(rho_vee_over(m), VermaMode::product);

    std::vector<StringCoords> pattern(n);
    std::vector<double> xi0(n), midf(n);
    std::vector<std::uint8_t> stab(n);
    for_each_replica(static_cast<std::size_t>(n), [&](std::size_t i) {
        RngStream rng(seed, i);
        WalkSample ws = simulate_walk_pair(mu, H, rng, true);
        pattern[i] = ws.xi_inf;
        xi0[i] = static_cast<double>(ws.xi_inf.at(0));
        midf[i] = std::min(pairing(evaluate(ws.plus_path, double(H / 2)), kAlpha1v), 10.0);
        stab[i] = ws.stabilized;
    }, parallel);

    // five most probable patterns of the limit law, from B(infinity) directly
    std::vector<StringCoords> top;
    for (long long a0 = 0; a0 <= 2; ++a0)
        for (long long a1 = 0; a1 <= 2; ++a1)
            for (long long a2 = 0; a2 <= 2; ++a2) {
                StringCoords c(std::vector<long long>{a0, a1, a2});
                if (c.total() <= 2 && member_b_infinity(c)) top.push_back(c);
            }
    std::sort(top.begin(), top.end());
    top.resize(5);

    std::map<std::string, long long> counts;
    for (const auto& p : pattern) ++counts[p.str()];
    double nstab = 0;
    for (auto s : stab) nstab += s;

    r.csv_rows.push_back("pattern,empirical,exact,se");
    r.pass = true;
    for (const auto& pat : top) {
        double exact = std::pow(q, double(pat.total())) / V;
        double emp = double(counts[pat.str()]) / n;
        double se = std::sqrt(exact * (1.0 - exact) / n);
        stat(r, "freq[" + pat.str() + "]", emp, se);
        r.csv_rows.push_back("\"" + pat.str() + "\"," + num(emp) + "," + num(exact) + "," + num(se));
        r.pass = r.pass && std::abs(emp - exact) < 4.0 * se;
    }
    double corr = correlation(xi0, midf);
    stat(r, "corr_xi0_midfunctional", corr, 0.0);
    stat(r, "stabilized_fraction", nstab / n, 0.0);
    r.pass = r.pass && std::abs(corr) < 0.05;
    return r;
}

// ---- A6 -------------------------------------------------------------------

ExperimentReport ex_verma_demazure_freq(Params& P, std::uint64_t seed) {
    ExperimentReport r;
    int m = static_cast<int>(P.geti("m", 2));
    long long n = P.geti("n", 100000);
    long long H = P.geti("H", 200);
    long long n2 = P.geti("n_second", 50000);
    long long t_step = P.geti("t_step", 20);
    int p_second = static_cast<int>(P.geti("p_second", 1));
    bool parallel = P.get("parallel", 1.0) != 0.0;
    MuStepSampler mu(m);
    EvalPoint h = rho_vee_over(m);
    double V = verma_character(h, VermaMode::product);

    std::vector<StringCoords> pattern(n);
    for_each_replica(static_cast<std::size_t>(n), [&](std::size_t i) {
        RngStream rng(seed, i);
        pattern[i] = simulate_walk_pair(mu, H, rng, false).xi_inf;
    }, parallel);

    r.csv_rows.push_back("p,empirical,exact,se");
    r.pass = true;
    for (int p = 0; p <= 2; ++p) {
        double exact = verma_demazure_character(p, h, 90) / V;
        long long c = 0;
        for (const auto& pat : pattern) c += (pat.at(static_cast<std::size_t>(p) + 1) == 0);
        double emp = double(c) / n;
        double se = std::sqrt(exact * (1.0 - exact) / n);
        stat(r, "freq_xi" + std::to_string(p + 1) + "_zero", emp, se);
        r.csv_rows.push_back(num(p) + "," + num(emp) + "," + num(exact) + "," + num(se));
        r.pass = r.pass && std::abs(emp - exact) < 4.0 * se;
    }

    // character-ratio identity at a fixed chain time: the per-replica
    // difference 1{xi_{p+1}(t)=0} - ch^{w_p}/ch at the observed endpoint is centered
    std::vector<double> diff(n2);
    std::map<long long, double> ratio_cache;
    for_each_replica(static_cast<std::size_t>(n2), [&](std::size_t i) {
        RngStream rng(seed + 1, i);
        WalkSample ws = simulate_walk_pair(mu, t_step, rng, true);
        const StringCoords& xi = ws.strings_at.at(t_step);
        Weight lam = ws.plus_path.values.back();
        // endpoint is a lattice weight; snap off cascade rounding noise
        lam.cL = std::round(lam.cL);
        lam.cA = std::round(2.0 * lam.cA) / 2.0;
        lam.cD = std::round(lam.cD);
        long long key = std::llround(2.0 * lam.cA);
        double ratio;
        bool have = false;
#pragma omp critical(vdfreq_cache)
        {
            auto it = ratio_cache.find(key);
            if (it != ratio_cache.end()) {
                ratio = it->second;
                have = true;
            }
        }
        if (!have) {
            ratio = demazure_character(lam, p_second, h, 40) / weyl_kac_character(lam, h).value;
#pragma omp critical(vdfreq_cache)
            ratio_cache[key] = ratio;
        }
        diff[i] = (xi.at(static_cast<std::size_t>(p_second) + 1) == 0 ? 1.0 : 0.0) - ratio;
    }, parallel);
    double md = mean(diff), sd = stderr_mean(diff);
    stat(r, "char_ratio_identity_mean_diff", md, sd);
    r.csv_rows.push_back("second_check," + num(md) + ",0," + num(sd));
    r.pass = r.pass && std::abs(md) < 4.0 * sd;
    return r;
}

// ---- A7 -------------------------------------------------------------------

ExperimentReport ex_exp_strings_brownian(Params& P, std::uint64_t seed) {
    ExperimentReport r;
    // grid-min bias in the iterated transforms scales with sqrt(dt), and the
    // max-pairwise-correlation noise floor scales with 1/sqrt(n); the coarse
    // defaults (dt=1e-3, n=2000) sit right on the acceptance thresholds
    long long n = P.geti("n", 5000);
    double T = P.get("T", 300.0);
    double dt = P.get("dt", 1.25e-4);
    bool parallel = P.get("parallel", 1.0) != 0.0;
    const int ne = 5;
    std::vector<std::vector<double>> eps(ne, std::vector<double>(n));
    for_each_replica(static_cast<std::size_t>(n), [&](std::size_t i) {
        RngStream rng(seed, i);
        GridPath g = simulate_brownian_grid(T, dt, 0.5, rng);
        std::vector<double> xi = grid_string_coords(g, ne + 1);
        eps[0][i] = xi[0];
        for (int k = 1; k < ne; ++k)
            eps[k][i] = 0.5 * ((k + 1.0) * xi[k] - double(k) * xi[k + 1]);
    }, parallel);
    r.csv_rows.push_back("k,ks_statistic,ks_pvalue");
    r.pass = true;
    for (int k = 0; k < ne; ++k) {
        KsResult ks = ks_statistic(eps[k], exp1_cdf);
        stat(r, "ks_pvalue_eps" + std::to_string(k), ks.statistic, ks.p_value);
        r.csv_rows.push_back(num(k) + "," + num(ks.statistic) + "," + num(ks.p_value));
        r.pass = r.pass && ks.p_value >= 0.005;
    }
    double worst = 0.0;
    for (int a = 0; a < ne; ++a)
        for (int b = a + 1; b < ne; ++b)
            worst = std::max(worst, std::abs(correlation(eps[a], eps[b])));
    stat(r, "max_abs_pairwise_corr", worst, 0.0);
    r.pass = r.pass && worst < 0.05;
    return r;
}

// ---- A8 -------------------------------------------------------------------

ExperimentReport ex_phi_properties(Params& P, std::uint64_t) {
    ExperimentReport r;
    r.csv_rows.push_back("t,x,phi,residual_rel");
    double worst_boundary = 0.0, worst_res = 0.0;
    bool positive = true;
    for (double t : {0.3, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0}) {
        worst_boundary = std::max(worst_boundary, std::abs(harmonic_phi(t, 0.0)));
        worst_boundary = std::max(worst_boundary, std::abs(harmonic_phi(t, t)));
        for (int i = 1; i <= 9; ++i) positive = positive && harmonic_phi(t, t * i / 10.0) > 0.0;
    }
    // fourth-order stencils keep the truncation error well under the target
    auto d1 = [](auto f, double x0, double hh) {
        return (-f(x0 + 2 * hh) + 8 * f(x0 + hh) - 8 * f(x0 - hh) + f(x0 - 2 * hh)) / (12 * hh);
    };
    auto d2 = [](auto f, double x0, double hh) {
        return (-f(x0 + 2 * hh) + 16 * f(x0 + hh) - 30 * f(x0) + 16 * f(x0 - hh) - f(x0 - 2 * hh)) /
               (12 * hh * hh);
    };
    for (double t : {0.5, 1.0, 2.0, 5.0}) {
        for (double frac : {0.3, 0.5, 0.7}) {
            double x = frac * t;
            double hh = 1e-2;
            double pt = d1([&](double tt) { return harmonic_phi(tt, x); }, t, hh);
            double px = d1([&](double xx) { return harmonic_phi(t, xx); }, x, hh);
            double pxx = d2([&](double xx) { return harmonic_phi(t, xx); }, x, hh);
            double res = pt + 0.5 * px + 0.5 * pxx;
            double scale = std::abs(pt) + 0.5 * std::abs(px) + 0.5 * std::abs(pxx) + 1e-300;
            double rel = std::abs(res) / scale;
            worst_res = std::max(worst_res, rel);
            r.csv_rows.push_back(num(t) + "," + num(x) + "," + num(harmonic_phi(t, x)) + "," +
                                 num(rel));
        }
    }
    stat(r, "worst_boundary_abs", worst_boundary, 0.0);
    stat(r, "interior_positive", positive ? 1.0 : 0.0, 0.0);
    stat(r, "worst_harmonicity_rel", worst_res, 0.0);
    r.pass = worst_boundary < 1e-12 && positive && worst_res < 1e-5;
    return r;
}

// ---- A9 -------------------------------------------------------------------

ExperimentReport ex_reconstruction(Params& P, std::uint64_t seed) {
    ExperimentReport r;
    long long n = P.geti("n", 5000);
    double T_max = P.get("T_max", 60.0);
    double dt = P.get("dt", 0.005);
    double t_eval = P.get("t_eval", 4.0);
    bool parallel = P.get("parallel", 1.0) != 0.0;
    const std::vector<int> ps{0, 2, 4, 8};
    std::vector<std::vector<double>> vals(ps.size(), std::vector<double>(n));
    std::vector<std::uint8_t> ok(n, 1);
    for_each_replica(static_cast<std::size_t>(n), [&](std::size_t i) {
        RngStream rng(seed, i);
        for (int attempt = 0;; ++attempt) {
            try {
                GridPath A = simulate_conditioned_A_sde(T_max, dt, rng, 0.2);
                ExpStringSample s = sample_exp_strings(rng, 8, ps);
                for (std::size_t j = 0; j < ps.size(); ++j) {
                    GridPath rec = reconstruct_process(A, s.xi_p[j], t_eval);
                    vals[j][i] = rec.x.back();
                }
                break;
            } catch (const std::runtime_error&) {
                if (attempt >= 4) {
                    ok[i] = 0;
                    for (std::size_t j = 0; j < ps.size(); ++j) vals[j][i] = t_eval / 2.0;
                    break;
                }
            }
        }
    }, parallel);
    auto cdf = [&](double x) { return normal_cdf(x, t_eval / 2.0, t_eval); };
    r.csv_rows.push_back("p,ks_statistic,ks_pvalue");
    std::vector<double> ds;
    double p8 = 0.0;
    for (std::size_t j = 0; j < ps.size(); ++j) {
        KsResult ks = ks_statistic(vals[j], cdf);
        ds.push_back(ks.statistic);
        p8 = ks.p_value;
        stat(r, "ks_stat_p" + std::to_string(ps[j]), ks.statistic, ks.p_value);
        r.csv_rows.push_back(num(ps[j]) + "," + num(ks.statistic) + "," + num(ks.p_value));
    }
    long long failures = 0;
    for (auto o : ok) failures += (o == 0);
    stat(r, "uncertified_replicas", double(failures), 0.0);
    bool monotone = true;
    for (std::size_t j = 1; j < ds.size(); ++j) monotone = monotone && ds[j] <= ds[j - 1];
    r.pass = monotone && p8 >= 0.01 && failures == 0;
    return r;
}

// ---- A10 ------------------------------------------------------------------

ExperimentReport ex_kernel_oracle(Params& P, std::uint64_t) {
    ExperimentReport r;
    int m = static_cast<int>(P.geti("m", 2));
    long long N = P.geti("N", 60);
    Weight lam = 3.0 * kLambda0 + kAlpha1;
    EvalPoint h = rho_vee_over(m);
    std::vector<KernelEntry> k1 = plus_kernel_oracle(m, lam, N);

    // path-level conditioning route: mu-step mass x stay indicator x harmonic
    // ratio, with characters from the Weyl-numerator/denominator evaluator
    double ch_lam = alt_character(lam, h);
    double ch_l0 = alt_character(kLambda0, h);
    double tv = 0.0, total1 = 0.0;
    for (const auto& e : k1) {
        double m2 = alt_character(e.endpoint, h) / (ch_lam * ch_l0);
        tv += std::abs(e.mass - m2);
        total1 += e.mass;
    }
    tv *= 0.5;
    stat(r, "tv_distance", tv, 0.0);
    stat(r, "total_mass", total1, 0.0);
    stat(r, "support_size", double(k1.size()), 0.0);
    r.csv_rows.push_back("statistic,value");
    r.csv_rows.push_back("tv_distance," + num(tv));
    r.csv_rows.push_back("total_mass," + num(total1));
    r.pass = tv < 1e-8 && total1 >= 1.0 - 1e-8 && total1 <= 1.0 + 1e-12;
    return r;
}

// ---- A11 ------------------------------------------------------------------

ExperimentReport ex_string_round_trip(Params& P, std::uint64_t) {
    ExperimentReport r;
    long long N = P.geti("N", 8);
    PLPath pi0 = straight_path(kLambda0, 1.0);
    long long checked = 0, bad = 0;
    for (const StringCoords& a : enumerate_b_lambda(kLambda0, N)) {
        PLPath eta = reconstruct_from_strings(pi0, a);
        auto [dom, a2] = canonical_dominant(eta);
        bool ok = (a2 == a) && dom.horizon() == 1.0;
        for (std::size_t j = 0; j < dom.times.size() && ok; ++j) {
            Weight expect = dom.times[j] * kLambda0;
            ok = std::abs(dom.values[j].cL - expect.cL) <= 1e-12 &&
                 std::abs(dom.values[j].cA) <= 1e-12 && std::abs(dom.values[j].cD) <= 1e-12;
        }
        ++checked;
        bad += !ok;
    }
    stat(r, "elements_checked", double(checked), 0.0);
    stat(r, "round_trip_failures", double(bad), 0.0);
    r.csv_rows.push_back("elements_checked,failures");
    r.csv_rows.push_back(num(double(checked)) + "," + num(double(bad)));
    r.pass = bad == 0 && checked > 0;
    return r;
}

// ---- A12 ------------------------------------------------------------------

ExperimentReport ex_conditioned_string_density(Params& P, std::uint64_t seed) {
    ExperimentReport r;
    long long n = P.geti("n", 100000);
    int p_ord = static_cast<int>(P.geti("p", 8));
    bool parallel = P.get("parallel", 1.0) != 0.0;
    std::vector<double> x0(n), x1(n);
    std::vector<std::uint8_t> ordered(n);
    for_each_replica(static_cast<std::size_t>(n), [&](std::size_t i) {
        RngStream rng(seed, i);
        ExpStringSample s = sample_exp_strings(rng, p_ord, {1, p_ord});
        x0[i] = s.xi_p[0][0];
        x1[i] = s.xi_p[0][1];
        bool ok = true;
        const auto& xp = s.xi_p[1];
        for (int k = 1; k + 1 < static_cast<int>(xp.size()); ++k)
            ok = ok && xp[k] / k >= xp[k + 1] / (k + 1.0) - 1e-12;
        ordered[i] = ok;
    }, parallel);
    KsResult k0 = ks_statistic(x0, exp1_cdf);
    KsResult k1 = ks_statistic(x1, exp1_cdf);
    double corr = correlation(x0, x1);
    long long viol = 0;
    for (auto o : ordered) viol += (o == 0);
    stat(r, "ks_pvalue_x0", k0.statistic, k0.p_value);
    stat(r, "ks_pvalue_x1", k1.statistic, k1.p_value);
    stat(r, "corr_x0_x1", corr, 0.0);
    stat(r, "ordering_violations", double(viol), 0.0);
    r.csv_rows.push_back("statistic,value");
    r.csv_rows.push_back("ks_pvalue_x0," + num(k0.p_value));
    r.csv_rows.push_back("ks_pvalue_x1," + num(k1.p_value));
    r.csv_rows.push_back("corr," + num(corr));
    r.csv_rows.push_back("ordering_violations," + num(double(viol)));
    if (viol > 0) throw std::runtime_error("ordering constraint violated");  // hard assertion
    r.pass = k0.p_value >= 0.01 && k1.p_value >= 0.01 && std::abs(corr) < 0.03;
    return r;
}

}  // namespace

const std::vector<std::string>& experiment_catalog() {
    static const std::vector<std::string> names{
        "denominator_identity",    "character_duality",   "verma_tri_oracle",
        "cone_stay",               "string_law_independence", "verma_demazure_freq",
        "exp_strings_brownian",    "phi_properties",      "reconstruction",
        "kernel_oracle",           "string_round_trip",   "conditioned_string_density"};
    return names;
}

ExperimentReport run_experiment(const std::string& name,
                                const std::map<std::string, double>& params,
                                std::uint64_t seed) {
    Params P(params);
    P.get("parallel", 1.0);  // accepted everywhere
    ExperimentReport r;
    if (name == "denominator_identity") r = ex_denominator_identity(P, seed);
    else if (name == "character_duality") r = ex_character_duality(P, seed);
    else if (name == "verma_tri_oracle") r = ex_verma_tri_oracle(P, seed);
    else if (name == "cone_stay") r = ex_cone_stay(P, seed);
    else if (name == "string_law_independence") r = ex_string_law_independence(P, seed);
    else if (name == "verma_demazure_freq") r = ex_verma_demazure_freq(P, seed);
    else if (name == "exp_strings_brownian") r = ex_exp_strings_brownian(P, seed);
    else if (name == "phi_properties") r = ex_phi_properties(P, seed);
    else if (name == "reconstruction") r = ex_reconstruction(P, seed);
    else if (name == "kernel_oracle") r = ex_kernel_oracle(P, seed);
    else if (name == "string_round_trip") r = ex_string_round_trip(P, seed);
    else if (name == "conditioned_string_density") r = ex_conditioned_string_density(P, seed);
    else throw std::invalid_argument("unknown experiment: " + name);
    r.name = name;
    P.finish(r);
    return r;
}

}  // namespace affine
