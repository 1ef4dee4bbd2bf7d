#include "entcap/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace entcap {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Total-valued wrapper around the raw objective. Divergent points are either
// confirmed (+inf) by three shrinking perturbations that all diverge too, or
// rejected (-inf) as isolated numerical artifacts.
class EffectiveObjective {
public:
    EffectiveObjective(const Objective& f, const Projection& project, SplitMix64& rng)
        : f_(f), project_(project), rng_(rng) {}

    double operator()(const Eigen::VectorXd& x) {
        Eigen::VectorXd p = project_(x);
        Eval e = f_(p);
        ++evaluations;
        if (!e.divergent) return e.value;
        for (double delta : {1e-6, 1e-7, 1e-8}) {
            Eigen::VectorXd probe = p;
            for (Eigen::Index i = 0; i < probe.size(); ++i) probe(i) += delta * rng_.normal();
            Eval pe = f_(project_(probe));
            ++evaluations;
            if (!pe.divergent) return -kInf;
        }
        return kInf;
    }

    long evaluations = 0;

private:
    const Objective& f_;
    const Projection& project_;
    SplitMix64& rng_;
};

struct RestartOutcome {
    Eigen::VectorXd x;
    double value = -kInf;
    bool converged = false;
    bool divergent = false;
};

void gradient_ascent(EffectiveObjective& eff, const SearchConfig& cfg,
                     Eigen::VectorXd& x, double& fx, bool& converged, bool& divergent) {
    const Eigen::Index n = x.size();
    double step = cfg.initial_step;
    converged = false;
    for (int iter = 0; iter < cfg.max_iters; ++iter) {
        Eigen::VectorXd g(n);
        for (Eigen::Index i = 0; i < n; ++i) {
            Eigen::VectorXd xp = x, xm = x;
            xp(i) += cfg.fd_step;
            xm(i) -= cfg.fd_step;
            double fp = eff(xp), fm = eff(xm);
            if (fp == kInf || fm == kInf) { divergent = true; x = fp == kInf ? xp : xm; fx = kInf; return; }
            if (std::isfinite(fp) && std::isfinite(fm)) g(i) = (fp - fm) / (2.0 * cfg.fd_step);
            else if (std::isfinite(fp)) g(i) = (fp - fx) / cfg.fd_step;
            else if (std::isfinite(fm)) g(i) = (fx - fm) / cfg.fd_step;
            else g(i) = 0.0;
        }
        if (g.norm() < 1e-13) { converged = true; return; }
        double prev = fx;
        bool improved = false;
        while (step > 1e-14) {
            Eigen::VectorXd cand = x + step * g;
            double fc = eff(cand);
            if (fc == kInf) { divergent = true; x = cand; fx = kInf; return; }
            if (fc > fx) {
                x = cand;
                fx = fc;
                step *= 1.5;
                improved = true;
                break;
            }
            step *= 0.5;
        }
        if (!improved) { converged = true; return; }
        if (std::abs(fx - prev) < cfg.tol) { converged = true; return; }
    }
}

// Nelder-Mead polish (reflection 1, expansion 2, contraction 0.5, shrink 0.5).
void nelder_mead(EffectiveObjective& eff, const SearchConfig& cfg,
                 Eigen::VectorXd& x, double& fx, bool& converged, bool& divergent) {
    const int n = static_cast<int>(x.size());
    std::vector<Eigen::VectorXd> pts(n + 1, x);
    std::vector<double> vals(n + 1);
    vals[0] = fx;
    for (int i = 0; i < n; ++i) {
        pts[i + 1](i) += (x(i) != 0.0) ? 0.05 * x(i) : 0.00025;
        vals[i + 1] = eff(pts[i + 1]);
        if (vals[i + 1] == kInf) { divergent = true; x = pts[i + 1]; fx = kInf; return; }
    }
    std::vector<int> order(n + 1);
    for (int iter = 0; iter < cfg.nm_max_iters; ++iter) {
        for (int i = 0; i <= n; ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return vals[a] > vals[b]; });
        double spread = vals[order[0]] - vals[order[n]];
        if (std::isfinite(spread) && spread < 1e-13) { converged = true; break; }

        Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
        for (int i = 0; i < n; ++i) centroid += pts[order[i]];
        centroid /= static_cast<double>(n);
        int worst = order[n];

        auto try_point = [&](double coeff, double& val_out, Eigen::VectorXd& pt_out) {
            pt_out = centroid + coeff * (centroid - pts[worst]);
            val_out = eff(pt_out);
            return val_out != kInf;
        };
        Eigen::VectorXd xr, xe, xc;
        double fr, fe, fc2;
        if (!try_point(1.0, fr, xr)) { divergent = true; x = xr; fx = kInf; return; }
        if (fr > vals[order[0]]) {
            if (!try_point(2.0, fe, xe)) { divergent = true; x = xe; fx = kInf; return; }
            if (fe > fr) { pts[worst] = xe; vals[worst] = fe; }
            else { pts[worst] = xr; vals[worst] = fr; }
            continue;
        }
        if (fr > vals[order[n - 1]]) { pts[worst] = xr; vals[worst] = fr; continue; }
        bool accepted = false;
        if (fr > vals[worst]) {
            // outside contraction, kept when it at least matches the reflection
            if (!try_point(0.5, fc2, xc)) { divergent = true; x = xc; fx = kInf; return; }
            if (fc2 >= fr) { pts[worst] = xc; vals[worst] = fc2; accepted = true; }
        } else {
            if (!try_point(-0.5, fc2, xc)) { divergent = true; x = xc; fx = kInf; return; }
            if (fc2 > vals[worst]) { pts[worst] = xc; vals[worst] = fc2; accepted = true; }
        }
        if (accepted) continue;
        for (int i = 1; i <= n; ++i) {
            pts[order[i]] = pts[order[0]] + 0.5 * (pts[order[i]] - pts[order[0]]);
            vals[order[i]] = eff(pts[order[i]]);
            if (vals[order[i]] == kInf) { divergent = true; x = pts[order[i]]; fx = kInf; return; }
        }
    }
    int best = 0;
    for (int i = 1; i <= n; ++i)
        if (vals[i] > vals[best]) best = i;
    if (vals[best] > fx) { x = pts[best]; fx = vals[best]; }
}

RestartOutcome run_restart(const Objective& objective, const Projection& project,
                           const Sampler& sample, const SearchConfig& cfg,
                           std::uint64_t restart_seed, long& evaluations) {
    SplitMix64 rng(restart_seed);
    EffectiveObjective eff(objective, project, rng);
    RestartOutcome out;

    Eigen::VectorXd x;
    double fx = -kInf;
    for (int attempt = 0; attempt < 200; ++attempt) {
        x = sample(rng);
        fx = eff(x);
        if (fx == kInf) {
            out.x = project(x);
            out.value = kInf;
            out.divergent = true;
            evaluations += eff.evaluations;
            return out;
        }
        if (std::isfinite(fx)) break;
    }
    if (!std::isfinite(fx)) {
        evaluations += eff.evaluations;
        return out;
    }

    bool converged = false, divergent = false;
    gradient_ascent(eff, cfg, x, fx, converged, divergent);
    if (!divergent) {
        bool nm_converged = false;
        nelder_mead(eff, cfg, x, fx, nm_converged, divergent);
        converged = converged || nm_converged;
    }
    out.x = project(x);
    out.value = fx;
    out.converged = converged;
    out.divergent = divergent;
    evaluations += eff.evaluations;
    return out;
}

} // namespace

SearchOutcome multistart_maximize(const Objective& objective,
                                  const Projection& project,
                                  const Sampler& sample,
                                  const SearchConfig& config) {
    SearchOutcome out;
    out.history.reserve(config.restarts);
    bool have_best = false;
    for (int r = 0; r < config.restarts; ++r) {
        RestartOutcome ro = run_restart(objective, project, sample, config,
                                        derive_seed(config.seed, static_cast<std::uint64_t>(r)),
                                        out.evaluations);
        out.history.push_back(ro.value);
        if (!have_best || ro.value > out.best_value) {
            have_best = true;
            out.best_x = ro.x;
            out.best_value = ro.value;
            out.converged = ro.converged;
            out.divergent = ro.divergent;
        }
    }
    return out;
}

} // namespace entcap
