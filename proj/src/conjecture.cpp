#include "entcap/conjecture.hpp"

#include "entcap/canonical.hpp"
#include "entcap/capacity.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace entcap {

namespace {

constexpr double kLog2 = 0.6931471805599453094172321;
constexpr double kTwoPi = 6.2831853071795864769252867;
constexpr double kMargin = 1e-9;

inline double pair_term(double a, double b) {
    return std::sqrt(a * b) * std::log(a / b) / kLog2;
}

// clamp probabilities to the interior margin, wrap angles
Eigen::VectorXd project_params(const Eigen::VectorXd& x) {
    Eigen::VectorXd q = x;
    q(0) = std::min(std::max(q(0), kMargin), 1.0 - kMargin);
    q(1) = std::min(std::max(q(1), kMargin), 0.5 - kMargin);
    double s = q(0) + 2.0 * q(1);
    if (s > 1.0 - kMargin) {
        double f = (1.0 - kMargin) / s;
        q(0) *= f;
        q(1) *= f;
    }
    for (int i = 2; i < 5; ++i) {
        q(i) = std::fmod(q(i), kTwoPi);
        if (q(i) < 0.0) q(i) += kTwoPi;
    }
    return q;
}

} // namespace

double conjecture_objective(const ConjectureParams& params, double mu_xy) {
    const double p1 = params.p1, p2 = params.p2, p4 = params.p4();
    if (!(p1 > 0.0) || !(p2 > 0.0) || !(p4 > 0.0))
        throw std::domain_error("spectrum weights must be strictly positive");
    return 2.0 * (pair_term(p1, p2) * (std::sin(params.theta) + mu_xy * std::sin(params.phi - params.xi))
                + pair_term(p2, p4) * (std::sin(params.phi) + mu_xy * std::sin(params.theta - params.xi))
                + pair_term(p1, p4) * mu_xy * std::sin(params.xi));
}

double conjectured_capacity(double mu_xy, SearchConfig config) {
    if (!(mu_xy >= 0.0)) throw std::invalid_argument("mu_xy must be nonnegative");

    Objective objective = [mu_xy](const Eigen::VectorXd& x) {
        ConjectureParams p{x(0), x(1), x(2), x(3), x(4)};
        return Eval{conjecture_objective(p, mu_xy), false};
    };
    Sampler sample = [](SplitMix64& rng) {
        // spectrum weights from a normalized positive triple, angles uniform
        double a = rng.uniform(), b = rng.uniform(), c = rng.uniform();
        double s = a + b + c;
        Eigen::VectorXd x(5);
        x << a / s, 0.5 * b / s, rng.uniform(0.0, kTwoPi), rng.uniform(0.0, kTwoPi),
            rng.uniform(0.0, kTwoPi);
        return x;
    };
    SearchOutcome so = multistart_maximize(objective, &project_params, sample, config);
    return so.best_value;
}

std::vector<SweepPoint> sweep(const std::vector<double>& mu_x_grid,
                              const std::vector<double>& mu_y_grid,
                              std::pair<int, int> ancilla,
                              const SearchConfig& config) {
    std::vector<SweepPoint> points;
    for (double mx : mu_x_grid) {
        for (double my : mu_y_grid) {
            if (mx < my) continue;
            // seed from the coordinate values so grid order never matters
            std::uint64_t key = derive_seed(config.seed, std::bit_cast<std::uint64_t>(mx));
            key = derive_seed(key, std::bit_cast<std::uint64_t>(my));

            Matrix h = mx * kron(pauli(1), pauli(1)) + my * kron(pauli(2), pauli(2))
                + kron(pauli(3), pauli(3));
            SearchConfig point_cfg = config;
            point_cfg.seed = key;
            SweepPoint pt;
            pt.mu_x = mx;
            pt.mu_y = my;
            pt.optimized_capacity = optimize_rate(h, ancilla, point_cfg).best_rate;
            if (mx == my) {
                SearchConfig conj_cfg = conjecture_search_defaults();
                conj_cfg.seed = derive_seed(key, 0x434F4E4AULL);
                pt.conjectured = conjectured_capacity(mx, conj_cfg);
                pt.gap = *pt.conjectured - pt.optimized_capacity;
            }
            points.push_back(pt);
        }
    }
    return points;
}

} // namespace entcap
