#pragma once

#include "entcap/rng.hpp"

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <vector>

namespace entcap {

// Seeded multistart local maximization shared by the rate optimizer and the
// conjectured-capacity evaluation. Each restart runs projected gradient
// ascent (central finite differences, backtracking step control) followed by
// a Nelder-Mead polish; the best restart wins, lowest index on ties.

struct SearchConfig {
    int restarts = 32;
    int max_iters = 400;
    double tol = 1e-9;         // convergence threshold on objective change
    std::uint64_t seed = 0;
    double fd_step = 1e-6;
    double initial_step = 0.1;
    int nm_max_iters = 2000;
};

// Raw objective outcome. A divergent evaluation has no finite value; the
// driver confirms it with three shrinking perturbations before treating the
// restart as unbounded, and rejects the point otherwise.
struct Eval {
    double value = 0.0;
    bool divergent = false;
};

using Objective = std::function<Eval(const Eigen::VectorXd&)>;
using Projection = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;
using Sampler = std::function<Eigen::VectorXd(SplitMix64&)>;

struct SearchOutcome {
    Eigen::VectorXd best_x;         // already projected
    double best_value = 0.0;
    long evaluations = 0;
    bool converged = false;
    bool divergent = false;         // confirmed unbounded at best_x
    std::vector<double> history;    // per-restart best values
};

SearchOutcome multistart_maximize(const Objective& objective,
                                  const Projection& project,
                                  const Sampler& sample,
                                  const SearchConfig& config);

} // namespace entcap
