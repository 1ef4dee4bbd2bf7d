#pragma once

#include "entcap/search.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace entcap {

// Parameters of the closed-form capacity ansatz for the coupling family
// mu_xy (XX + YY) + ZZ: a four-level spectrum (p1, p2, p2, p4) with
// p4 = 1 - p1 - 2 p2, plus three phases.
struct ConjectureParams {
    double p1;
    double p2;
    double theta;
    double phi;
    double xi;

    double p4() const { return 1.0 - p1 - 2.0 * p2; }
};

// 2 { sqrt(p1 p2) log2(p1/p2) [sin(theta) + mu sin(phi - xi)]
//   + sqrt(p2 p4) log2(p2/p4) [sin(phi)   + mu sin(theta - xi)]
//   + sqrt(p1 p4) log2(p1/p4) mu sin(xi) }
// Throws std::domain_error when p1, p2 or p4 is not strictly positive.
double conjecture_objective(const ConjectureParams& params, double mu_xy);

inline SearchConfig conjecture_search_defaults() {
    SearchConfig cfg;
    cfg.restarts = 64;
    return cfg;
}

// Maximizes the ansatz over its five parameters by seeded multistart local
// search, keeping an interior margin of 1e-9 from the open-domain boundary.
double conjectured_capacity(double mu_xy, SearchConfig config = conjecture_search_defaults());

struct SweepPoint {
    double mu_x;
    double mu_y;
    double optimized_capacity;
    std::optional<double> conjectured;   // present on the mu_x == mu_y diagonal
    std::optional<double> gap;
};

// Optimized capacity of mu_x XX + mu_y YY + ZZ over the grid (points with
// mu_x < mu_y are skipped), with the ansatz value filled in on the diagonal.
// Per-point seeds derive from the base seed and the coordinate values, so
// results are independent of grid ordering.
std::vector<SweepPoint> sweep(const std::vector<double>& mu_x_grid,
                              const std::vector<double>& mu_y_grid,
                              std::pair<int, int> ancilla,
                              const SearchConfig& config = SearchConfig{});

} // namespace entcap
