#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "entcap/capacity.hpp"
#include "entcap/conjecture.hpp"
#include "entcap/rng.hpp"

#include <cmath>
#include <stdexcept>

using namespace entcap;

namespace {

constexpr double kPi = 3.14159265358979323846;

} // namespace

TEST_CASE("objective value is pinned at a fixed parameter point") {
    ConjectureParams p{0.5, 0.1, 1.0, 2.0, 3.0};
    CHECK(std::abs(conjecture_objective(p, 0.7) - 0.16875130764593349042) < 1e-12);
}

TEST_CASE("objective is periodic in each angle") {
    ConjectureParams p{0.4, 0.15, 0.9, -1.3, 2.2};
    double base = conjecture_objective(p, 0.6);
    for (int which = 0; which < 3; ++which) {
        ConjectureParams q = p;
        (which == 0 ? q.theta : which == 1 ? q.phi : q.xi) += 2.0 * kPi;
        CHECK(std::abs(conjecture_objective(q, 0.6) - base) < 1e-12);
    }
}

TEST_CASE("objective degenerates as advertised") {
    // Coupling weight zero: only the two direct sine terms survive.
    ConjectureParams p{0.6, 0.12, kPi / 2.0, kPi / 2.0, 0.77};
    double p4 = p.p4();
    double expected = 2.0 * (std::sqrt(p.p1 * p.p2) * std::log2(p.p1 / p.p2) +
                             std::sqrt(p.p2 * p4) * std::log2(p.p2 / p4));
    CHECK(std::abs(conjecture_objective(p, 0.0) - expected) < 1e-12);

    // Uniform spectrum: all log ratios vanish.
    ConjectureParams uniform{0.25, 0.25, 1.0, 2.0, 3.0};
    CHECK(std::abs(conjecture_objective(uniform, 0.8)) < 1e-12);

    // All angles zero and no coupling weight: every term vanishes.
    ConjectureParams zeros{0.5, 0.1, 0.0, 0.0, 0.0};
    CHECK(std::abs(conjecture_objective(zeros, 0.0)) < 1e-15);
}

TEST_CASE("objective rejects an empty fourth level") {
    ConjectureParams bad{0.6, 0.2, 1.0, 1.0, 1.0};
    CHECK(bad.p4() <= 0.0);
    CHECK_THROWS_AS(conjecture_objective(bad, 0.5), std::domain_error);
    ConjectureParams bad2{0.0, 0.2, 1.0, 1.0, 1.0};
    CHECK_THROWS_AS(conjecture_objective(bad2, 0.5), std::domain_error);
}

TEST_CASE("conjectured capacity endpoints are pinned") {
    // Zero coupling weight reduces the family to the single-axis case, whose
    // capacity is alpha.
    double at_zero = conjectured_capacity(0.0);
    CHECK(std::abs(at_zero - constants().alpha) < 1e-6);

    // Full weight gives the isotropic point.
    double at_one = conjectured_capacity(1.0);
    CHECK(std::abs(at_one - 5.056000188591) < 1e-6);
}

TEST_CASE("conjectured capacity dominates random feasible samples") {
    SearchConfig cfg;
    cfg.restarts = 16;
    cfg.seed = 21;
    const double mu = 0.7;
    double best = conjectured_capacity(mu, cfg);
    SplitMix64 rng(99);
    for (int i = 0; i < 50; ++i) {
        double a = rng.uniform(1e-6, 1.0);
        double b = rng.uniform(1e-6, 1.0);
        double c = rng.uniform(1e-6, 1.0);
        double s = a + b + c;
        ConjectureParams p{a / s, 0.5 * b / s, rng.uniform(0.0, 2.0 * kPi),
                           rng.uniform(0.0, 2.0 * kPi), rng.uniform(0.0, 2.0 * kPi)};
        CHECK(best >= conjecture_objective(p, mu) - 1e-9);
    }
}

TEST_CASE("sweep fills the diagonal and filters invalid points") {
    SearchConfig cfg;
    cfg.restarts = 6;
    cfg.seed = 5;

    std::vector<SweepPoint> one = sweep({1.0}, {1.0}, {2, 2}, cfg);
    REQUIRE(one.size() == 1);
    CHECK(one[0].optimized_capacity > constants().alpha);
    REQUIRE(one[0].conjectured.has_value());
    REQUIRE(one[0].gap.has_value());
    CHECK(*one[0].gap == *one[0].conjectured - one[0].optimized_capacity);

    std::vector<SweepPoint> zero = sweep({0.0}, {0.0}, {2, 2}, cfg);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].optimized_capacity >= constants().alpha - 1e-3);

    CHECK(sweep({0.5}, {1.0}, {2, 2}, cfg).empty());

    std::vector<SweepPoint> grid = sweep({0.0, 1.0}, {0.0, 1.0}, {1, 1}, cfg);
    REQUIRE(grid.size() == 3);
    CHECK(grid[0].mu_x == 0.0);
    CHECK(grid[0].mu_y == 0.0);
    CHECK(grid[1].mu_x == 1.0);
    CHECK(grid[1].mu_y == 0.0);
    CHECK(!grid[1].conjectured.has_value());
    CHECK(grid[2].mu_x == 1.0);
    CHECK(grid[2].mu_y == 1.0);
}

TEST_CASE("sweep results are independent of grid ordering") {
    SearchConfig cfg;
    cfg.restarts = 4;
    cfg.seed = 9;
    std::vector<SweepPoint> fwd = sweep({0.0, 1.0}, {0.0, 1.0}, {1, 1}, cfg);
    std::vector<SweepPoint> rev = sweep({1.0, 0.0}, {1.0, 0.0}, {1, 1}, cfg);
    REQUIRE(fwd.size() == rev.size());
    for (const SweepPoint& f : fwd) {
        bool found = false;
        for (const SweepPoint& r : rev) {
            if (r.mu_x == f.mu_x && r.mu_y == f.mu_y) {
                found = true;
                CHECK(r.optimized_capacity == f.optimized_capacity);
                CHECK(r.conjectured.has_value() == f.conjectured.has_value());
                if (f.conjectured) CHECK(*r.conjectured == *f.conjectured);
            }
        }
        CHECK(found);
    }
}
