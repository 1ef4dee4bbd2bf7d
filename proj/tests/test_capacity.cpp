#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "entcap/capacity.hpp"
#include "entcap/canonical.hpp"
#include "entcap/search.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

using namespace entcap;

namespace {

const std::complex<double> kI(0.0, 1.0);

PureState fixed_pair_state() {
    Vector amp(4);
    amp << 1.0, 2.0 * kI, -1.0, 0.5;
    amp.normalize();
    return make_state(Dims{2, 1, 2, 1}, amp);
}

PureState fixed_extended_state() {
    Vector amp(16);
    for (int k = 0; k < 16; ++k)
        amp(k) = std::complex<double>(1.0 + k, (k * 7) % 5 - 2);
    amp.normalize();
    return make_state(Dims{2, 2, 2, 2}, amp);
}

} // namespace

TEST_CASE("constants match the pinned maximizer") {
    const Constants& c = constants();
    CHECK(std::abs(c.alpha - 1.9122732889537179) < 1e-12);
    CHECK(std::abs(c.x0 - 0.91677827980048235) < 1e-12);
    // alpha is the objective value at x0.
    double at_x0 = 2.0 * std::sqrt(c.x0 * (1.0 - c.x0)) * std::log2(c.x0 / (1.0 - c.x0));
    CHECK(std::abs(c.alpha - at_x0) < 1e-14);
    // x0 is a maximum: nearby points do not beat it.
    for (double d : {-1e-5, 1e-5}) {
        double x = c.x0 + d;
        CHECK(2.0 * std::sqrt(x * (1.0 - x)) * std::log2(x / (1.0 - x)) <= c.alpha);
    }
}

TEST_CASE("optimal state structure") {
    PureState s = optimal_two_qubit_state();
    const double x0 = constants().x0;
    CHECK(s.dims == Dims{2, 1, 2, 1});
    CHECK(std::abs(s.amplitudes(0)) < 1e-15);
    CHECK(std::abs(s.amplitudes(1) - std::sqrt(x0)) < 1e-15);
    CHECK(std::abs(s.amplitudes(2) - (-kI * std::sqrt(1.0 - x0))) < 1e-15);
    CHECK(std::abs(s.amplitudes(3)) < 1e-15);
}

TEST_CASE("derivative of the reduced state is hermitian and traceless") {
    Matrix h = heisenberg_interaction().matrix;
    Matrix d = drho_dt(fixed_extended_state(), h);
    CHECK((d - d.adjoint()).norm() < 1e-12);
    CHECK(std::abs(d.trace()) < 1e-12);
    CHECK(d.rows() == 4);
}

TEST_CASE("rate of the optimal state under reference couplings") {
    PureState s = optimal_two_qubit_state();
    const double alpha = constants().alpha;

    RateResult xx = rate(s, xx_interaction().matrix);
    CHECK(!xx.divergent);
    CHECK(std::abs(xx.value - alpha) < 1e-12);

    RateResult xy = rate(s, xy_interaction(1.0, 1.0).matrix);
    CHECK(std::abs(xy.value - 2.0 * alpha) < 1e-12);

    RateResult xy_half = rate(s, xy_interaction(1.0, 0.5).matrix);
    CHECK(std::abs(xy_half.value - 1.5 * alpha) < 1e-12);

    // The optimal state is an eigenstate of the z-type coupling, so the
    // evolution is a global phase.
    RateResult zz = rate(s, kron(pauli(3), pauli(3)));
    CHECK(std::abs(zz.value) < 1e-12);
}

TEST_CASE("rate regression on fixed states") {
    PureState s1 = fixed_pair_state();
    CHECK(std::abs(rate(s1, xx_interaction().matrix).value - (-1.631559731599127705)) <
          1e-10);
    CHECK(std::abs(rate(s1, xy_interaction(1.0, 1.0).matrix).value -
                   (-2.3033784446105327604)) < 1e-10);
    CHECK(std::abs(rate(s1, heisenberg_interaction().matrix).value -
                   (-3.0711712594807107912)) < 1e-10);

    RateResult r2 = rate(fixed_extended_state(), xx_interaction().matrix);
    CHECK(!r2.divergent);
    CHECK(std::abs(r2.value - 0.13663493371182611202) < 1e-10);
    REQUIRE(r2.schmidt_spectrum.size() == 4);
    CHECK(std::abs(r2.schmidt_spectrum(0) - 0.9776193040382398225) < 1e-10);
}

TEST_CASE("near-degenerate spectrum with population flow is flagged divergent") {
    const double eps = 1e-13;
    Vector amp(4);
    amp << 0.0, std::sqrt(1.0 - eps), -kI * std::sqrt(eps), 0.0;
    PureState s = make_state(Dims{2, 1, 2, 1}, amp);
    RateResult r = rate(s, xx_interaction().matrix);
    CHECK(r.divergent);
}

TEST_CASE("closed form scales with the coefficients") {
    const double alpha = constants().alpha;
    CHECK(std::abs(single_shot_no_ancilla(canonical_form(xx_interaction().matrix)) - alpha) <
          1e-12);
    CHECK(std::abs(single_shot_no_ancilla(canonical_form(xy_interaction(1.0, 0.5).matrix)) -
                   1.5 * alpha) < 1e-12);
    CHECK(std::abs(single_shot_no_ancilla(canonical_form(heisenberg_interaction().matrix)) -
                   2.0 * alpha) < 1e-12);
}

TEST_CASE("multistart maximizes a concave quadratic deterministically") {
    Objective f = [](const Eigen::VectorXd& x) {
        Eigen::VectorXd c(2);
        c << 2.0, -1.0;
        return Eval{-(x - c).squaredNorm(), false};
    };
    Projection project = [](const Eigen::VectorXd& x) { return x; };
    Sampler sample = [](SplitMix64& rng) {
        Eigen::VectorXd x(2);
        x << rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0);
        return x;
    };
    SearchConfig cfg;
    cfg.restarts = 4;
    cfg.seed = 11;
    SearchOutcome a = multistart_maximize(f, project, sample, cfg);
    CHECK(a.best_value == doctest::Approx(0.0).epsilon(1e-6));
    CHECK(std::abs(a.best_x(0) - 2.0) < 1e-4);
    CHECK(std::abs(a.best_x(1) + 1.0) < 1e-4);

    SearchOutcome b = multistart_maximize(f, project, sample, cfg);
    CHECK(a.best_value == b.best_value);
    CHECK((a.best_x - b.best_x).norm() == 0.0);
}

TEST_CASE("rate optimizer reaches the closed form without ancillas") {
    SearchConfig cfg;
    cfg.restarts = 8;
    cfg.seed = 7;
    OptimizationResult r = optimize_rate(xx_interaction().matrix, {1, 1}, cfg);
    CHECK(!r.divergent);
    CHECK(std::abs(r.best_rate - constants().alpha) < 1e-3);
    CHECK(r.restarts == 8);
    CHECK(r.evaluations > 0);

    // Same seed, same result, bit for bit.
    OptimizationResult again = optimize_rate(xx_interaction().matrix, {1, 1}, cfg);
    CHECK(r.best_rate == again.best_rate);
    CHECK((r.best_state.amplitudes - again.best_state.amplitudes).norm() == 0.0);

    // The reported rate is attained by the reported state.
    RateResult check = rate(r.best_state, xx_interaction().matrix);
    CHECK(std::abs(check.value - r.best_rate) < 1e-12);
}

TEST_CASE("rate optimizer validates ancilla dimensions") {
    CHECK_THROWS_AS(optimize_rate(xx_interaction().matrix, {0, 1}, SearchConfig{}),
                    std::invalid_argument);
}

TEST_CASE("rate kernel is skew and pinned at the optimal spectrum") {
    const double x0 = constants().x0;
    RealVector lam(2);
    lam << x0, 1.0 - x0;
    Eigen::MatrixXd k = rate_kernel(lam);
    CHECK((k + k.transpose()).norm() == 0.0);
    // sqrt(x0(1-x0)) log2((1-x0)/x0) is minus half of alpha.
    CHECK(std::abs(k(0, 1) + 0.5 * constants().alpha) < 1e-14);

    RealVector with_zero(3);
    with_zero << 0.7, 0.3, 0.0;
    Eigen::MatrixXd kz = rate_kernel(with_zero);
    CHECK(kz(0, 2) == 0.0);
    CHECK(kz(2, 1) == 0.0);
}

TEST_CASE("bound chain saturates at the optimal state's frames") {
    SchmidtDecomposition sd = schmidt(optimal_two_qubit_state());
    BoundCheckReport rep = verify_bound_chain(sd.left_vectors, sd.right_vectors, sd.lambdas);
    REQUIRE(rep.chain_values.size() == 4);
    CHECK(std::abs(rep.chain_values[0] - constants().alpha) < 1e-9);
    CHECK(rep.substochastic_ok);
    CHECK(rep.alpha_bound_ok);
    CHECK(rep.chain_ok);
    CHECK(rep.permutation_max <= constants().alpha + 1e-10);
}

TEST_CASE("bound chain rejects malformed frames") {
    RealVector lam3(3);
    lam3 << 0.5, 0.3, 0.2;
    Matrix u3 = Matrix::Identity(3, 3);
    CHECK_THROWS_AS(verify_bound_chain(u3, u3, lam3), std::invalid_argument);

    RealVector lam2(2);
    lam2 << 0.5, 0.5;
    Matrix not_unitary = Matrix::Ones(2, 2);
    CHECK_THROWS_AS(verify_bound_chain(not_unitary, Matrix::Identity(2, 2), lam2),
                    std::invalid_argument);
}
