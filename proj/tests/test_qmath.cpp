#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "entcap/capacity.hpp"
#include "entcap/qmath.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

using namespace entcap;

namespace {

const std::complex<double> kI(0.0, 1.0);

// Deterministic test state on a plain qubit pair.
PureState fixed_pair_state() {
    Vector amp(4);
    amp << 1.0, 2.0 * kI, -1.0, 0.5;
    amp.normalize();
    return make_state(Dims{2, 1, 2, 1}, amp);
}

// Deterministic test state with single-qubit ancillas on both sides.
PureState fixed_extended_state() {
    Vector amp(16);
    for (int k = 0; k < 16; ++k)
        amp(k) = std::complex<double>(1.0 + k, (k * 7) % 5 - 2);
    amp.normalize();
    return make_state(Dims{2, 2, 2, 2}, amp);
}

PureState bell_state() {
    Vector amp(4);
    amp << 1.0 / std::sqrt(2.0), 0.0, 0.0, 1.0 / std::sqrt(2.0);
    return make_state(Dims{2, 1, 2, 1}, amp);
}

} // namespace

TEST_CASE("kron on identity and pauli factors") {
    Matrix id2 = Matrix::Identity(2, 2);
    CHECK((kron(id2, id2) - Matrix::Identity(4, 4)).norm() == doctest::Approx(0.0));

    Matrix xx = kron(pauli(1), pauli(1));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            CHECK(std::abs(xx(i, j) - (i + j == 3 ? 1.0 : 0.0)) < 1e-15);

    Matrix zz = kron(pauli(3), pauli(3));
    Matrix expected = Matrix::Zero(4, 4);
    expected(0, 0) = 1.0;
    expected(1, 1) = -1.0;
    expected(2, 2) = -1.0;
    expected(3, 3) = 1.0;
    CHECK((zz - expected).norm() == doctest::Approx(0.0));
}

TEST_CASE("make_state validates length and norm") {
    Vector short_amp(3);
    short_amp << 1.0, 0.0, 0.0;
    CHECK_THROWS_AS(make_state(Dims{2, 1, 2, 1}, short_amp), std::invalid_argument);

    Vector unnormalized(4);
    unnormalized << 1.0, 1.0, 0.0, 0.0;
    CHECK_THROWS_AS(make_state(Dims{2, 1, 2, 1}, unnormalized), std::invalid_argument);
}

TEST_CASE("partial traces of reference states") {
    Vector product(4);
    product << 1.0, 0.0, 0.0, 0.0;
    PureState p = make_state(Dims{2, 1, 2, 1}, product);
    Matrix rho = partial_trace_b(p);
    CHECK(std::abs(rho(0, 0) - 1.0) < 1e-14);
    CHECK(std::abs(rho(1, 1)) < 1e-14);

    Matrix bell_rho = partial_trace_b(bell_state());
    CHECK((bell_rho - 0.5 * Matrix::Identity(2, 2)).norm() < 1e-14);

    const double x0 = constants().x0;
    PureState opt = optimal_two_qubit_state();
    Matrix rho_a = partial_trace_b(opt);
    CHECK(std::abs(rho_a(0, 0) - x0) < 1e-14);
    CHECK(std::abs(rho_a(1, 1) - (1.0 - x0)) < 1e-14);
    CHECK(std::abs(rho_a(0, 1)) < 1e-14);

    // The occupied receiver level swaps relative to the sender side.
    Matrix rho_b = partial_trace_a(opt);
    CHECK(std::abs(rho_b(0, 0) - (1.0 - x0)) < 1e-14);
    CHECK(std::abs(rho_b(1, 1) - x0) < 1e-14);

    CHECK(std::abs(partial_trace_a(p).trace().real() - 1.0) < 1e-12);
}

TEST_CASE("schmidt decomposition of reference states") {
    Vector product(4);
    product << 0.0, 1.0, 0.0, 0.0;
    SchmidtDecomposition sp = schmidt(make_state(Dims{2, 1, 2, 1}, product));
    REQUIRE(sp.lambdas.size() == 1);
    CHECK(sp.lambdas(0) == doctest::Approx(1.0).epsilon(1e-12));

    SchmidtDecomposition sb = schmidt(bell_state());
    REQUIRE(sb.lambdas.size() == 2);
    CHECK(sb.lambdas(0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(sb.lambdas(1) == doctest::Approx(0.5).epsilon(1e-12));

    const double x0 = constants().x0;
    SchmidtDecomposition so = schmidt(optimal_two_qubit_state());
    REQUIRE(so.lambdas.size() == 2);
    CHECK(std::abs(so.lambdas(0) - x0) < 1e-14);
    CHECK(std::abs(so.lambdas(1) - (1.0 - x0)) < 1e-14);

    SchmidtDecomposition se = schmidt(fixed_extended_state());
    REQUIRE(se.lambdas.size() == 4);
    CHECK(std::abs(se.lambdas(0) - 0.9776193040382398225) < 1e-12);
    CHECK(std::abs(se.lambdas(1) - 0.0094424282809303321) < 1e-12);
    CHECK(std::abs(se.lambdas(2) - 0.0074764657638920909) < 1e-12);
    CHECK(std::abs(se.lambdas(3) - 0.0054618019169379349) < 1e-12);
    CHECK((se.left_vectors.adjoint() * se.left_vectors - Matrix::Identity(4, 4)).norm() < 1e-10);
    CHECK((se.right_vectors.adjoint() * se.right_vectors - Matrix::Identity(4, 4)).norm() < 1e-10);
}

TEST_CASE("entanglement entropy of reference states") {
    Vector product(4);
    product << 0.0, 0.0, 1.0, 0.0;
    CHECK(entanglement_entropy(make_state(Dims{2, 1, 2, 1}, product)) ==
          doctest::Approx(0.0).epsilon(1e-12));
    CHECK(entanglement_entropy(bell_state()) == doctest::Approx(1.0).epsilon(1e-12));

    const double x0 = constants().x0;
    CHECK(std::abs(entanglement_entropy(optimal_two_qubit_state()) - binary_entropy(x0)) <
          1e-12);

    CHECK(std::abs(entanglement_entropy(fixed_pair_state()) - 0.54141045801997411679) < 1e-12);
    CHECK(std::abs(entanglement_entropy(fixed_extended_state()) - 0.18930276437177673277) <
          1e-12);
}

TEST_CASE("von neumann entropy validates and evaluates") {
    Matrix half = 0.5 * Matrix::Identity(2, 2);
    CHECK(von_neumann_entropy(half) == doctest::Approx(1.0).epsilon(1e-12));

    Matrix pure = Matrix::Zero(2, 2);
    pure(0, 0) = 1.0;
    CHECK(von_neumann_entropy(pure) == doctest::Approx(0.0).epsilon(1e-12));

    const double x0 = constants().x0;
    Matrix mixed = Matrix::Zero(2, 2);
    mixed(0, 0) = x0;
    mixed(1, 1) = 1.0 - x0;
    CHECK(std::abs(von_neumann_entropy(mixed) - binary_entropy(x0)) < 1e-12);

    Matrix non_hermitian = Matrix::Zero(2, 2);
    non_hermitian(0, 1) = 1.0;
    non_hermitian(0, 0) = 1.0;
    CHECK_THROWS_AS(von_neumann_entropy(non_hermitian), std::invalid_argument);

    CHECK_THROWS_AS(von_neumann_entropy(Matrix::Identity(2, 2)), std::invalid_argument);
}

TEST_CASE("binary entropy endpoints, peak and domain") {
    CHECK(binary_entropy(0.0) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(binary_entropy(1.0) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(binary_entropy(0.5) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::abs(binary_entropy(constants().x0) - 0.41343061461440466786) < 1e-12);
    CHECK_THROWS_AS(binary_entropy(-0.1), std::domain_error);
    CHECK_THROWS_AS(binary_entropy(1.1), std::domain_error);
}

TEST_CASE("evolve preserves norm and inverts") {
    Matrix h = kron(pauli(1), pauli(1)) + 0.5 * kron(pauli(2), pauli(3));
    PureState s = fixed_pair_state();

    PureState s0 = evolve(s, h, 0.0);
    CHECK((s0.amplitudes - s.amplitudes).norm() < 1e-12);

    PureState forward = evolve(s, h, 0.37);
    CHECK(std::abs(forward.amplitudes.norm() - 1.0) < 1e-12);
    PureState back = evolve(forward, h, -0.37);
    CHECK((back.amplitudes - s.amplitudes).norm() < 1e-10);

    Matrix bad = Matrix::Zero(4, 4);
    bad(0, 1) = 1.0;
    CHECK_THROWS_AS(evolve(s, bad, 0.1), std::invalid_argument);
}

TEST_CASE("pair operator acts on the coupled qubits only") {
    Matrix xx = kron(pauli(1), pauli(1));

    Vector amp00(4);
    amp00 << 1.0, 0.0, 0.0, 0.0;
    Vector flipped = apply_pair_operator(xx, make_state(Dims{2, 1, 2, 1}, amp00));
    CHECK(std::abs(flipped(3) - 1.0) < 1e-15);
    CHECK(flipped.norm() == doctest::Approx(1.0).epsilon(1e-12));

    // |a=0, anc_a=1, b=0, anc_b=0>: the coupling flips a and b, the ancilla
    // labels ride along.
    Vector ext = Vector::Zero(16);
    ext(4) = 1.0;
    Vector moved = apply_pair_operator(xx, make_state(Dims{2, 2, 2, 2}, ext));
    CHECK(std::abs(moved(14) - 1.0) < 1e-15);
}

TEST_CASE("vectorization identity holds for a fixed operator") {
    Matrix m(3, 3);
    m << 1.0, 2.0 * kI, -0.5,
         0.25 + kI, 0.0, 3.0,
         -kI, 1.5, 2.0 - 0.5 * kI;
    CHECK(vectorization_identity_check(m));
}

TEST_CASE("hermiticity check tolerates scale") {
    Matrix h = kron(pauli(2), pauli(2)) * 100.0;
    CHECK(is_hermitian(h));
    Matrix skew = h;
    skew(0, 1) += std::complex<double>(0.0, 1e-6);
    CHECK(!is_hermitian(skew, 1e-12));
    CHECK(is_hermitian(skew, 1e-4));
}
