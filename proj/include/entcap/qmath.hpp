#pragma once

#include <Eigen/Dense>

namespace entcap {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Tensor factor dimensions of a four-part pure state. The flat amplitude
// index runs over (a, a_anc, b, b_anc) with the last factor fastest.
// An ancilla dimension of 1 means that side carries no ancilla.
struct Dims {
    int a = 2;
    int a_anc = 1;
    int b = 2;
    int b_anc = 1;

    int left() const { return a * a_anc; }
    int right() const { return b * b_anc; }
    int total() const { return left() * right(); }
    bool operator==(const Dims&) const = default;
};

struct PureState {
    Dims dims;
    Vector amplitudes;
};

// Validates length and unit norm (within 1e-10); throws std::invalid_argument.
PureState make_state(const Dims& dims, const Vector& amplitudes);

struct SchmidtDecomposition {
    RealVector lambdas;    // squared singular values, descending, sum 1
    Matrix left_vectors;   // orthonormal columns on the (a, a_anc) factor
    Matrix right_vectors;  // orthonormal columns on the (b, b_anc) factor
};

Matrix kron(const Matrix& a, const Matrix& b);

// Amplitudes reshaped to a left() x right() matrix across the a|b cut.
Matrix cut_matrix(const PureState& state);

// Reduced density matrix of the (a, a_anc) side; traces out (b, b_anc).
Matrix partial_trace_b(const PureState& state);

// Reduced density matrix of the (b, b_anc) side; traces out (a, a_anc).
Matrix partial_trace_a(const PureState& state);

// Coefficients below 1e-12 are dropped from the spectrum.
SchmidtDecomposition schmidt(const PureState& state);

// Shannon entropy (bits) of the Schmidt spectrum across the a|b cut.
double entanglement_entropy(const PureState& state);

// Entropy (bits) of a density matrix. Requires Hermitian, positive
// semidefinite within 1e-10 and unit trace within 1e-8; eigenvalues in
// [-1e-10, 0] are clamped to zero.
double von_neumann_entropy(const Matrix& rho);

// -x log2 x - (1-x) log2(1-x); throws std::domain_error outside [0, 1].
double binary_entropy(double x);

// Applies exp(-i h t) on the (a, b) qubit pair, identity on ancillas.
// h must be Hermitian 4x4 and the state must have a = b = 2.
PureState evolve(const PureState& state, const Matrix& h, double t);

// Applies h itself on the (a, b) qubit pair (no exponential).
Vector apply_pair_operator(const Matrix& h, const PureState& state);

// Checks (I (x) M)|phi> = (M^T (x) I)|phi> for the unnormalized maximally
// entangled |phi> = sum_i |i>|i>, within 1e-12 relative to the scale of M.
bool vectorization_identity_check(const Matrix& m);

// max_ij |a_ij - conj(a_ji)| <= tol * max(1, max_ij |a_ij|)
bool is_hermitian(const Matrix& a, double tol = 1e-12);

// Pauli matrices, indexed 0..3 as identity, x, y, z.
const Matrix& pauli(int i);

} // namespace entcap
