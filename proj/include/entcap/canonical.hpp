#pragma once

#include "entcap/qmath.hpp"

#include <string>

namespace entcap {

// Local-unitary normal form of a two-qubit coupling: coefficients
// (mu_x, mu_y, mu_z) with mu_x >= mu_y >= |mu_z|, the single-qubit unitaries
// realizing it, and the single-body remainder. Reconstruction:
//   (local_a (x) local_b) sum_i mu_i s_i(x)s_i (local_a (x) local_b)^dag
//     + single_body_a (x) I + I (x) single_body_b
// equals the input within 1e-9. The identity component of the input is
// folded into single_body_a.
struct CanonicalForm {
    double mu_x = 0.0;
    double mu_y = 0.0;
    double mu_z = 0.0;
    Eigen::Matrix2cd local_a;
    Eigen::Matrix2cd local_b;
    Eigen::Matrix2cd single_body_a;
    Eigen::Matrix2cd single_body_b;
};

// h_ij = Re tr[(s_i (x) s_j) h] / 4 over the identity+Pauli basis, so that
// sum_ij h_ij s_i (x) s_j reproduces h. Rejects non-Hermitian input.
Eigen::Matrix4d pauli_coefficients(const Matrix& h);

// SVD of the 3x3 coupling block with determinant-sign bookkeeping: both
// orthogonal factors are made proper rotations (lifting to SU(2) requires
// determinant +1) and the residual sign is carried by mu_z.
CanonicalForm canonical_form(const Matrix& h);

Matrix reconstruct(const CanonicalForm& cf);

// A named two-qubit coupling and its exact Pauli-sum matrix.
struct Interaction {
    std::string name;
    Matrix matrix;
};

// mu_x XX + mu_y YY; requires mu_x >= mu_y >= 0
Interaction xy_interaction(double mu_x, double mu_y);
// XX
Interaction xx_interaction();
// strength * XX, the rescaled coupling the product ensemble evolves under
Interaction scaled_xx_interaction(double strength);
// mu_xy (XX + YY) + ZZ, the one-parameter family swept by the conjecture
Interaction symmetric_xy_with_z(double mu_xy);
// XX + YY + ZZ
Interaction heisenberg_interaction();

} // namespace entcap
