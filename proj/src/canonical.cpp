#include "entcap/canonical.hpp"

#include <Eigen/Geometry>
#include <Eigen/SVD>
#include <stdexcept>

namespace entcap {

namespace {

// SU(2) element realizing a proper rotation r: u (sigma . v) u^dag = sigma . (r v).
Eigen::Matrix2cd su2_from_rotation(const Eigen::Matrix3d& r) {
    Eigen::Quaterniond q(r);
    const std::complex<double> im(0.0, 1.0);
    Eigen::Matrix2cd u = q.w() * Eigen::Matrix2cd::Identity()
        - im * (q.x() * pauli(1) + q.y() * pauli(2) + q.z() * pauli(3));
    return u;
}

} // namespace

Eigen::Matrix4d pauli_coefficients(const Matrix& h) {
    if (h.rows() != 4 || h.cols() != 4) throw std::invalid_argument("coupling must be 4x4");
    if (!is_hermitian(h)) throw std::invalid_argument("coupling must be Hermitian");
    Eigen::Matrix4d c;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            c(i, j) = (kron(pauli(i), pauli(j)) * h).trace().real() / 4.0;
    return c;
}

CanonicalForm canonical_form(const Matrix& h) {
    Eigen::Matrix4d c = pauli_coefficients(h);
    Eigen::Matrix3d block = c.block<3, 3>(1, 1);

    Eigen::JacobiSVD<Eigen::Matrix3d> svd(block, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Eigen::Matrix3d u = svd.matrixU(), v = svd.matrixV();
    double du = u.determinant(), dv = v.determinant();
    // transfer reflection signs onto the smallest singular value
    u.col(2) *= du;
    v.col(2) *= dv;

    CanonicalForm cf;
    cf.mu_x = svd.singularValues()(0);
    cf.mu_y = svd.singularValues()(1);
    cf.mu_z = svd.singularValues()(2) * du * dv;
    cf.local_a = su2_from_rotation(u);
    cf.local_b = su2_from_rotation(v);

    cf.single_body_a = c(0, 0) * pauli(0);
    cf.single_body_b = Eigen::Matrix2cd::Zero();
    for (int i = 1; i < 4; ++i) {
        cf.single_body_a += c(i, 0) * pauli(i);
        cf.single_body_b += c(0, i) * pauli(i);
    }
    return cf;
}

Matrix reconstruct(const CanonicalForm& cf) {
    Matrix core = cf.mu_x * kron(pauli(1), pauli(1))
        + cf.mu_y * kron(pauli(2), pauli(2))
        + cf.mu_z * kron(pauli(3), pauli(3));
    Matrix locals = kron(cf.local_a, cf.local_b);
    Matrix id = Matrix::Identity(2, 2);
    return locals * core * locals.adjoint()
        + kron(cf.single_body_a, id) + kron(id, cf.single_body_b);
}

Interaction xy_interaction(double mu_x, double mu_y) {
    if (!(mu_x >= mu_y && mu_y >= 0.0))
        throw std::invalid_argument("xy_interaction requires mu_x >= mu_y >= 0");
    return {"xy", mu_x * kron(pauli(1), pauli(1)) + mu_y * kron(pauli(2), pauli(2))};
}

Interaction xx_interaction() {
    return {"xx", kron(pauli(1), pauli(1))};
}

Interaction scaled_xx_interaction(double strength) {
    return {"scaled_xx", strength * kron(pauli(1), pauli(1))};
}

Interaction symmetric_xy_with_z(double mu_xy) {
    return {"symmetric_xy_with_z",
            mu_xy * (kron(pauli(1), pauli(1)) + kron(pauli(2), pauli(2)))
                + kron(pauli(3), pauli(3))};
}

Interaction heisenberg_interaction() {
    return {"heisenberg",
            kron(pauli(1), pauli(1)) + kron(pauli(2), pauli(2)) + kron(pauli(3), pauli(3))};
}

} // namespace entcap
