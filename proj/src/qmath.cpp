#include "entcap/qmath.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace entcap {

namespace {
constexpr double kLog2 = 0.6931471805599453094172321;
inline double log2_safe(double x) { return std::log(x) / kLog2; }
} // namespace

PureState make_state(const Dims& dims, const Vector& amplitudes) {
    if (dims.a < 1 || dims.a_anc < 1 || dims.b < 1 || dims.b_anc < 1)
        throw std::invalid_argument("state dimensions must be >= 1");
    if (amplitudes.size() != dims.total())
        throw std::invalid_argument("amplitude count does not match dimensions");
    double n = amplitudes.norm();
    if (std::abs(n - 1.0) > 1e-10)
        throw std::invalid_argument("state norm deviates from 1 beyond 1e-10");
    return PureState{dims, amplitudes};
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

Matrix cut_matrix(const PureState& state) {
    const int l = state.dims.left(), r = state.dims.right();
    Matrix m(l, r);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < r; ++j) m(i, j) = state.amplitudes(i * r + j);
    return m;
}

Matrix partial_trace_b(const PureState& state) {
    Matrix m = cut_matrix(state);
    return m * m.adjoint();
}

Matrix partial_trace_a(const PureState& state) {
    Matrix m = cut_matrix(state);
    // rho_b[r, r'] = sum_l m[l, r] conj(m[l, r'])
    return (m.adjoint() * m).transpose();
}

SchmidtDecomposition schmidt(const PureState& state) {
    Eigen::JacobiSVD<Matrix> svd(cut_matrix(state),
                                 Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    int keep = 0;
    while (keep < sv.size() && sv(keep) * sv(keep) >= 1e-12) ++keep;
    SchmidtDecomposition out;
    out.lambdas = sv.head(keep).array().square();
    out.left_vectors = svd.matrixU().leftCols(keep);
    // amplitudes reconstruct as sum_i s_i u_i (x) conj(v_i)
    out.right_vectors = svd.matrixV().leftCols(keep).conjugate();
    return out;
}

double entanglement_entropy(const PureState& state) {
    Eigen::JacobiSVD<Matrix> svd(cut_matrix(state));
    double e = 0.0;
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
        double lam = svd.singularValues()(i);
        lam *= lam;
        if (lam >= 1e-12) e -= lam * log2_safe(lam);
    }
    return e;
}

double von_neumann_entropy(const Matrix& rho) {
    if (rho.rows() != rho.cols()) throw std::invalid_argument("density matrix must be square");
    if (!is_hermitian(rho, 1e-10)) throw std::invalid_argument("density matrix must be Hermitian");
    if (std::abs(rho.trace().real() - 1.0) > 1e-8 || std::abs(rho.trace().imag()) > 1e-8)
        throw std::invalid_argument("density matrix must have unit trace");
    Eigen::SelfAdjointEigenSolver<Matrix> es(rho, Eigen::EigenvaluesOnly);
    double e = 0.0;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        double lam = es.eigenvalues()(i);
        if (lam < -1e-10) throw std::invalid_argument("density matrix must be positive semidefinite");
        if (lam > 0.0) e -= lam * log2_safe(lam);
    }
    return e;
}

double binary_entropy(double x) {
    if (x < 0.0 || x > 1.0) throw std::domain_error("binary_entropy argument outside [0, 1]");
    double e = 0.0;
    if (x > 0.0) e -= x * log2_safe(x);
    if (x < 1.0) e -= (1.0 - x) * log2_safe(1.0 - x);
    return e;
}

Vector apply_pair_operator(const Matrix& h, const PureState& state) {
    if (h.rows() != 4 || h.cols() != 4)
        throw std::invalid_argument("pair operator must be 4x4");
    if (state.dims.a != 2 || state.dims.b != 2)
        throw std::invalid_argument("pair operator requires qubit a and b factors");
    const int na = state.dims.a_anc, nb = state.dims.b_anc;
    auto idx = [&](int a, int ap, int b, int bp) {
        return ((a * na + ap) * 2 + b) * nb + bp;
    };
    Vector out = Vector::Zero(state.amplitudes.size());
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < 2; ++d) {
                    auto w = h(a * 2 + b, c * 2 + d);
                    if (w == std::complex<double>(0.0, 0.0)) continue;
                    for (int ap = 0; ap < na; ++ap)
                        for (int bp = 0; bp < nb; ++bp)
                            out(idx(a, ap, b, bp)) += w * state.amplitudes(idx(c, ap, d, bp));
                }
    return out;
}

PureState evolve(const PureState& state, const Matrix& h, double t) {
    if (!is_hermitian(h)) throw std::invalid_argument("evolution generator must be Hermitian");
    Eigen::SelfAdjointEigenSolver<Matrix> es(h);
    Vector phases(es.eigenvalues().size());
    for (Eigen::Index i = 0; i < phases.size(); ++i)
        phases(i) = std::exp(std::complex<double>(0.0, -es.eigenvalues()(i) * t));
    Matrix u = es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
    PureState out{state.dims, apply_pair_operator(u, state)};
    return out;
}

bool vectorization_identity_check(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("operator must be square");
    const Eigen::Index d = m.rows();
    Vector phi = Vector::Zero(d * d);
    for (Eigen::Index i = 0; i < d; ++i) phi(i * d + i) = 1.0;
    Matrix id = Matrix::Identity(d, d);
    Vector lhs = kron(id, m) * phi;
    Vector rhs = kron(m.transpose(), id) * phi;
    double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    return (lhs - rhs).cwiseAbs().maxCoeff() <= 1e-12 * scale;
}

bool is_hermitian(const Matrix& a, double tol) {
    if (a.rows() != a.cols()) return false;
    double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
    return (a - a.adjoint()).cwiseAbs().maxCoeff() <= tol * scale;
}

const Matrix& pauli(int i) {
    static const Matrix mats[4] = {
        (Matrix(2, 2) << 1, 0, 0, 1).finished(),
        (Matrix(2, 2) << 0, 1, 1, 0).finished(),
        (Matrix(2, 2) << 0, std::complex<double>(0, -1), std::complex<double>(0, 1), 0).finished(),
        (Matrix(2, 2) << 1, 0, 0, -1).finished(),
    };
    if (i < 0 || i > 3) throw std::invalid_argument("pauli index must be 0..3");
    return mats[i];
}

} // namespace entcap
