#include "entcap/verify.hpp"

#include "entcap/canonical.hpp"
#include "entcap/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <stdexcept>

namespace entcap {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

CheckStat make_stat(const std::string& name, int trials, double tolerance) {
    CheckStat stat;
    stat.name = name;
    stat.trials = trials;
    stat.worst_deviation = kNegInf;
    stat.tolerance = tolerance;
    return stat;
}

// NaN metrics count as failures.
void record(CheckStat& stat, double metric) {
    stat.worst_deviation = std::max(stat.worst_deviation, metric);
    if (!(metric <= stat.tolerance)) ++stat.failures;
}

Matrix random_complex(int rows, int cols, SplitMix64& rng) {
    Matrix a(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            a(i, j) = std::complex<double>(rng.normal(), rng.normal());
    return a;
}

Vector maximally_entangled_unnormalized(int d) {
    Vector phi = Vector::Zero(d * d);
    for (int i = 0; i < d; ++i) phi(i * d + i) = 1.0;
    return phi;
}

} // namespace

Matrix random_unitary(int n, SplitMix64& rng) {
    Matrix a = random_complex(n, n, rng);
    Eigen::HouseholderQR<Matrix> qr(a);
    Matrix q = qr.householderQ();
    Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Fixing column phases to the sign of the diagonal makes the
    // distribution Haar and the result independent of the QR details.
    for (int i = 0; i < n; ++i) {
        std::complex<double> d = r(i, i);
        double mag = std::abs(d);
        q.col(i) *= (mag > 0.0) ? d / mag : std::complex<double>(1.0, 0.0);
    }
    return q;
}

Matrix random_hermitian_pair_coupling(SplitMix64& rng) {
    Matrix a = random_complex(4, 4, rng);
    return 0.5 * (a + a.adjoint()).eval();
}

PureState random_state(const Dims& dims, SplitMix64& rng) {
    Vector amp = random_complex(dims.total(), 1, rng);
    amp.normalize();
    return make_state(dims, amp);
}

RealVector random_spectrum(int n, SplitMix64& rng) {
    RealVector v(n);
    for (int i = 0; i < n; ++i) v(i) = -std::log(1.0 - rng.uniform());
    v /= v.sum();
    std::sort(v.data(), v.data() + n, std::greater<double>());
    return v;
}

SuiteReport run_bounds_suite(int trials, std::uint64_t seed) {
    if (trials <= 0) throw std::invalid_argument("trials must be positive");
    SplitMix64 rng(seed);
    const double alpha = constants().alpha;
    const int n = 4;
    const Matrix flip = kron(pauli(1), Matrix::Identity(n / 2, n / 2));

    CheckStat chain = make_stat("bound chain weakly decreasing", trials, 1e-10);
    CheckStat sub = make_stat("overlap rows and columns substochastic", trials, 1e-10);
    CheckStat envelope = make_stat("kernel entries within alpha envelope", trials, 1e-12);
    CheckStat perm = make_stat("permutation pairing below alpha", trials, 1e-10);

    for (int t = 0; t < trials; ++t) {
        Matrix u = random_unitary(n, rng);
        Matrix v = random_unitary(n, rng);
        RealVector lam = random_spectrum(n, rng);

        BoundCheckReport rep = verify_bound_chain(u, v, lam);
        double increase = kNegInf;
        for (std::size_t k = 0; k + 1 < rep.chain_values.size(); ++k)
            increase = std::max(increase, rep.chain_values[k] - rep.chain_values[k + 1]);
        record(chain, increase);

        Matrix xu = u.adjoint() * flip * u;
        Matrix xv = v.adjoint() * flip * v;
        Eigen::MatrixXd abs_had = xu.cwiseProduct(xv).cwiseAbs();
        double margin = std::max(abs_had.rowwise().sum().maxCoeff(),
                                 abs_had.colwise().sum().maxCoeff()) - 1.0;
        record(sub, margin);

        Eigen::MatrixXd kernel = rate_kernel(lam);
        double excess = kNegInf;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                excess = std::max(excess,
                                  std::abs(kernel(i, j)) - 0.5 * alpha * (lam(i) + lam(j)));
        record(envelope, excess);

        record(perm, rep.permutation_max - alpha);
    }

    SuiteReport report;
    report.checks = {chain, sub, envelope, perm};
    for (const CheckStat& c : report.checks) report.all_ok = report.all_ok && c.failures == 0;
    return report;
}

SuiteReport run_identities_suite(int trials, std::uint64_t seed) {
    if (trials <= 0) throw std::invalid_argument("trials must be positive");
    SplitMix64 rng(seed);
    const int d = 4;
    const Matrix id4 = Matrix::Identity(d, d);

    CheckStat vec = make_stat("vectorization identity", trials, 1e-12);
    CheckStat ptp = make_stat("partial trace of product pairing", trials, 1e-10);
    CheckStat srt = make_stat("schmidt round trip", trials, 1e-8);
    CheckStat ent = make_stat("entropy invariant under local unitaries", trials, 1e-9);
    CheckStat rec = make_stat("canonical reconstruction", trials, 1e-9);
    CheckStat inv = make_stat("canonical coefficients invariant under local unitaries",
                              trials, 1e-9);
    CheckStat rfd = make_stat("rate matches entropy finite difference (excess over allowance)",
                              trials, 0.0);

    const Vector phi = maximally_entangled_unnormalized(d);

    for (int t = 0; t < trials; ++t) {
        {
            Matrix m = random_complex(d, d, rng);
            Vector lhs = kron(id4, m) * phi;
            Vector rhs = kron(m.transpose(), id4) * phi;
            double dev = (lhs - rhs).norm() / std::max(1.0, m.norm());
            if (!vectorization_identity_check(m)) dev = std::max(dev, 1.0);
            record(vec, dev);
        }
        {
            Matrix m1 = random_complex(d, d, rng);
            Matrix m2 = random_complex(d, d, rng);
            Vector uvec = kron(m1, id4) * phi;
            Vector wvec = kron(m2.adjoint(), id4) * phi;
            Dims dd{d, 1, d, 1};
            double nu = uvec.norm();
            double nw = wvec.norm();
            Matrix ru = cut_matrix(make_state(dd, uvec / nu)) * nu;
            Matrix rw = cut_matrix(make_state(dd, wvec / nw)) * nw;
            Matrix lhs = ru * rw.adjoint();
            Matrix rhs = m1 * m2;
            record(ptp, (lhs - rhs).norm() / std::max(1.0, rhs.norm()));
        }
        {
            PureState s = random_state(Dims{2, 2, 2, 2}, rng);
            SchmidtDecomposition sd = schmidt(s);
            Matrix r = cut_matrix(s);
            Matrix rebuilt = Matrix::Zero(r.rows(), r.cols());
            for (Eigen::Index i = 0; i < sd.lambdas.size(); ++i)
                rebuilt += std::sqrt(sd.lambdas(i)) * sd.left_vectors.col(i) *
                           sd.right_vectors.col(i).transpose();
            record(srt, (r - rebuilt).norm());
        }
        {
            PureState s = random_state(Dims{2, 2, 2, 2}, rng);
            Matrix u4 = random_unitary(4, rng);
            Matrix v4 = random_unitary(4, rng);
            Matrix r2 = u4 * cut_matrix(s) * v4.transpose();
            Vector amp(s.dims.total());
            for (int l = 0; l < s.dims.left(); ++l)
                for (int r = 0; r < s.dims.right(); ++r)
                    amp(l * s.dims.right() + r) = r2(l, r);
            PureState s2 = make_state(s.dims, amp);
            record(ent, std::abs(entanglement_entropy(s2) - entanglement_entropy(s)));
        }
        {
            Matrix h = random_hermitian_pair_coupling(rng);
            CanonicalForm cf = canonical_form(h);
            record(rec, (reconstruct(cf) - h).norm() / std::max(1.0, h.norm()));
            Matrix g = kron(random_unitary(2, rng), random_unitary(2, rng));
            CanonicalForm cf2 = canonical_form((g * h * g.adjoint()).eval());
            double dev = std::max({std::abs(cf.mu_x - cf2.mu_x),
                                   std::abs(cf.mu_y - cf2.mu_y),
                                   std::abs(cf.mu_z - cf2.mu_z)});
            record(inv, dev);
        }
        {
            Dims dd = (t % 2 == 0) ? Dims{2, 1, 2, 1} : Dims{2, 2, 2, 2};
            PureState s = random_state(dd, rng);
            Matrix h = random_hermitian_pair_coupling(rng);
            RateResult rr = rate(s, h);
            if (!rr.divergent) {
                const double delta = 1e-5;
                double fd = (entanglement_entropy(evolve(s, h, delta)) -
                             entanglement_entropy(evolve(s, h, -delta))) / (2.0 * delta);
                double allowance = std::max(1e-4, 1e-3 * std::abs(fd));
                record(rfd, std::abs(rr.value - fd) - allowance);
            }
        }
    }

    SuiteReport report;
    report.checks = {vec, ptp, srt, ent, rec, inv, rfd};
    for (const CheckStat& c : report.checks) report.all_ok = report.all_ok && c.failures == 0;
    return report;
}

} // namespace entcap
