#include "entcap/capacity.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>

namespace entcap {

namespace {

constexpr double kLog2 = 0.6931471805599453094172321;
inline double log2_safe(double x) { return std::log(x) / kLog2; }

double capacity_objective(double x) {
    return 2.0 * std::sqrt(x * (1.0 - x)) * log2_safe(x / (1.0 - x));
}

// golden-section maximization on (lo, hi) to xtol
double golden_max(double (*f)(double), double lo, double hi, double xtol) {
    const double inv_phi = 0.6180339887498948482;
    double a = lo, b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > xtol) {
        if (fc > fd) {
            b = d; d = c; fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c; c = d; fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

bool next_permutation_ok(std::vector<int>& p) {
    return std::next_permutation(p.begin(), p.end());
}

} // namespace

const Constants& constants() {
    static const Constants c = [] {
        double x0 = golden_max(&capacity_objective, 0.5, 1.0 - 1e-12, 1e-12);
        return Constants{capacity_objective(x0), x0};
    }();
    return c;
}

PureState optimal_two_qubit_state() {
    const Constants& c = constants();
    Vector amps(4);
    amps << 0.0, std::sqrt(c.x0), std::complex<double>(0.0, -std::sqrt(1.0 - c.x0)), 0.0;
    return PureState{Dims{2, 1, 2, 1}, amps};
}

Matrix drho_dt(const PureState& state, const Matrix& h) {
    if (!is_hermitian(h)) throw std::invalid_argument("coupling must be Hermitian");
    Vector hpsi = apply_pair_operator(h, state);
    Matrix f = cut_matrix(PureState{state.dims, hpsi});
    Matrix g = cut_matrix(state);
    Matrix t = f * g.adjoint();
    const std::complex<double> im(0.0, 1.0);
    return -im * (t - t.adjoint());
}

RateResult rate(const PureState& state, const Matrix& h) {
    Matrix rho = partial_trace_b(state);
    Matrix rho_dot = drho_dt(state, h);
    Eigen::SelfAdjointEigenSolver<Matrix> es(rho);
    Eigen::VectorXd evals = es.eigenvalues();
    Eigen::VectorXd flow = (es.eigenvectors().adjoint() * rho_dot * es.eigenvectors())
                               .diagonal().real();
    RateResult out;
    for (Eigen::Index i = 0; i < evals.size(); ++i) {
        double lam = evals(i), g = flow(i);
        if (lam < 1e-12) {
            if (std::abs(g) > 1e-9) out.divergent = true;
            continue;
        }
        out.value -= g * log2_safe(lam);
    }
    out.schmidt_spectrum = evals.reverse();
    return out;
}

double single_shot_no_ancilla(const CanonicalForm& cf) {
    return constants().alpha * (cf.mu_x + cf.mu_y);
}

OptimizationResult optimize_rate(const Matrix& h, std::pair<int, int> ancilla,
                                 const SearchConfig& config) {
    if (ancilla.first < 1 || ancilla.second < 1)
        throw std::invalid_argument("ancilla dimensions must be >= 1");
    if (!is_hermitian(h)) throw std::invalid_argument("coupling must be Hermitian");
    const Dims dims{2, ancilla.first, 2, ancilla.second};
    const int nc = dims.total();

    auto to_state = [dims, nc](const Eigen::VectorXd& x) {
        Vector amps(nc);
        for (int i = 0; i < nc; ++i) amps(i) = std::complex<double>(x(i), x(nc + i));
        double n = amps.norm();
        amps /= (n > 1e-300 ? n : 1.0);
        return PureState{dims, amps};
    };

    Objective objective = [&](const Eigen::VectorXd& x) {
        RateResult r = rate(to_state(x), h);
        return Eval{r.value, r.divergent};
    };
    Projection project = [](const Eigen::VectorXd& x) {
        double n = x.norm();
        return n > 1e-300 ? Eigen::VectorXd(x / n) : x;
    };
    Sampler sample = [nc](SplitMix64& rng) {
        Eigen::VectorXd x(2 * nc);
        for (int i = 0; i < 2 * nc; ++i) x(i) = rng.normal();
        return x;
    };

    SearchOutcome so = multistart_maximize(objective, project, sample, config);

    OptimizationResult out;
    out.restarts = config.restarts;
    out.evaluations = so.evaluations;
    out.converged = so.converged;
    out.divergent = so.divergent;
    out.history = std::move(so.history);
    out.best_state = to_state(so.best_x);
    out.best_rate = so.divergent ? so.best_value : rate(out.best_state, h).value;
    return out;
}

Eigen::MatrixXd rate_kernel(const RealVector& lambdas) {
    const Eigen::Index n = lambdas.size();
    Eigen::MatrixXd k = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = i + 1; j < n; ++j) {
            double li = lambdas(i), lj = lambdas(j);
            double v = (li > 0.0 && lj > 0.0) ? std::sqrt(li * lj) * log2_safe(lj / li) : 0.0;
            k(i, j) = v;
            k(j, i) = -v;   // exact skew-symmetry by construction
        }
    return k;
}

BoundCheckReport verify_bound_chain(const Matrix& u, const Matrix& v,
                                    const RealVector& lambdas) {
    const Eigen::Index n = lambdas.size();
    if (n % 2 != 0) throw std::invalid_argument("spectrum dimension must be even");
    if (u.rows() != n || u.cols() != n || v.rows() != n || v.cols() != n)
        throw std::invalid_argument("frames must match the spectrum dimension");
    Matrix id = Matrix::Identity(n, n);
    if (((u.adjoint() * u) - id).cwiseAbs().maxCoeff() > 1e-8 ||
        ((v.adjoint() * v) - id).cwiseAbs().maxCoeff() > 1e-8)
        throw std::invalid_argument("frames must be unitary");

    Matrix flip = kron(pauli(1), Matrix::Identity(n / 2, n / 2));
    Matrix xu = u.adjoint() * flip * u;
    Matrix xv = v.adjoint() * flip * v;
    Matrix had = xu.cwiseProduct(xv);
    Eigen::MatrixXd had_abs = had.cwiseAbs();

    BoundCheckReport report;
    report.substochastic_ok = true;
    for (Eigen::Index i = 0; i < n; ++i) {
        if (had_abs.row(i).sum() > 1.0 + 1e-10 || had_abs.col(i).sum() > 1.0 + 1e-10)
            report.substochastic_ok = false;
    }

    Eigen::MatrixXd kernel = rate_kernel(lambdas);
    Eigen::MatrixXd kernel_abs = kernel.cwiseAbs();

    const std::complex<double> im(0.0, 1.0);
    double c1 = (im * (kernel.cast<std::complex<double>>() * had).trace()).real();
    double c2 = (kernel_abs * had_abs).trace();

    double best_perm = 0.0;
    if (n <= 6) {
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            double t = 0.0;
            for (Eigen::Index i = 0; i < n; ++i) t += kernel_abs(i, perm[i]);
            best_perm = std::max(best_perm, t);
        } while (next_permutation_ok(perm));
    } else {
        SplitMix64 rng(0x5745455021ULL);
        std::vector<int> perm(n);
        for (int s = 0; s < 10000; ++s) {
            std::iota(perm.begin(), perm.end(), 0);
            for (Eigen::Index i = n - 1; i > 0; --i) {
                auto j = static_cast<Eigen::Index>(rng.next() % static_cast<std::uint64_t>(i + 1));
                std::swap(perm[i], perm[j]);
            }
            double t = 0.0;
            for (Eigen::Index i = 0; i < n; ++i) t += kernel_abs(i, perm[i]);
            best_perm = std::max(best_perm, t);
        }
    }

    const double alpha = constants().alpha;
    report.chain_values = {c1, c2, best_perm, alpha};
    report.permutation_max = best_perm;
    report.alpha_bound_ok = best_perm <= alpha + 1e-10;
    report.chain_ok = (c1 <= c2 + 1e-10) && (c2 <= best_perm + 1e-10) && report.alpha_bound_ok;
    return report;
}

} // namespace entcap
