#pragma once

#include "entcap/canonical.hpp"
#include "entcap/qmath.hpp"
#include "entcap/search.hpp"

#include <utility>
#include <vector>

namespace entcap {

// alpha = max over x in (1/2, 1) of 2 sqrt(x(1-x)) log2(x/(1-x)), attained
// at x0. These two numbers control every closed-form capacity here.
struct Constants {
    double alpha;
    double x0;
};

const Constants& constants();

// sqrt(x0)|01> - i sqrt(1-x0)|10>, the two-qubit state whose instantaneous
// entanglement rate under XX-type couplings attains the capacity. No ancillas.
PureState optimal_two_qubit_state();

// -i tr over the (b, b_anc) side of [h (x) I, |psi><psi|].
// Hermitian and traceless up to roundoff.
Matrix drho_dt(const PureState& state, const Matrix& h);

struct RateResult {
    double value = 0.0;
    bool divergent = false;
    RealVector schmidt_spectrum;   // eigenvalues of the reduced state, descending
};

// Instantaneous entanglement entropy rate d/dt E across the a|b cut at t = 0.
// Eigenvalues below 1e-12 contribute nothing unless their population flow
// exceeds 1e-9 in magnitude, which marks the result divergent.
RateResult rate(const PureState& state, const Matrix& h);

// alpha * (mu_x + mu_y): the capacity attained without ancillas when the
// canonical mu_z vanishes, and a lower bound otherwise.
double single_shot_no_ancilla(const CanonicalForm& cf);

struct OptimizationResult {
    double best_rate = 0.0;
    PureState best_state;
    int restarts = 0;
    long evaluations = 0;
    bool converged = false;
    bool divergent = false;
    std::vector<double> history;   // per-restart best values
};

// Maximizes rate(., h) over unit-norm states on a ancilla_a (x) ancilla_b
// extension, parameterized as 2 * (2 ancilla_a) * (2 ancilla_b) real numbers
// normalized to the sphere. Deterministic given config.seed.
OptimizationResult optimize_rate(const Matrix& h,
                                 std::pair<int, int> ancilla,
                                 const SearchConfig& config = SearchConfig{});

// Skew-symmetric kernel pairing a spectrum with itself:
// k_ij = sqrt(l_i l_j) log2(l_j / l_i), zero when either entry vanishes.
// Contracting it with the frame overlap matrix gives the rate.
Eigen::MatrixXd rate_kernel(const RealVector& lambdas);

// Chain of upper bounds on the rate for XX-type couplings, evaluated on the
// frames u, v and spectrum lambdas (dimension n even, flip operator
// sigma_x (x) I_{n/2}):
//   i tr[K (Xu o Xv)] <= tr(|K| |Xu o Xv|) <= max_P tr(|K| P) <= alpha
// where o is the elementwise product and P runs over permutation matrices.
struct BoundCheckReport {
    std::vector<double> chain_values;   // the three chain values then alpha
    bool substochastic_ok = false;      // row/col abs sums of Xu o Xv <= 1
    double permutation_max = 0.0;
    bool alpha_bound_ok = false;
    bool chain_ok = false;              // weakly decreasing within 1e-10
};

// Permutations are enumerated exhaustively for n <= 6 and sampled (10^4,
// fixed internal seed) above that; sampling can only weaken the reported max.
BoundCheckReport verify_bound_chain(const Matrix& u, const Matrix& v,
                                    const RealVector& lambdas);

} // namespace entcap
