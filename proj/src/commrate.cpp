#include "entcap/commrate.hpp"

#include "entcap/capacity.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <utility>

namespace entcap {

Ensemble make_ensemble(std::vector<EnsembleMember> members) {
    if (members.empty()) throw std::invalid_argument("ensemble must have members");
    double total = 0.0;
    for (const auto& m : members) {
        if (!(m.p > 0.0)) throw std::invalid_argument("member probabilities must be positive");
        if (!(m.state.dims == members.front().state.dims))
            throw std::invalid_argument("ensemble members must share dimensions");
        total += m.p;
    }
    if (std::abs(total - 1.0) > 1e-12)
        throw std::invalid_argument("member probabilities must sum to 1");
    return Ensemble{std::move(members)};
}

ChiResult holevo(const Ensemble& e) {
    const int d = e.members.front().state.dims.right();
    Matrix average = Matrix::Zero(d, d);
    double mean_entropy = 0.0;
    for (const auto& m : e.members) {
        Matrix rho = partial_trace_a(m.state);
        average += m.p * rho;
        mean_entropy += m.p * von_neumann_entropy(rho);
    }
    double avg_entropy = von_neumann_entropy(average);
    return ChiResult{avg_entropy - mean_entropy, mean_entropy, avg_entropy};
}

Ensemble ensemble_entangled() {
    const Constants& c = constants();
    const double sa = std::sqrt(c.x0), sb = std::sqrt(1.0 - c.x0);
    const std::complex<double> im(0.0, 1.0);
    Vector first(4), second(4);
    first << 0.0, sa, im * sb, 0.0;
    second << sa, 0.0, 0.0, im * sb;
    Dims dims{2, 1, 2, 1};
    return make_ensemble({{0.5, make_state(dims, first)}, {0.5, make_state(dims, second)}});
}

Ensemble ensemble_product() {
    const Constants& c = constants();
    const double sa = std::sqrt(c.x0), sb = std::sqrt(1.0 - c.x0);
    const double inv_sqrt2 = 0.7071067811865475244;
    const std::complex<double> im(0.0, 1.0);
    Vector first(4), second(4);
    // (|0> + |1>)/sqrt2 (x) (sa, -i sb)  and  (|0> - |1>)/sqrt2 (x) (sa, +i sb)
    first << inv_sqrt2 * sa, inv_sqrt2 * (-im * sb), inv_sqrt2 * sa, inv_sqrt2 * (-im * sb);
    second << inv_sqrt2 * sa, inv_sqrt2 * (im * sb), -inv_sqrt2 * sa, -inv_sqrt2 * (im * sb);
    Dims dims{2, 1, 2, 1};
    return make_ensemble({{0.5, make_state(dims, first)}, {0.5, make_state(dims, second)}});
}

double comm_rate(const Ensemble& e, const Matrix& h, double delta_t, bool central) {
    if (!(delta_t > 0.0)) throw std::invalid_argument("delta_t must be positive");
    auto chi_at = [&](double t) {
        Ensemble evolved;
        evolved.members.reserve(e.members.size());
        for (const auto& m : e.members)
            evolved.members.push_back({m.p, evolve(m.state, h, t)});
        return holevo(evolved).chi;
    };
    if (central) return (chi_at(delta_t) - chi_at(-delta_t)) / (2.0 * delta_t);
    return (chi_at(delta_t) - holevo(e).chi) / delta_t;
}

} // namespace entcap
