#pragma once

#include "entcap/qmath.hpp"

#include <vector>

namespace entcap {

struct EnsembleMember {
    double p;
    PureState state;
};

// Probabilities sum to 1 within 1e-12, each positive; members share dims.
struct Ensemble {
    std::vector<EnsembleMember> members;
};

Ensemble make_ensemble(std::vector<EnsembleMember> members);

struct ChiResult {
    double chi;                 // entropy_of_average - average_entropy
    double average_entropy;
    double entropy_of_average;
};

// Holevo information of the receiver-side reduced states (the (b, b_anc)
// factors; the (a, a_anc) side is traced out).
ChiResult holevo(const Ensemble& e);

// Two equiprobable entangled members carrying one classical bit:
//   sqrt(x0)|01> + i sqrt(1-x0)|10>   and   sqrt(x0)|00> + i sqrt(1-x0)|11>.
// The second is the first with the receiver qubit flipped, so under an XX
// coupling both lose entanglement at the capacity rate while the receiver's
// average state stays maximally mixed.
Ensemble ensemble_entangled();

// Two equiprobable product members:
//   |+> (x) (sqrt(x0), -i sqrt(1-x0))   and   |-> (x) (sqrt(x0), +i sqrt(1-x0))
Ensemble ensemble_product();

// First-order Holevo rate [chi(evolved) - chi(initial)] / delta_t under the
// 4x4 coupling h. Forward difference by default; central as a cross-check.
double comm_rate(const Ensemble& e, const Matrix& h, double delta_t,
                 bool central = false);

} // namespace entcap
