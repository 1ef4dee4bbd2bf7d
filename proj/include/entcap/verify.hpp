#pragma once

#include "entcap/qmath.hpp"
#include "entcap/rng.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace entcap {

// One property checked over a batch of random instances. worst_deviation is
// the largest observed violation metric (0 when the property held exactly);
// a trial fails when the metric exceeds tolerance.
struct CheckStat {
    std::string name;
    int trials = 0;
    int failures = 0;
    double worst_deviation = 0.0;
    double tolerance = 0.0;
};

struct SuiteReport {
    std::vector<CheckStat> checks;
    bool all_ok = true;
};

// Substochasticity of frame overlaps, the skew kernel elementwise bound, and
// the full bound chain on random frames and spectra of dimension 4.
SuiteReport run_bounds_suite(int trials, std::uint64_t seed);

// Vectorization identity, partial-trace product identity, Schmidt round-trip,
// local-unitary invariance (entropy and canonical coefficients), canonical
// reconstruction, and rate-versus-finite-difference agreement.
SuiteReport run_identities_suite(int trials, std::uint64_t seed);

// Deterministic random inputs used by the suites and the tests.
Matrix random_unitary(int n, SplitMix64& rng);
Matrix random_hermitian_pair_coupling(SplitMix64& rng);   // 4x4 Hermitian
PureState random_state(const Dims& dims, SplitMix64& rng);
RealVector random_spectrum(int n, SplitMix64& rng);

} // namespace entcap
