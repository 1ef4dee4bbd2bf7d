#pragma once

#include "entcap/commrate.hpp"
#include "entcap/conjecture.hpp"
#include "entcap/qmath.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace entcap {

// Coupling input, exactly one variant:
//   {"canonical": {"mu_x": f, "mu_y": f, "mu_z": f}}
//   {"pauli": [[f; 4]; 4]}              coefficients over identity+Pauli (x) identity+Pauli
//   {"matrix": [[[re, im]; 4]; 4]}      Hermitian within 1e-9
// Malformed input throws std::invalid_argument naming the offending field.
Matrix parse_hamiltonian_json(const nlohmann::json& j);
Matrix parse_hamiltonian_file(const std::string& path);

// Comma-separated "<pair>=<coefficient>" entries, pair being two characters
// from {i, x, y, z}; repeated pairs accumulate. Example: "zz=1,xx=0.5".
Matrix parse_pauli_shorthand(const std::string& text);

// {"dims": [a, a_anc, b, b_anc], "amplitudes": [[re, im], ...]}
PureState parse_state_json(const nlohmann::json& j);
PureState parse_state_file(const std::string& path);

// {"members": [{"p": f, "dims": [...], "amplitudes": [[re, im], ...]}, ...]}
Ensemble parse_ensemble_json(const nlohmann::json& j);
Ensemble parse_ensemble_file(const std::string& path);

// Shortest decimal with 9 significant digits.
std::string format_float(double v);

// Header mu_x,mu_y,capacity,conjecture,gap; one row per point, '\n' endings;
// conjecture and gap cells are empty off the diagonal.
std::string sweep_csv(const std::vector<SweepPoint>& points);

// FNV-1a 64-bit hash of the bytes, as 16 lowercase hex digits.
std::string fnv1a_hex(const std::string& bytes);

// Both throw std::runtime_error on failure (mapped to the I/O exit code).
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace entcap
