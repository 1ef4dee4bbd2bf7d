#include "entcap/io.hpp"

#include "entcap/canonical.hpp"

#include <cctype>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace entcap {

namespace {

using nlohmann::json;

double require_number(const json& j, const std::string& field) {
    if (!j.is_number()) throw std::invalid_argument("field '" + field + "' must be a number");
    return j.get<double>();
}

std::complex<double> require_complex_pair(const json& j, const std::string& field) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw std::invalid_argument("field '" + field + "' must be an [re, im] pair");
    return {j[0].get<double>(), j[1].get<double>()};
}

Matrix pauli_sum(const Eigen::Matrix4d& coeffs) {
    Matrix h = Matrix::Zero(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (coeffs(i, j) != 0.0) h += coeffs(i, j) * kron(pauli(i), pauli(j));
    return h;
}

int pauli_label_index(char ch, const std::string& entry) {
    switch (std::tolower(static_cast<unsigned char>(ch))) {
        case 'i': return 0;
        case 'x': return 1;
        case 'y': return 2;
        case 'z': return 3;
        default:
            throw std::invalid_argument("pauli shorthand entry '" + entry +
                                        "': labels must use characters i, x, y, z");
    }
}

std::string trimmed(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

} // namespace

Matrix parse_hamiltonian_json(const json& j) {
    if (!j.is_object())
        throw std::invalid_argument("hamiltonian spec must be a JSON object");
    int variants = int(j.contains("canonical")) + int(j.contains("pauli")) +
                   int(j.contains("matrix"));
    if (variants != 1)
        throw std::invalid_argument(
            "hamiltonian spec must contain exactly one of 'canonical', 'pauli', 'matrix'");

    if (j.contains("canonical")) {
        const json& c = j.at("canonical");
        if (!c.is_object())
            throw std::invalid_argument("field 'canonical' must be an object");
        Eigen::Matrix4d coeffs = Eigen::Matrix4d::Zero();
        const char* names[3] = {"mu_x", "mu_y", "mu_z"};
        for (int i = 0; i < 3; ++i) {
            if (!c.contains(names[i]))
                throw std::invalid_argument(std::string("field 'canonical' is missing '") +
                                            names[i] + "'");
            coeffs(i + 1, i + 1) =
                require_number(c.at(names[i]), std::string("canonical.") + names[i]);
        }
        return pauli_sum(coeffs);
    }

    if (j.contains("pauli")) {
        const json& p = j.at("pauli");
        if (!p.is_array() || p.size() != 4)
            throw std::invalid_argument("field 'pauli' must be a 4x4 array");
        Eigen::Matrix4d coeffs;
        for (int i = 0; i < 4; ++i) {
            if (!p[i].is_array() || p[i].size() != 4)
                throw std::invalid_argument("field 'pauli' must be a 4x4 array");
            for (int k = 0; k < 4; ++k)
                coeffs(i, k) = require_number(p[i][k], "pauli[" + std::to_string(i) + "][" +
                                                           std::to_string(k) + "]");
        }
        return pauli_sum(coeffs);
    }

    const json& m = j.at("matrix");
    if (!m.is_array() || m.size() != 4)
        throw std::invalid_argument("field 'matrix' must be a 4x4 array of [re, im] pairs");
    Matrix h(4, 4);
    for (int i = 0; i < 4; ++i) {
        if (!m[i].is_array() || m[i].size() != 4)
            throw std::invalid_argument("field 'matrix' must be a 4x4 array of [re, im] pairs");
        for (int k = 0; k < 4; ++k)
            h(i, k) = require_complex_pair(
                m[i][k], "matrix[" + std::to_string(i) + "][" + std::to_string(k) + "]");
    }
    if (!is_hermitian(h, 1e-9))
        throw std::invalid_argument("field 'matrix' is not Hermitian within 1e-9");
    return h;
}

Matrix parse_hamiltonian_file(const std::string& path) {
    return parse_hamiltonian_json(json::parse(read_file(path)));
}

Matrix parse_pauli_shorthand(const std::string& text) {
    Eigen::Matrix4d coeffs = Eigen::Matrix4d::Zero();
    std::stringstream ss(text);
    std::string entry;
    bool any = false;
    while (std::getline(ss, entry, ',')) {
        entry = trimmed(entry);
        if (entry.empty()) continue;
        std::size_t eq = entry.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("pauli shorthand entry '" + entry +
                                        "' lacks '=' (expected e.g. zz=1)");
        std::string pair = trimmed(entry.substr(0, eq));
        std::string value = trimmed(entry.substr(eq + 1));
        if (pair.size() != 2)
            throw std::invalid_argument("pauli shorthand entry '" + entry +
                                        "': label must name two factors, e.g. zz");
        int a = pauli_label_index(pair[0], entry);
        int b = pauli_label_index(pair[1], entry);
        std::size_t used = 0;
        double v;
        try {
            v = std::stod(value, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("pauli shorthand entry '" + entry +
                                        "': coefficient is not a number");
        }
        if (used != value.size())
            throw std::invalid_argument("pauli shorthand entry '" + entry +
                                        "': coefficient is not a number");
        coeffs(a, b) += v;
        any = true;
    }
    if (!any) throw std::invalid_argument("pauli shorthand is empty");
    return pauli_sum(coeffs);
}

PureState parse_state_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("state spec must be a JSON object");
    if (!j.contains("dims") || !j.at("dims").is_array() || j.at("dims").size() != 4)
        throw std::invalid_argument("field 'dims' must be an array of four integers");
    int d[4];
    for (int i = 0; i < 4; ++i) {
        const json& v = j.at("dims")[i];
        if (!v.is_number_integer() || v.get<int>() < 1)
            throw std::invalid_argument("field 'dims' entries must be integers >= 1");
        d[i] = v.get<int>();
    }
    Dims dims{d[0], d[1], d[2], d[3]};
    if (!j.contains("amplitudes") || !j.at("amplitudes").is_array())
        throw std::invalid_argument("field 'amplitudes' must be an array of [re, im] pairs");
    const json& amps = j.at("amplitudes");
    if (static_cast<int>(amps.size()) != dims.total())
        throw std::invalid_argument("field 'amplitudes' has " + std::to_string(amps.size()) +
                                    " entries, dims require " + std::to_string(dims.total()));
    Vector amplitudes(dims.total());
    for (int i = 0; i < dims.total(); ++i)
        amplitudes(i) = require_complex_pair(amps[i], "amplitudes[" + std::to_string(i) + "]");
    return make_state(dims, amplitudes);
}

PureState parse_state_file(const std::string& path) {
    return parse_state_json(json::parse(read_file(path)));
}

Ensemble parse_ensemble_json(const json& j) {
    if (!j.is_object() || !j.contains("members") || !j.at("members").is_array())
        throw std::invalid_argument("ensemble spec must be an object with a 'members' array");
    const json& members = j.at("members");
    if (members.empty()) throw std::invalid_argument("field 'members' must be nonempty");
    std::vector<EnsembleMember> out;
    out.reserve(members.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
        const json& m = members[i];
        std::string where = "members[" + std::to_string(i) + "]";
        if (!m.is_object() || !m.contains("p"))
            throw std::invalid_argument("field '" + where + "' must be an object with 'p'");
        double p = require_number(m.at("p"), where + ".p");
        out.push_back({p, parse_state_json(m)});
    }
    return make_ensemble(std::move(out));
}

Ensemble parse_ensemble_file(const std::string& path) {
    return parse_ensemble_json(json::parse(read_file(path)));
}

std::string format_float(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

std::string sweep_csv(const std::vector<SweepPoint>& points) {
    std::string out = "mu_x,mu_y,capacity,conjecture,gap\n";
    for (const SweepPoint& pt : points) {
        out += format_float(pt.mu_x);
        out += ',';
        out += format_float(pt.mu_y);
        out += ',';
        out += format_float(pt.optimized_capacity);
        out += ',';
        if (pt.conjectured) out += format_float(*pt.conjectured);
        out += ',';
        if (pt.gap) out += format_float(*pt.gap);
        out += '\n';
    }
    return out;
}

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    if (f.bad()) throw std::runtime_error("error reading file: " + path);
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open file for writing: " + path);
    f << content;
    f.flush();
    if (!f) throw std::runtime_error("error writing file: " + path);
}

} // namespace entcap
