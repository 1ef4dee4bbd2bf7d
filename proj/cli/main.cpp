#include <CLI11.hpp>
#include <json.hpp>

#include "entcap/canonical.hpp"
#include "entcap/capacity.hpp"
#include "entcap/commrate.hpp"
#include "entcap/conjecture.hpp"
#include "entcap/io.hpp"
#include "entcap/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

using nlohmann::json;

namespace {

// Exit codes: 0 success, 1 property failure, 2 input error, 3 I/O error.
constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitIoError = 3;

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

std::string command_echo(int argc, char** argv) {
    std::string out;
    for (int i = 0; i < argc; ++i) {
        if (i > 0) out += ' ';
        out += argv[i];
    }
    return out;
}

// The results object is the reproducible part; wall time is informational.
void emit_report(const std::string& command, const std::string& input_blob,
                 std::uint64_t seed, const json& results, double wall_time_s) {
    json report;
    report["command"] = command;
    report["input_hash"] = entcap::fnv1a_hex(input_blob);
    report["seed"] = seed;
    report["results"] = results;
    report["wall_time_s"] = wall_time_s;
    std::cout << report.dump(2) << "\n";
}

// Coupling source shared by canonical, capacity, rate and commrate: exactly
// one of a JSON file or the inline pauli shorthand.
struct CouplingArgs {
    std::string file;
    std::string shorthand;

    void attach(CLI::App* sub) {
        sub->add_option("--input", file, "coupling JSON file (canonical | pauli | matrix)");
        sub->add_option("--pauli", shorthand, "inline pauli coefficients, e.g. zz=1,xx=0.5");
    }

    entcap::Matrix resolve(std::string& input_blob) const {
        bool has_file = !file.empty();
        bool has_shorthand = !shorthand.empty();
        if (has_file == has_shorthand)
            throw std::invalid_argument("provide exactly one of --input or --pauli");
        if (has_file) {
            std::string text = entcap::read_file(file);
            input_blob += text;
            input_blob += '\n';
            return entcap::parse_hamiltonian_json(json::parse(text));
        }
        input_blob += shorthand;
        input_blob += '\n';
        return entcap::parse_pauli_shorthand(shorthand);
    }
};

// Optimizer knobs: defaults, then the config file, then explicit flags.
struct OptimizerArgs {
    int restarts = 32;
    std::uint64_t seed = 0;
    std::vector<int> ancilla{2, 2};
    std::string config_file;
    CLI::Option* restarts_opt = nullptr;
    CLI::Option* seed_opt = nullptr;
    CLI::Option* ancilla_opt = nullptr;

    void attach(CLI::App* sub) {
        restarts_opt = sub->add_option("--restarts", restarts, "optimizer restarts");
        seed_opt = sub->add_option("--seed", seed, "rng seed");
        ancilla_opt = sub->add_option("--ancilla", ancilla,
                                      "ancilla dimensions for the two sides")
                          ->expected(2);
        sub->add_option("--config", config_file,
                        "optimizer config JSON: restarts, max_iters, tol, seed, "
                        "ancilla_a, ancilla_b");
    }

    entcap::SearchConfig resolve(std::string& input_blob, std::pair<int, int>& anc) const {
        entcap::SearchConfig cfg;
        int anc_a = 2;
        int anc_b = 2;
        if (!config_file.empty()) {
            std::string text = entcap::read_file(config_file);
            input_blob += text;
            input_blob += '\n';
            json c = json::parse(text);
            if (!c.is_object()) throw std::invalid_argument("config must be a JSON object");
            for (const auto& [key, value] : c.items()) {
                if (key == "restarts") cfg.restarts = value.get<int>();
                else if (key == "max_iters") cfg.max_iters = value.get<int>();
                else if (key == "tol") cfg.tol = value.get<double>();
                else if (key == "seed") cfg.seed = value.get<std::uint64_t>();
                else if (key == "ancilla_a") anc_a = value.get<int>();
                else if (key == "ancilla_b") anc_b = value.get<int>();
                else throw std::invalid_argument("config field '" + key + "' is not recognized");
            }
        }
        if (restarts_opt->count() > 0) cfg.restarts = restarts;
        if (seed_opt->count() > 0) cfg.seed = seed;
        if (ancilla_opt->count() > 0) {
            anc_a = ancilla[0];
            anc_b = ancilla[1];
        }
        if (cfg.restarts < 1) throw std::invalid_argument("restarts must be at least 1");
        if (anc_a < 1 || anc_b < 1)
            throw std::invalid_argument("ancilla dimensions must be at least 1");
        anc = {anc_a, anc_b};
        return cfg;
    }
};

json stat_to_json(const entcap::CheckStat& c) {
    json s;
    s["name"] = c.name;
    s["trials"] = c.trials;
    s["failures"] = c.failures;
    s["worst_deviation"] = std::isfinite(c.worst_deviation) ? json(c.worst_deviation)
                                                            : json(nullptr);
    s["tolerance"] = c.tolerance;
    return s;
}

json suite_to_json(const entcap::SuiteReport& r) {
    json s;
    s["all_ok"] = r.all_ok;
    json checks = json::array();
    for (const entcap::CheckStat& c : r.checks) checks.push_back(stat_to_json(c));
    s["checks"] = checks;
    return s;
}

int run_canonical(const std::string& echo, const CouplingArgs& coupling) {
    Timer timer;
    std::string blob;
    entcap::Matrix h = coupling.resolve(blob);
    entcap::CanonicalForm cf = entcap::canonical_form(h);
    json results;
    results["mu_x"] = cf.mu_x;
    results["mu_y"] = cf.mu_y;
    results["mu_z"] = cf.mu_z;
    results["reconstruction_error"] = (entcap::reconstruct(cf) - h).norm();
    emit_report(echo, blob, 0, results, timer.seconds());
    return kExitOk;
}

int run_capacity(const std::string& echo, const CouplingArgs& coupling,
                 const OptimizerArgs& opt, bool optimize) {
    Timer timer;
    std::string blob;
    entcap::Matrix h = coupling.resolve(blob);
    std::pair<int, int> anc;
    entcap::SearchConfig cfg = opt.resolve(blob, anc);
    entcap::CanonicalForm cf = entcap::canonical_form(h);
    json results;
    results["alpha"] = entcap::constants().alpha;
    results["x0"] = entcap::constants().x0;
    results["closed_form"] = entcap::single_shot_no_ancilla(cf);
    results["optimized"] = nullptr;
    results["optimized_divergent"] = false;
    if (optimize) {
        entcap::OptimizationResult r = entcap::optimize_rate(h, anc, cfg);
        if (r.divergent) results["optimized_divergent"] = true;
        else results["optimized"] = r.best_rate;
    }
    emit_report(echo, blob, cfg.seed, results, timer.seconds());
    return kExitOk;
}

int run_rate(const std::string& echo, const CouplingArgs& coupling,
             const std::string& state_file) {
    Timer timer;
    std::string blob;
    entcap::Matrix h = coupling.resolve(blob);
    entcap::PureState state = entcap::optimal_two_qubit_state();
    if (!state_file.empty()) {
        std::string text = entcap::read_file(state_file);
        blob += text;
        blob += '\n';
        state = entcap::parse_state_json(json::parse(text));
    }
    entcap::RateResult rr = entcap::rate(state, h);
    json results;
    results["rate"] = rr.value;
    results["divergent"] = rr.divergent;
    json spectrum = json::array();
    for (Eigen::Index i = 0; i < rr.schmidt_spectrum.size(); ++i)
        spectrum.push_back(rr.schmidt_spectrum(i));
    results["schmidt_spectrum"] = spectrum;
    emit_report(echo, blob, 0, results, timer.seconds());
    return kExitOk;
}

int run_commrate(const std::string& echo, const CouplingArgs& coupling,
                 const std::string& ensemble_arg, double dt, bool central) {
    Timer timer;
    std::string blob;
    entcap::Matrix h = coupling.resolve(blob);
    entcap::Ensemble e;
    if (ensemble_arg == "entangled") {
        e = entcap::ensemble_entangled();
        blob += ensemble_arg;
    } else if (ensemble_arg == "product") {
        e = entcap::ensemble_product();
        blob += ensemble_arg;
    } else {
        std::string text = entcap::read_file(ensemble_arg);
        blob += text;
        e = entcap::parse_ensemble_json(json::parse(text));
    }
    blob += '\n';
    double chi_before = entcap::holevo(e).chi;
    entcap::Ensemble evolved = e;
    for (entcap::EnsembleMember& m : evolved.members)
        m.state = entcap::evolve(m.state, h, dt);
    double chi_after = entcap::holevo(evolved).chi;
    json results;
    results["chi_before"] = chi_before;
    results["chi_after"] = chi_after;
    results["rate"] = entcap::comm_rate(e, h, dt, central);
    emit_report(echo, blob, 0, results, timer.seconds());
    return kExitOk;
}

int run_sweep(const std::string& echo, const OptimizerArgs& opt,
              std::vector<double> mu_x_grid, std::vector<double> mu_y_grid,
              const std::string& out_path) {
    Timer timer;
    if (mu_y_grid.empty()) mu_y_grid = mu_x_grid;
    std::string blob;
    std::pair<int, int> anc;
    entcap::SearchConfig cfg = opt.resolve(blob, anc);
    blob += "sweep";
    for (double v : mu_x_grid) blob += ' ' + entcap::format_float(v);
    blob += ';';
    for (double v : mu_y_grid) blob += ' ' + entcap::format_float(v);
    blob += '\n';
    std::vector<entcap::SweepPoint> points = entcap::sweep(mu_x_grid, mu_y_grid, anc, cfg);
    std::string csv = entcap::sweep_csv(points);
    entcap::write_file(out_path, csv);
    json results;
    results["rows"] = points.size();
    results["out"] = out_path;
    results["csv_hash"] = entcap::fnv1a_hex(csv);
    emit_report(echo, blob, cfg.seed, results, timer.seconds());
    return kExitOk;
}

int run_verify(const std::string& echo, const std::string& suite, int trials,
               std::uint64_t seed) {
    Timer timer;
    if (trials < 1) throw std::invalid_argument("trials must be at least 1");
    std::string blob = suite + " trials=" + std::to_string(trials);
    json suites;
    bool all_ok = true;
    if (suite == "bounds" || suite == "all") {
        entcap::SuiteReport r = entcap::run_bounds_suite(trials, seed);
        suites["bounds"] = suite_to_json(r);
        all_ok = all_ok && r.all_ok;
    }
    if (suite == "identities" || suite == "all") {
        entcap::SuiteReport r = entcap::run_identities_suite(trials, seed);
        suites["identities"] = suite_to_json(r);
        all_ok = all_ok && r.all_ok;
    }
    json results;
    results["suites"] = suites;
    results["all_ok"] = all_ok;
    emit_report(echo, blob, seed, results, timer.seconds());
    return all_ok ? kExitOk : kExitPropertyFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"entanglement capacity toolkit for two-qubit couplings"};
    app.require_subcommand(1);
    std::string echo = command_echo(argc, argv);

    CLI::App* canonical = app.add_subcommand(
        "canonical", "local-unitary normal form coefficients of a coupling");
    CouplingArgs canonical_coupling;
    canonical_coupling.attach(canonical);

    CLI::App* capacity = app.add_subcommand(
        "capacity", "closed-form capacity, optionally with the ancilla-assisted optimizer");
    CouplingArgs capacity_coupling;
    capacity_coupling.attach(capacity);
    OptimizerArgs capacity_opt;
    capacity_opt.attach(capacity);
    bool optimize = false;
    capacity->add_flag("--optimize", optimize, "run the ancilla-assisted rate optimizer");

    CLI::App* rate = app.add_subcommand(
        "rate", "instantaneous entanglement rate of a state under a coupling");
    CouplingArgs rate_coupling;
    rate_coupling.attach(rate);
    std::string state_file;
    rate->add_option("--state", state_file,
                     "state JSON file; defaults to the capacity-optimal two-qubit state");

    CLI::App* commrate = app.add_subcommand(
        "commrate", "first-order Holevo communication rate of an ensemble");
    CouplingArgs commrate_coupling;
    commrate_coupling.attach(commrate);
    std::string ensemble_arg = "entangled";
    commrate->add_option("--ensemble", ensemble_arg,
                         "'entangled', 'product', or an ensemble JSON file");
    double dt = 1e-5;
    commrate->add_option("--dt", dt, "finite-difference step")->check(CLI::PositiveNumber);
    bool central = false;
    commrate->add_flag("--central", central, "use a central difference");

    CLI::App* sweep = app.add_subcommand(
        "sweep", "optimized capacity over a coefficient grid, written as CSV");
    OptimizerArgs sweep_opt;
    sweep_opt.attach(sweep);
    std::vector<double> mu_x_grid;
    std::vector<double> mu_y_grid;
    sweep->add_option("--mu-x", mu_x_grid, "grid values for the first coefficient")
        ->required()
        ->expected(-1);
    sweep->add_option("--mu-y", mu_y_grid,
                      "grid values for the second coefficient (defaults to --mu-x)")
        ->expected(-1);
    std::string out_path;
    sweep->add_option("--out", out_path, "output CSV path")->required();

    CLI::App* verify = app.add_subcommand(
        "verify", "property suites over random instances");
    std::string suite = "all";
    verify->add_option("--suite", suite, "bounds | identities | all")
        ->check(CLI::IsMember({"bounds", "identities", "all"}));
    int trials = 100;
    verify->add_option("--trials", trials, "random instances per check");
    std::uint64_t verify_seed = 0;
    verify->add_option("--seed", verify_seed, "rng seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (canonical->parsed()) return run_canonical(echo, canonical_coupling);
        if (capacity->parsed())
            return run_capacity(echo, capacity_coupling, capacity_opt, optimize);
        if (rate->parsed()) return run_rate(echo, rate_coupling, state_file);
        if (commrate->parsed())
            return run_commrate(echo, commrate_coupling, ensemble_arg, dt, central);
        if (sweep->parsed())
            return run_sweep(echo, sweep_opt, mu_x_grid, mu_y_grid, out_path);
        if (verify->parsed()) return run_verify(echo, suite, trials, verify_seed);
        std::cerr << "no subcommand selected\n";
        return kExitInputError;
    } catch (const json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::domain_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::runtime_error& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kExitIoError;
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    }
}
