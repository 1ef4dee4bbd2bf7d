#include <pybind11/pybind11.h>
#include <pybind11/eigen.h>
#include <pybind11/stl.h>

#include "entcap/canonical.hpp"
#include "entcap/capacity.hpp"
#include "entcap/commrate.hpp"
#include "entcap/conjecture.hpp"
#include "entcap/qmath.hpp"
#include "entcap/search.hpp"
#include "entcap/verify.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_entcap, m) {
    m.doc() = "entanglement capacity computations for two-qubit couplings";

    py::class_<entcap::Dims>(m, "Dims")
        .def(py::init([](int a, int a_anc, int b, int b_anc) {
                 return entcap::Dims{a, a_anc, b, b_anc};
             }),
             py::arg("a") = 2, py::arg("a_anc") = 1, py::arg("b") = 2, py::arg("b_anc") = 1)
        .def_readwrite("a", &entcap::Dims::a)
        .def_readwrite("a_anc", &entcap::Dims::a_anc)
        .def_readwrite("b", &entcap::Dims::b)
        .def_readwrite("b_anc", &entcap::Dims::b_anc)
        .def("left", &entcap::Dims::left)
        .def("right", &entcap::Dims::right)
        .def("total", &entcap::Dims::total);

    py::class_<entcap::PureState>(m, "PureState")
        .def_readonly("dims", &entcap::PureState::dims)
        .def_readonly("amplitudes", &entcap::PureState::amplitudes);

    py::class_<entcap::SchmidtDecomposition>(m, "SchmidtDecomposition")
        .def_readonly("lambdas", &entcap::SchmidtDecomposition::lambdas)
        .def_readonly("left_vectors", &entcap::SchmidtDecomposition::left_vectors)
        .def_readonly("right_vectors", &entcap::SchmidtDecomposition::right_vectors);

    m.def("make_state", &entcap::make_state, py::arg("dims"), py::arg("amplitudes"));
    m.def("pauli", [](int i) { return entcap::Matrix(entcap::pauli(i)); }, py::arg("i"));
    m.def("partial_trace_b", &entcap::partial_trace_b, py::arg("state"));
    m.def("partial_trace_a", &entcap::partial_trace_a, py::arg("state"));
    m.def("schmidt", &entcap::schmidt, py::arg("state"));
    m.def("entanglement_entropy", &entcap::entanglement_entropy, py::arg("state"));
    m.def("von_neumann_entropy", &entcap::von_neumann_entropy, py::arg("rho"));
    m.def("binary_entropy", &entcap::binary_entropy, py::arg("x"));
    m.def("evolve", &entcap::evolve, py::arg("state"), py::arg("h"), py::arg("t"));

    py::class_<entcap::CanonicalForm>(m, "CanonicalForm")
        .def_readonly("mu_x", &entcap::CanonicalForm::mu_x)
        .def_readonly("mu_y", &entcap::CanonicalForm::mu_y)
        .def_readonly("mu_z", &entcap::CanonicalForm::mu_z)
        .def_readonly("local_a", &entcap::CanonicalForm::local_a)
        .def_readonly("local_b", &entcap::CanonicalForm::local_b)
        .def_readonly("single_body_a", &entcap::CanonicalForm::single_body_a)
        .def_readonly("single_body_b", &entcap::CanonicalForm::single_body_b);

    py::class_<entcap::Interaction>(m, "Interaction")
        .def_readonly("name", &entcap::Interaction::name)
        .def_readonly("matrix", &entcap::Interaction::matrix);

    m.def("pauli_coefficients", &entcap::pauli_coefficients, py::arg("h"));
    m.def("canonical_form", &entcap::canonical_form, py::arg("h"));
    m.def("reconstruct", &entcap::reconstruct, py::arg("canonical"));
    m.def("xy_interaction", &entcap::xy_interaction, py::arg("mu_x"), py::arg("mu_y"));
    m.def("xx_interaction", &entcap::xx_interaction);
    m.def("scaled_xx_interaction", &entcap::scaled_xx_interaction, py::arg("strength"));
    m.def("symmetric_xy_with_z", &entcap::symmetric_xy_with_z, py::arg("mu_xy"));
    m.def("heisenberg_interaction", &entcap::heisenberg_interaction);

    py::class_<entcap::SearchConfig>(m, "SearchConfig")
        .def(py::init<>())
        .def_readwrite("restarts", &entcap::SearchConfig::restarts)
        .def_readwrite("max_iters", &entcap::SearchConfig::max_iters)
        .def_readwrite("tol", &entcap::SearchConfig::tol)
        .def_readwrite("seed", &entcap::SearchConfig::seed)
        .def_readwrite("fd_step", &entcap::SearchConfig::fd_step)
        .def_readwrite("initial_step", &entcap::SearchConfig::initial_step)
        .def_readwrite("nm_max_iters", &entcap::SearchConfig::nm_max_iters);

    py::class_<entcap::Constants>(m, "Constants")
        .def_readonly("alpha", &entcap::Constants::alpha)
        .def_readonly("x0", &entcap::Constants::x0);

    py::class_<entcap::RateResult>(m, "RateResult")
        .def_readonly("value", &entcap::RateResult::value)
        .def_readonly("divergent", &entcap::RateResult::divergent)
        .def_readonly("schmidt_spectrum", &entcap::RateResult::schmidt_spectrum);

    py::class_<entcap::OptimizationResult>(m, "OptimizationResult")
        .def_readonly("best_rate", &entcap::OptimizationResult::best_rate)
        .def_readonly("best_state", &entcap::OptimizationResult::best_state)
        .def_readonly("restarts", &entcap::OptimizationResult::restarts)
        .def_readonly("evaluations", &entcap::OptimizationResult::evaluations)
        .def_readonly("converged", &entcap::OptimizationResult::converged)
        .def_readonly("divergent", &entcap::OptimizationResult::divergent)
        .def_readonly("history", &entcap::OptimizationResult::history);

    py::class_<entcap::BoundCheckReport>(m, "BoundCheckReport")
        .def_readonly("chain_values", &entcap::BoundCheckReport::chain_values)
        .def_readonly("substochastic_ok", &entcap::BoundCheckReport::substochastic_ok)
        .def_readonly("permutation_max", &entcap::BoundCheckReport::permutation_max)
        .def_readonly("alpha_bound_ok", &entcap::BoundCheckReport::alpha_bound_ok)
        .def_readonly("chain_ok", &entcap::BoundCheckReport::chain_ok);

    m.def("constants", []() { return entcap::constants(); });
    m.def("optimal_two_qubit_state", &entcap::optimal_two_qubit_state);
    m.def("drho_dt", &entcap::drho_dt, py::arg("state"), py::arg("h"));
    m.def("rate", &entcap::rate, py::arg("state"), py::arg("h"));
    m.def("single_shot_no_ancilla", &entcap::single_shot_no_ancilla, py::arg("canonical"));
    m.def("optimize_rate", &entcap::optimize_rate, py::arg("h"), py::arg("ancilla"),
          py::arg("config") = entcap::SearchConfig{});
    m.def("rate_kernel", &entcap::rate_kernel, py::arg("lambdas"));
    m.def("verify_bound_chain", &entcap::verify_bound_chain, py::arg("u"), py::arg("v"),
          py::arg("lambdas"));

    py::class_<entcap::EnsembleMember>(m, "EnsembleMember")
        .def(py::init([](double p, const entcap::PureState& state) {
                 return entcap::EnsembleMember{p, state};
             }),
             py::arg("p"), py::arg("state"))
        .def_readonly("p", &entcap::EnsembleMember::p)
        .def_readonly("state", &entcap::EnsembleMember::state);

    py::class_<entcap::Ensemble>(m, "Ensemble")
        .def_readonly("members", &entcap::Ensemble::members);

    py::class_<entcap::ChiResult>(m, "ChiResult")
        .def_readonly("chi", &entcap::ChiResult::chi)
        .def_readonly("average_entropy", &entcap::ChiResult::average_entropy)
        .def_readonly("entropy_of_average", &entcap::ChiResult::entropy_of_average);

    m.def("make_ensemble", &entcap::make_ensemble, py::arg("members"));
    m.def("holevo", &entcap::holevo, py::arg("ensemble"));
    m.def("ensemble_entangled", &entcap::ensemble_entangled);
    m.def("ensemble_product", &entcap::ensemble_product);
    m.def("comm_rate", &entcap::comm_rate, py::arg("ensemble"), py::arg("h"),
          py::arg("delta_t"), py::arg("central") = false);

    py::class_<entcap::ConjectureParams>(m, "ConjectureParams")
        .def(py::init([](double p1, double p2, double theta, double phi, double xi) {
                 return entcap::ConjectureParams{p1, p2, theta, phi, xi};
             }),
             py::arg("p1"), py::arg("p2"), py::arg("theta"), py::arg("phi"), py::arg("xi"))
        .def_readwrite("p1", &entcap::ConjectureParams::p1)
        .def_readwrite("p2", &entcap::ConjectureParams::p2)
        .def_readwrite("theta", &entcap::ConjectureParams::theta)
        .def_readwrite("phi", &entcap::ConjectureParams::phi)
        .def_readwrite("xi", &entcap::ConjectureParams::xi)
        .def("p4", &entcap::ConjectureParams::p4);

    py::class_<entcap::SweepPoint>(m, "SweepPoint")
        .def_readonly("mu_x", &entcap::SweepPoint::mu_x)
        .def_readonly("mu_y", &entcap::SweepPoint::mu_y)
        .def_readonly("optimized_capacity", &entcap::SweepPoint::optimized_capacity)
        .def_readonly("conjectured", &entcap::SweepPoint::conjectured)
        .def_readonly("gap", &entcap::SweepPoint::gap);

    m.def("conjecture_objective", &entcap::conjecture_objective, py::arg("params"),
          py::arg("mu_xy"));
    m.def("conjectured_capacity", &entcap::conjectured_capacity, py::arg("mu_xy"),
          py::arg("config") = entcap::conjecture_search_defaults());
    m.def("sweep", &entcap::sweep, py::arg("mu_x_grid"), py::arg("mu_y_grid"),
          py::arg("ancilla"), py::arg("config") = entcap::SearchConfig{});

    py::class_<entcap::CheckStat>(m, "CheckStat")
        .def_readonly("name", &entcap::CheckStat::name)
        .def_readonly("trials", &entcap::CheckStat::trials)
        .def_readonly("failures", &entcap::CheckStat::failures)
        .def_readonly("worst_deviation", &entcap::CheckStat::worst_deviation)
        .def_readonly("tolerance", &entcap::CheckStat::tolerance);

    py::class_<entcap::SuiteReport>(m, "SuiteReport")
        .def_readonly("checks", &entcap::SuiteReport::checks)
        .def_readonly("all_ok", &entcap::SuiteReport::all_ok);

    m.def("run_bounds_suite", &entcap::run_bounds_suite, py::arg("trials"), py::arg("seed"));
    m.def("run_identities_suite", &entcap::run_identities_suite, py::arg("trials"),
          py::arg("seed"));
}
