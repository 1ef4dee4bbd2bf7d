"""Entanglement capacity computations for two-qubit couplings."""

from ._entcap import (
    BoundCheckReport,
    CanonicalForm,
    CheckStat,
    ChiResult,
    ConjectureParams,
    Constants,
    Dims,
    Ensemble,
    EnsembleMember,
    Interaction,
    OptimizationResult,
    PureState,
    RateResult,
    SchmidtDecomposition,
    SearchConfig,
    SuiteReport,
    SweepPoint,
    binary_entropy,
    canonical_form,
    comm_rate,
    conjecture_objective,
    conjectured_capacity,
    constants,
    drho_dt,
    ensemble_entangled,
    ensemble_product,
    entanglement_entropy,
    evolve,
    heisenberg_interaction,
    holevo,
    make_ensemble,
    make_state,
    optimal_two_qubit_state,
    optimize_rate,
    partial_trace_a,
    partial_trace_b,
    pauli,
    pauli_coefficients,
    rate,
    rate_kernel,
    reconstruct,
    run_bounds_suite,
    run_identities_suite,
    scaled_xx_interaction,
    schmidt,
    single_shot_no_ancilla,
    sweep,
    symmetric_xy_with_z,
    verify_bound_chain,
    von_neumann_entropy,
    xx_interaction,
    xy_interaction,
)

__all__ = [
    "BoundCheckReport",
    "CanonicalForm",
    "CheckStat",
    "ChiResult",
    "ConjectureParams",
    "Constants",
    "Dims",
    "Ensemble",
    "EnsembleMember",
    "Interaction",
    "OptimizationResult",
    "PureState",
    "RateResult",
    "SchmidtDecomposition",
    "SearchConfig",
    "SuiteReport",
    "SweepPoint",
    "binary_entropy",
    "canonical_form",
    "comm_rate",
    "conjecture_objective",
    "conjectured_capacity",
    "constants",
    "drho_dt",
    "ensemble_entangled",
    "ensemble_product",
    "entanglement_entropy",
    "evolve",
    "heisenberg_interaction",
    "holevo",
    "make_ensemble",
    "make_state",
    "optimal_two_qubit_state",
    "optimize_rate",
    "partial_trace_a",
    "partial_trace_b",
    "pauli",
    "pauli_coefficients",
    "rate",
    "rate_kernel",
    "reconstruct",
    "run_bounds_suite",
    "run_identities_suite",
    "scaled_xx_interaction",
    "schmidt",
    "single_shot_no_ancilla",
    "sweep",
    "symmetric_xy_with_z",
    "verify_bound_chain",
    "von_neumann_entropy",
    "xx_interaction",
    "xy_interaction",
]
