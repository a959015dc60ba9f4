"""Partial-entropy entanglement analysis of multi-qubit pure states."""

from ._core import (
    ClassificationUnstable,
    DimensionMismatch,
    EmptyState,
    FactorExtractionFailure,
    Infeasible,
    NumericalFailure,
    ParseError,
    PartentError,
    PureState,
    Unsupported,
    basis_label_map,
    build_state,
    classify,
    enumerate_subsets,
    eta_measure,
    eta_objective,
    extract_factors,
    factorization_oracle,
    full_report,
    ghz_state,
    hermitian_eigenvalues,
    maximize_eta,
    partial_trace,
    random_on_support,
    random_state,
    reduced_spectrum,
    reproduce_table1,
    von_neumann_entropy,
    w_family_state,
)

__all__ = [name for name in dir() if not name.startswith("_")]
