"""Graph and matrix energy toolkit.

Energy here is the sum of singular values. The package computes spectra of
dense symmetric matrices, evaluates the known upper and lower energy bounds,
builds graphs of a given order with certified near-maximal energy, and grades
arbitrary nonnegative square matrices against the structural conditions that
near-maximal energy forces.
"""

from ._core import (
    BoundReport,
    ChainDiagnostic,
    ChainStep,
    CharacterizationReport,
    ComplementEnergyCheck,
    ConditionReport,
    ConstructionReport,
    DimensionError,
    DomainError,
    Error,
    Graph,
    Matrix,
    NumericError,
    ParseError,
    PreconditionError,
    PrimeWitness,
    SearchOverflowError,
    adjacency_matrix,
    complement,
    complement_energy,
    complement_energy_check,
    construct_max_energy_graph,
    construction_target,
    energy,
    energy_bound_chain,
    energy_lower,
    entrywise_norms,
    find_prime_1mod4,
    grade_near_maximal,
    graph_energy,
    induced_subgraph,
    is_prime,
    is_quadratic_residue,
    koolen_moulton_bound,
    matrix_energy_upper,
    paley_energy_floor,
    paley_graph,
    parse_graph,
    parse_matrix,
    quadratic_residues,
    refined_upper,
    select_dense_subset,
    serialize_graph,
    serialize_matrix,
    singular_values,
    symmetric_eigenvalues,
    window_check,
)

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "ChainDiagnostic",
    "ChainStep",
    "CharacterizationReport",
    "ComplementEnergyCheck",
    "ConditionReport",
    "ConstructionReport",
    "DimensionError",
    "DomainError",
    "Error",
    "Graph",
    "Matrix",
    "NumericError",
    "ParseError",
    "PreconditionError",
    "PrimeWitness",
    "SearchOverflowError",
    "adjacency_matrix",
    "complement",
    "complement_energy",
    "complement_energy_check",
    "construct_max_energy_graph",
    "construction_target",
    "energy",
    "energy_bound_chain",
    "energy_lower",
    "entrywise_norms",
    "find_prime_1mod4",
    "grade_near_maximal",
    "graph_energy",
    "induced_subgraph",
    "is_prime",
    "is_quadratic_residue",
    "koolen_moulton_bound",
    "matrix_energy_upper",
    "paley_energy_floor",
    "paley_graph",
    "parse_graph",
    "parse_matrix",
    "quadratic_residues",
    "refined_upper",
    "select_dense_subset",
    "serialize_graph",
    "serialize_matrix",
    "singular_values",
    "symmetric_eigenvalues",
    "window_check",
]
