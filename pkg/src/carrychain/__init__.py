"""carrychain: exact arithmetic for the carries / riffle-shuffle descent
Markov chain and the Eulerian-idempotent algebra behind its spectrum."""

from .combinat import (
    Composition,
    Permutation,
    all_permutations,
    binomial,
    compositions,
    descent_statistics,
    eulerian_number,
    eulerian_numbers,
    superfactorial,
)
from .eulerian import (
    BasisMatrix,
    EulerianElement,
    SWordExpansion,
    class_element,
    foulkes_matrix,
    fundamental_evaluation,
    idempotent_element,
    idempotent_s_expansion,
    identity_element,
    internal_product,
    pairing,
    spow_element,
    worpitzky_matrix,
    zero_element,
)
from .matrix import (
    AmazingMatrix,
    DescentPolynomial,
    Report,
    amazing_entry,
    amazing_matrix,
    descent_polynomial,
    foulkes_determinant,
    normalized_row,
    stationary_distribution,
    verify_multiplicativity,
    verify_spectrum,
    verify_stationary,
)
from .oracle import (
    GroupAlgebraElement,
    LumpingViolation,
    OracleBoundError,
    ShuffleMultiset,
    TransitionMismatch,
    enumerate_b_shuffles,
    expansion_to_group,
    group_identity,
    group_product,
    idempotent_group,
    oracle_descent_polynomial,
    oracle_transition_matrix,
    ribbon_sum,
    s_word_to_group,
    shuffle_element_from_basis,
)
from .simulate import (
    EmpiricalMatrix,
    SimulationConfig,
    simulate_carries,
    simulate_shuffle_chain,
)

__version__ = "0.1.0"

__all__ = [
    "AmazingMatrix",
    "BasisMatrix",
    "Composition",
    "DescentPolynomial",
    "EmpiricalMatrix",
    "EulerianElement",
    "GroupAlgebraElement",
    "LumpingViolation",
    "OracleBoundError",
    "Permutation",
    "Report",
    "ShuffleMultiset",
    "SimulationConfig",
    "SWordExpansion",
    "TransitionMismatch",
    "all_permutations",
    "amazing_entry",
    "amazing_matrix",
    "binomial",
    "class_element",
    "compositions",
    "descent_polynomial",
    "descent_statistics",
    "enumerate_b_shuffles",
    "eulerian_number",
    "eulerian_numbers",
    "expansion_to_group",
    "foulkes_determinant",
    "foulkes_matrix",
    "fundamental_evaluation",
    "group_identity",
    "group_product",
    "idempotent_element",
    "idempotent_group",
    "idempotent_s_expansion",
    "identity_element",
    "internal_product",
    "normalized_row",
    "oracle_descent_polynomial",
    "oracle_transition_matrix",
    "pairing",
    "ribbon_sum",
    "s_word_to_group",
    "shuffle_element_from_basis",
    "simulate_carries",
    "simulate_shuffle_chain",
    "spow_element",
    "stationary_distribution",
    "superfactorial",
    "verify_multiplicativity",
    "verify_spectrum",
    "verify_stationary",
    "worpitzky_matrix",
    "zero_element",
]
