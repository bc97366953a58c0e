"""Exact-arithmetic analysis of finite-dimensional evolution algebras."""

from .algebra import Element, EvolutionAlgebra, Quotient
from .automorphisms import (
    DEFAULT_MAX_VERTICES,
    AutomorphismGroup,
    MonomialMap,
    automorphism_group,
    diagonal_kernel,
    graph_automorphisms,
    is_isomorphic_regular,
)
from .documents import algebra_to_document, parse_algebra, parse_ideal, serialize_algebra
from .fields import QQ, Field, PrimeField, Rationals, field_from_tag
from .graphs import Digraph, WeightedDigraph, weighted_digraph_from_matrix
from .linalg import Matrix, Subspace
from .structure import (
    BoundedNilResult,
    Decomposition,
    NilpotencyReport,
    NonNilWitness,
    PowerChain,
    bounded_nil_check,
    decompose,
    full_power_chain,
    nilpotency_report,
    right_power_chain,
    subspace_product,
    verify_non_nil_witness,
)

__version__ = "0.1.0"

__all__ = [
    "AutomorphismGroup",
    "BoundedNilResult",
    "Decomposition",
    "DEFAULT_MAX_VERTICES",
    "Digraph",
    "Element",
    "EvolutionAlgebra",
    "Field",
    "Matrix",
    "MonomialMap",
    "NilpotencyReport",
    "NonNilWitness",
    "PowerChain",
    "PrimeField",
    "QQ",
    "Quotient",
    "Rationals",
    "Subspace",
    "WeightedDigraph",
    "algebra_to_document",
    "automorphism_group",
    "bounded_nil_check",
    "decompose",
    "diagonal_kernel",
    "field_from_tag",
    "full_power_chain",
    "graph_automorphisms",
    "is_isomorphic_regular",
    "nilpotency_report",
    "parse_algebra",
    "parse_ideal",
    "right_power_chain",
    "serialize_algebra",
    "subspace_product",
    "verify_non_nil_witness",
    "weighted_digraph_from_matrix",
]
