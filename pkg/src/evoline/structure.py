"""Nilpotency analysis and ideal decomposition.

Nilpotency is decided four independent ways (cycle search, sink
elimination, right power chain, full power chain) and the answers are
cross-checked; any disagreement raises InternalInconsistency because the
equivalence of the four routes is the correctness oracle of the whole
package.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .algebra import Element, EvolutionAlgebra
from .errors import InternalInconsistency, WitnessFailed
from .linalg import Subspace, vec_is_zero

RIGHT_CHAIN = "right"
FULL_CHAIN = "full"


@dataclass(frozen=True)
class PowerChain:
    """Weakly decreasing chain of power subspaces, up to its limit.

    The last entry is a genuine fixpoint: multiplying it by the whole
    algebra reproduces it, so every later power equals it.  The full chain
    may plateau strictly before its limit (two equal consecutive terms
    followed by a drop), which is why simple repetition is not used as the
    stopping rule.
    """

    kind: str
    subspaces: tuple[Subspace, ...]
    reaches_zero: bool

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(s.dim for s in self.subspaces)

    @property
    def vanishing_index(self) -> Optional[int]:
        """Minimal k with the k-th power zero, if the chain reaches zero."""
        for k, s in enumerate(self.subspaces, start=1):
            if s.is_zero():
                return k
        return None


@dataclass(frozen=True)
class NonNilWitness:
    """Element supported on a minimal cycle whose powers never vanish."""

    cycle: tuple[int, ...]
    element: Element
    scaling: object  # product of the cycle weights, nonzero


@dataclass(frozen=True)
class WitnessCheck:
    power_index: int
    scaling_confirmed: bool
    nonvanishing_checked_to: int


@dataclass(frozen=True)
class NilpotencyReport:
    acyclic: bool
    triangular_order: Optional[tuple[int, ...]]
    right_index: Optional[int]
    full_index: Optional[int]
    witness: Optional[NonNilWitness]
    right_chain: PowerChain
    full_chain: PowerChain


@dataclass(frozen=True)
class BoundedNilResult:
    status: str  # "nil_at" | "not_nil" | "inconclusive"
    step: Optional[int] = None


@dataclass(frozen=True)
class Decomposition:
    """Ideal direct summands read off the weak components of the graph."""

    parts: tuple[tuple[tuple[int, ...], EvolutionAlgebra], ...]
    basis_dependent: bool


def subspace_product(alg: EvolutionAlgebra, left: Subspace, right: Subspace) -> Subspace:
    """Span of all products u*v with u in ``left`` and v in ``right``.

    Products factor through coordinatewise products against the structural
    matrix, so only basis pairs need to be expanded.
    """
    field = alg.field
    n = alg.dim
    matrix = alg.structural_matrix
    vectors = []
    for u in left.basis:
        for v in right.basis:
            hadamard = [field.mul(a, b) for a, b in zip(u, v)]
            if not vec_is_zero(hadamard):
                vectors.append(matrix.apply_to_row(hadamard))
    return Subspace.span(field, n, vectors)


def right_power_chain(alg: EvolutionAlgebra) -> PowerChain:
    """Chain with each term the product of the previous one by the algebra."""
    full = Subspace.full(alg.field, alg.dim)
    chain = [full]
    while True:
        nxt = subspace_product(alg, chain[-1], full)
        if nxt == chain[-1]:
            break
        chain.append(nxt)
    return PowerChain(RIGHT_CHAIN, tuple(chain), chain[-1].is_zero())


def full_power_chain(alg: EvolutionAlgebra) -> PowerChain:
    """Chain whose (k+1)-st term sums the products of all earlier splits.

    Stops at the first term S with E*S = S: that equation certifies S is the
    limit of the chain, whereas mere repetition of consecutive terms does
    not (the chain can plateau and then keep falling).
    """
    powers = [None, Subspace.full(alg.field, alg.dim)]
    while True:
        k = len(powers) - 1
        first_split = subspace_product(alg, powers[1], powers[k])
        if first_split == powers[k]:
            break
        nxt = first_split
        for i in range(2, (k + 1) // 2 + 1):
            nxt = nxt.add(subspace_product(alg, powers[i], powers[k + 1 - i]))
        powers.append(nxt)
    chain = tuple(powers[1:])
    return PowerChain(FULL_CHAIN, chain, chain[-1].is_zero())


def _permuted_is_strictly_upper(alg: EvolutionAlgebra, order: tuple[int, ...]) -> bool:
    rows = alg.structural_matrix.rows
    n = alg.dim
    for new_i in range(n):
        for new_j in range(new_i + 1):
            if rows[order[new_i] - 1][order[new_j] - 1]:
                return False
    return True


def build_witness(alg: EvolutionAlgebra, cycle: tuple[int, ...]) -> NonNilWitness:
    """Witness element for a minimal cycle: the sum of its basis vectors."""
    field = alg.field
    coords = [field.zero] * alg.dim
    for v in cycle:
        coords[v - 1] = field.one
    scaling = field.one
    for idx, v in enumerate(cycle):
        w = cycle[(idx + 1) % len(cycle)]
        scaling = field.mul(scaling, alg.structural_matrix.rows[v - 1][w - 1])
    return NonNilWitness(cycle=cycle, element=alg.element(coords), scaling=scaling)


def nilpotency_report(alg: EvolutionAlgebra) -> NilpotencyReport:
    """Decide nilpotency by all four routes and cross-check the answers."""
    graph = alg.attached_graph().unweighted
    cycle = graph.shortest_cycle()
    order = graph.sink_elimination_order()
    right = right_power_chain(alg)
    full = full_power_chain(alg)

    acyclic = cycle is None
    votes = {
        "cycle-search": acyclic,
        "sink-elimination": order is not None,
        "right-chain": right.reaches_zero,
        "full-chain": full.reaches_zero,
    }
    if len(set(votes.values())) != 1:
        raise InternalInconsistency(f"nilpotency routes disagree: {votes}")
    if order is not None:
        if not _permuted_is_strictly_upper(alg, order):
            raise InternalInconsistency(f"order {order} does not triangularize the structural matrix")
        if right.vanishing_index is None or right.vanishing_index > alg.dim + 1:
            raise InternalInconsistency("right chain of a nilpotent algebra must vanish by step dim+1")

    witness = None if acyclic else build_witness(alg, cycle)
    return NilpotencyReport(
        acyclic=acyclic,
        triangular_order=order,
        right_index=right.vanishing_index,
        full_index=full.vanishing_index,
        witness=witness,
        right_chain=right,
        full_chain=full,
    )


def verify_non_nil_witness(alg: EvolutionAlgebra, witness: NonNilWitness, bound: int) -> WitnessCheck:
    """Check the witness congruence and that no early power vanishes.

    On the cycle coordinates, the (r+1)-st left power of the witness must be
    the witness scaled by the product of the cycle weights; coordinates off
    the cycle are ignored, which implements congruence modulo the span of
    the remaining basis vectors.
    """
    r = len(witness.cycle)
    x = witness.element
    field = alg.field
    power = x.left_power(r + 1)
    for v in witness.cycle:
        expected = field.mul(witness.scaling, x.coords[v - 1])
        if power.coords[v - 1] != expected:
            raise WitnessFailed(
                f"cycle coordinate {v}: power has {field.format(power.coords[v - 1])}, "
                f"expected {field.format(expected)}"
            )
    acc = x
    for k in range(1, bound + 1):
        if k > 1:
            acc = acc * x
        if acc.is_zero():
            raise WitnessFailed(f"witness power {k} vanished")
    return WitnessCheck(power_index=r + 1, scaling_confirmed=True, nonvanishing_checked_to=bound)


def bounded_nil_check(alg: EvolutionAlgebra, x: Element, max_steps: Optional[int] = None) -> BoundedNilResult:
    """Left powers of x up to max_steps (default dim + 1).

    A repeated nonzero power value makes the power sequence periodic, which
    certifies that it never reaches zero.
    """
    if max_steps is None:
        max_steps = alg.dim + 1
    if max_steps < 1:
        raise ValueError("max_steps must be at least 1")
    seen = set()
    acc = x
    for k in range(1, max_steps + 1):
        if k > 1:
            acc = acc * x
        if acc.is_zero():
            return BoundedNilResult("nil_at", k)
        if acc.coords in seen:
            return BoundedNilResult("not_nil", k)
        seen.add(acc.coords)
    return BoundedNilResult("inconclusive")


def decompose(alg: EvolutionAlgebra) -> Decomposition:
    """Split the algebra along the weak components of its attached graph.

    Each component spans an ideal and the algebra is their direct sum.  When
    the annihilator is nonzero the component count depends on the chosen
    natural basis, so the result carries a caveat flag.
    """
    graph = alg.attached_graph().unweighted
    components = graph.weak_components()
    rows = alg.structural_matrix.rows
    parts = []
    for comp in components:
        sub_rows = [[rows[i - 1][j - 1] for j in comp] for i in comp]
        parts.append((comp, EvolutionAlgebra.from_rows(alg.field, sub_rows)))
    return Decomposition(parts=tuple(parts), basis_dependent=not alg.annihilator().is_zero())
