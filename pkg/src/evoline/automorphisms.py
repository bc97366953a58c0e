"""Automorphism groups of regular evolution algebras.

Every automorphism of a regular algebra permutes and rescales the natural
basis, so the group is assembled from the automorphisms of the unweighted
attached graph together with the solutions of the scaling equations along
its edges.  The scaling equations are solved exactly: walking predecessors
from an unresolved vertex must close a cycle, the cycle pins the entry
value down to the roots of a single power equation, and the rest follows
by forward propagation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .algebra import EvolutionAlgebra
from .errors import InternalInconsistency, NotRegular, SizeLimit
from .fields import Field
from .graphs import Digraph
from .linalg import Matrix

#: Permutation searches refuse graphs with more vertices than this unless
#: the caller raises the limit (the CLI reads EVOLINE_MAX_N).
DEFAULT_MAX_VERTICES = 12


@dataclass(frozen=True)
class MonomialMap:
    """Linear map e_i -> scales[i-1] * e_{sigma[i-1]} with nonzero scales."""

    sigma: tuple[int, ...]
    scales: tuple

    def __post_init__(self):
        n = len(self.sigma)
        if sorted(self.sigma) != list(range(1, n + 1)):
            raise ValueError(f"{self.sigma} is not a permutation of 1..{n}")
        if len(self.scales) != n:
            raise ValueError("one scale per basis vector is required")
        if not all(self.scales):
            raise ValueError("monomial maps need nonzero scales")

    @classmethod
    def identity(cls, field: Field, n: int) -> "MonomialMap":
        return cls(tuple(range(1, n + 1)), (field.one,) * n)

    @property
    def dim(self) -> int:
        return len(self.sigma)

    def is_identity_permutation(self) -> bool:
        return all(img == i + 1 for i, img in enumerate(self.sigma))

    def apply(self, field: Field, coords) -> list:
        out = [field.zero] * self.dim
        for i, value in enumerate(coords):
            if value:
                out[self.sigma[i] - 1] = field.mul(self.scales[i], value)
        return out

    def compose(self, field: Field, other: "MonomialMap") -> "MonomialMap":
        """self after other: (self . other)(e_i) = self(other(e_i))."""
        if other.dim != self.dim:
            raise ValueError("cannot compose monomial maps of different dimensions")
        sigma = tuple(self.sigma[other.sigma[i] - 1] for i in range(self.dim))
        scales = tuple(
            field.mul(other.scales[i], self.scales[other.sigma[i] - 1]) for i in range(self.dim)
        )
        return MonomialMap(sigma, scales)

    def inverse(self, field: Field) -> "MonomialMap":
        inv_sigma = [0] * self.dim
        inv_scales = [field.one] * self.dim
        for i, img in enumerate(self.sigma):
            inv_sigma[img - 1] = i + 1
            inv_scales[img - 1] = field.inv(self.scales[i])
        return MonomialMap(tuple(inv_sigma), tuple(inv_scales))

    def as_matrix(self, field: Field) -> Matrix:
        rows = []
        for i in range(self.dim):
            row = [field.zero] * self.dim
            row[self.sigma[i] - 1] = self.scales[i]
            rows.append(row)
        return Matrix(field, rows)

    def sort_key(self, field: Field):
        return (self.sigma, tuple(field.sort_key(s) for s in self.scales))


@dataclass(frozen=True)
class AutomorphismGroup:
    algebra: EvolutionAlgebra
    elements: tuple[MonomialMap, ...]

    @property
    def order(self) -> int:
        return len(self.elements)


def respects_products(alg: EvolutionAlgebra, phi: MonomialMap, target: Optional[EvolutionAlgebra] = None) -> bool:
    """Direct check that phi(e_i^2) = phi(e_i)^2 for every basis vector."""
    if target is None:
        target = alg
    field = alg.field
    for i in range(1, alg.dim + 1):
        image_of_square = phi.apply(field, alg.structural_matrix.rows[i - 1])
        coords = [field.zero] * alg.dim
        coords[phi.sigma[i - 1] - 1] = phi.scales[i - 1]
        mapped = target.element(coords)
        if (mapped * mapped).coords != tuple(image_of_square):
            return False
    return True


def _vertex_invariants(g: Digraph) -> dict[int, tuple[int, int, bool]]:
    return {
        v: (len(g.out_neighbors(v)), len(g.in_neighbors(v)), (v, v) in g.edges)
        for v in range(1, g.n + 1)
    }


def pattern_isomorphisms(g: Digraph, h: Digraph) -> Iterator[tuple[int, ...]]:
    """All vertex bijections carrying the edges of g exactly onto those of h.

    Backtracking over vertices in ascending order; candidate images must
    share the (out-degree, in-degree, loop) invariant, so rigid graphs
    prune quickly.  Yields permutations in lexicographic order.
    """
    if g.n != h.n or len(g.edges) != len(h.edges):
        return
    inv_g = _vertex_invariants(g)
    inv_h = _vertex_invariants(h)
    if sorted(inv_g.values()) != sorted(inv_h.values()):
        return
    candidates = {
        v: [w for w in range(1, h.n + 1) if inv_h[w] == inv_g[v]] for v in range(1, g.n + 1)
    }
    n = g.n
    assignment = [0] * (n + 1)
    used = [False] * (n + 1)

    def extend(v: int) -> Iterator[tuple[int, ...]]:
        if v > n:
            yield tuple(assignment[1:])
            return
        for w in candidates[v]:
            if used[w]:
                continue
            ok = True
            for u in range(1, v + 1):
                img_u = assignment[u] if u < v else w
                if ((u, v) in g.edges) != ((img_u, w) in h.edges):
                    ok = False
                    break
                if ((v, u) in g.edges) != ((w, img_u) in h.edges):
                    ok = False
                    break
            if ok:
                assignment[v] = w
                used[w] = True
                yield from extend(v + 1)
                used[w] = False
                assignment[v] = 0

    yield from extend(1)


def graph_automorphisms(g: Digraph, max_vertices: int = DEFAULT_MAX_VERTICES) -> list[tuple[int, ...]]:
    """All permutations preserving the edge set, sorted lexicographically."""
    if g.n > max_vertices:
        raise SizeLimit(f"graph has {g.n} vertices, limit is {max_vertices}")
    return list(pattern_isomorphisms(g, g))


def _solve_scaling_system(field: Field, n: int, constraints: dict[tuple[int, int], object]) -> list[tuple]:
    """All nonzero tuples (x_1..x_n) with x_j = c_ij * x_i**2 per constraint.

    Requires every vertex to have at least one incoming constraint, which
    holds for the edge set of a regular algebra.  Predecessor walks then
    always close a cycle among unresolved vertices; the cycle of length L
    forces x**(2**L - 1) to equal a known constant, whose finitely many
    roots are branched over and propagated forward.
    """
    in_nb: dict[int, list[int]] = {v: [] for v in range(1, n + 1)}
    out_nb: dict[int, list[int]] = {v: [] for v in range(1, n + 1)}
    for (i, j) in sorted(constraints):
        in_nb[j].append(i)
        out_nb[i].append(j)
    for v in range(1, n + 1):
        if not in_nb[v]:
            raise InternalInconsistency(f"vertex {v} has no incoming constraint")

    def propagate(assign: dict[int, object], seeds: list[int]) -> bool:
        queue = list(seeds)
        while queue:
            i = queue.pop()
            forced = field.mul(assign[i], assign[i])
            for j in out_nb[i]:
                value = field.mul(constraints[(i, j)], forced)
                if j in assign:
                    if assign[j] != value:
                        return False
                else:
                    assign[j] = value
                    queue.append(j)
        return True

    solutions: list[tuple] = []

    def extend(assign: dict[int, object]):
        if len(assign) == n:
            solutions.append(tuple(assign[v] for v in range(1, n + 1)))
            return
        v = min(u for u in range(1, n + 1) if u not in assign)
        walk = [v]
        position = {v: 0}
        while True:
            predecessor = in_nb[walk[-1]][0]
            if predecessor in assign:
                raise InternalInconsistency("assigned vertex reached despite forward closure")
            if predecessor in position:
                entry = position[predecessor]
                break
            position[predecessor] = len(walk)
            walk.append(predecessor)
        cycle = walk[entry:]
        # Compose the constraints around the cycle: the entry value x obeys
        # x = K * x**(2**L) with L the cycle length, i.e. x**(2**L - 1) = 1/K.
        accumulated = field.one
        for t, vertex in enumerate(cycle):
            source = cycle[t + 1] if t + 1 < len(cycle) else cycle[0]
            c = constraints[(source, vertex)]
            accumulated = field.mul(accumulated, field.pow(c, 2**t))
        exponent = 2 ** len(cycle) - 1
        for root in field.nth_roots(exponent, field.inv(accumulated)):
            if not root:
                continue
            attempt = dict(assign)
            attempt[cycle[0]] = root
            if propagate(attempt, [cycle[0]]):
                extend(attempt)

    extend({})
    verified = []
    for sol in solutions:
        if all(sol[j - 1] == field.mul(c, field.mul(sol[i - 1], sol[i - 1])) for (i, j), c in constraints.items()):
            verified.append(sol)
        else:
            raise InternalInconsistency("scaling solver produced an invalid assignment")
    return verified


def _scaling_constraints(source: EvolutionAlgebra, target: EvolutionAlgebra, sigma: tuple[int, ...]):
    """Constraints x_j = c_ij x_i^2 making e_i -> x_i e_sigma(i) multiplicative."""
    field = source.field
    a_rows = source.structural_matrix.rows
    b_rows = target.structural_matrix.rows
    constraints = {}
    for i in range(1, source.dim + 1):
        for j in range(1, source.dim + 1):
            alpha = a_rows[i - 1][j - 1]
            if alpha:
                beta = b_rows[sigma[i - 1] - 1][sigma[j - 1] - 1]
                constraints[(i, j)] = field.div(beta, alpha)
    return constraints


def diagonal_kernel(alg: EvolutionAlgebra) -> list[MonomialMap]:
    """All automorphisms fixing every basis line: e_i -> mu_i e_i."""
    if not alg.is_regular():
        raise NotRegular("diagonal automorphisms are only enumerated when the structural matrix is regular")
    field = alg.field
    identity = tuple(range(1, alg.dim + 1))
    constraints = _scaling_constraints(alg, alg, identity)
    maps = [MonomialMap(identity, sol) for sol in _solve_scaling_system(field, alg.dim, constraints)]
    for phi in maps:
        if not respects_products(alg, phi):
            raise InternalInconsistency("diagonal solution failed the direct multiplication check")
    return sorted(maps, key=lambda m: m.sort_key(field))


def automorphism_group(alg: EvolutionAlgebra, max_vertices: int = DEFAULT_MAX_VERTICES) -> AutomorphismGroup:
    """Enumerate the full automorphism group of a regular algebra."""
    if not alg.is_regular():
        raise NotRegular("E != E^2: automorphism group may be infinite")
    field = alg.field
    graph = alg.attached_graph().unweighted
    if graph.n > max_vertices:
        raise SizeLimit(f"algebra dimension {graph.n} exceeds the search limit {max_vertices}")
    elements = []
    for sigma in pattern_isomorphisms(graph, graph):
        constraints = _scaling_constraints(alg, alg, sigma)
        for sol in _solve_scaling_system(field, alg.dim, constraints):
            phi = MonomialMap(sigma, sol)
            if not respects_products(alg, phi):
                raise InternalInconsistency("candidate automorphism failed the direct multiplication check")
            elements.append(phi)
    elements.sort(key=lambda m: m.sort_key(field))
    group = AutomorphismGroup(algebra=alg, elements=tuple(elements))
    _verify_group_axioms(field, group)
    return group


def _verify_group_axioms(field: Field, group: AutomorphismGroup):
    element_set = set(group.elements)
    identity = MonomialMap.identity(field, group.algebra.dim)
    if identity not in element_set:
        raise InternalInconsistency("identity map missing from the automorphism group")
    for phi in group.elements:
        if phi.inverse(field) not in element_set:
            raise InternalInconsistency("automorphism group is not closed under inverses")
    for phi in group.elements:
        for psi in group.elements:
            if phi.compose(field, psi) not in element_set:
                raise InternalInconsistency("automorphism group is not closed under composition")


def is_isomorphic_regular(
    a: EvolutionAlgebra, b: EvolutionAlgebra, max_vertices: int = DEFAULT_MAX_VERTICES
) -> Optional[MonomialMap]:
    """A monomial isomorphism from a to b, or None.

    Isomorphisms between regular algebras are necessarily monomial, so the
    search runs over the pattern isomorphisms of the attached graphs and
    solves the scaling system for each.
    """
    if not a.is_regular() or not b.is_regular():
        raise NotRegular("isomorphism search is only implemented for regular algebras")
    if a.field != b.field or a.dim != b.dim:
        return None
    if a.dim > max_vertices:
        raise SizeLimit(f"algebra dimension {a.dim} exceeds the search limit {max_vertices}")
    field = a.field
    graph_a = a.attached_graph().unweighted
    graph_b = b.attached_graph().unweighted
    for sigma in pattern_isomorphisms(graph_a, graph_b):
        constraints = _scaling_constraints(a, b, sigma)
        for sol in _solve_scaling_system(field, a.dim, constraints):
            phi = MonomialMap(sigma, sol)
            if not respects_products(a, phi, target=b):
                raise InternalInconsistency("candidate isomorphism failed the direct multiplication check")
            return phi
    return None
