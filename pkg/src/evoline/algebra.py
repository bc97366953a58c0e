"""Evolution algebras presented by a natural basis.

An algebra is determined by its structural matrix A: row i holds the
coordinates of e_i**2, and distinct basis vectors multiply to zero.  All
user-facing indices (supports, basis vectors, quotient selections) are
1-based to match the attached-graph vertex labels.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import (
    AlgebraMismatch,
    DimensionMismatch,
    NotAnIdeal,
    NotNatural,
    NotProper,
    SingularChange,
)
from .fields import Field
from .linalg import Matrix, Subspace, check_same_field, vec_is_zero


class EvolutionAlgebra:
    """Finite-dimensional evolution algebra with a fixed natural basis."""

    __slots__ = ("field", "dim", "structural_matrix", "_determinant")

    def __init__(self, field: Field, structural_matrix: Matrix):
        check_same_field(field, structural_matrix.field)
        if not structural_matrix.is_square():
            raise DimensionMismatch("structural matrix must be square")
        if structural_matrix.nrows < 1:
            raise DimensionMismatch("algebra dimension must be at least 1")
        self.field = field
        self.dim = structural_matrix.nrows
        self.structural_matrix = structural_matrix
        self._determinant = None

    @classmethod
    def from_rows(cls, field: Field, rows: Sequence[Sequence]) -> "EvolutionAlgebra":
        coerced = [[field.scalar(x) for x in row] for row in rows]
        return cls(field, Matrix(field, coerced))

    def __eq__(self, other):
        return (
            isinstance(other, EvolutionAlgebra)
            and other.field == self.field
            and other.structural_matrix == self.structural_matrix
        )

    def __hash__(self):
        return hash((self.field, self.structural_matrix))

    def __repr__(self):
        return f"EvolutionAlgebra({self.field.tag}, dim={self.dim})"

    # -- elements ----------------------------------------------------------

    def element(self, coords: Sequence) -> "Element":
        coords = tuple(self.field.scalar(x) for x in coords)
        if len(coords) != self.dim:
            raise DimensionMismatch(f"expected {self.dim} coordinates, got {len(coords)}")
        return Element(self, coords)

    def basis_element(self, i: int) -> "Element":
        """The natural basis vector e_i (1-based)."""
        if not 1 <= i <= self.dim:
            raise DimensionMismatch(f"basis index {i} out of range 1..{self.dim}")
        coords = [self.field.zero] * self.dim
        coords[i - 1] = self.field.one
        return Element(self, tuple(coords))

    def zero(self) -> "Element":
        return Element(self, (self.field.zero,) * self.dim)

    def multiply(self, x: "Element", y: "Element") -> "Element":
        """Product induced by e_i**2 = row i of A and e_i e_j = 0 for i != j."""
        if x.algebra is not self or y.algebra is not self:
            raise AlgebraMismatch("elements belong to different algebra instances")
        field = self.field
        rows = self.structural_matrix.rows
        out = [field.zero] * self.dim
        for i in range(self.dim):
            coeff = field.mul(x.coords[i], y.coords[i])
            if coeff:
                row = rows[i]
                for j, entry in enumerate(row):
                    if entry:
                        out[j] = field.add(out[j], field.mul(coeff, entry))
        return Element(self, tuple(out))

    # -- basic invariants ---------------------------------------------------

    def annihilator(self) -> Subspace:
        """Span of the basis vectors whose square is zero."""
        field = self.field
        vectors = []
        for i, row in enumerate(self.structural_matrix.rows):
            if vec_is_zero(row):
                vec = [field.zero] * self.dim
                vec[i] = field.one
                vectors.append(vec)
        return Subspace.span(field, self.dim, vectors)

    def determinant(self):
        if self._determinant is None:
            self._determinant = self.structural_matrix.determinant()
        return self._determinant

    def is_regular(self) -> bool:
        """True iff the squares of the basis vectors span the whole algebra."""
        return bool(self.determinant())

    def squares_span(self) -> Subspace:
        return Subspace.span(self.field, self.dim, self.structural_matrix.rows)

    # -- basis changes and quotients ----------------------------------------

    def rebase(self, change: Matrix) -> "EvolutionAlgebra":
        """Re-express the algebra in the candidate basis given by the rows of
        ``change`` (new basis vectors in old coordinates).

        Fails with :class:`NotNatural` if two distinct candidate vectors have
        a nonzero product, or :class:`SingularChange` if the rows are
        dependent.
        """
        check_same_field(self.field, change.field)
        if change.nrows != self.dim or change.ncols != self.dim:
            raise DimensionMismatch("basis change must be a square matrix of the algebra dimension")
        if not change.determinant():
            raise SingularChange("candidate basis rows are linearly dependent")
        field = self.field
        rows = self.structural_matrix.rows
        products = {}
        for i in range(self.dim):
            for j in range(i, self.dim):
                out = [field.zero] * self.dim
                for k in range(self.dim):
                    coeff = field.mul(change.rows[i][k], change.rows[j][k])
                    if coeff:
                        for col, entry in enumerate(rows[k]):
                            if entry:
                                out[col] = field.add(out[col], field.mul(coeff, entry))
                if i != j and not vec_is_zero(out):
                    raise NotNatural(i + 1, j + 1, tuple(out))
                if i == j:
                    products[i] = out
        inverse = change.inverse()
        new_rows = [inverse.apply_to_row(products[i]) for i in range(self.dim)]
        return EvolutionAlgebra(field, Matrix(field, new_rows))

    def quotient(self, ideal: Subspace) -> "Quotient":
        """Quotient by a proper ideal, with a natural basis picked greedily
        from the surviving basis-vector coclasses.
        """
        check_same_field(self.field, ideal.field)
        if ideal.ambient_dim != self.dim:
            raise DimensionMismatch("ideal lives in a different ambient space")
        field = self.field
        rows = self.structural_matrix.rows
        for j in range(1, self.dim + 1):
            for b in ideal.basis:
                coeff = b[j - 1]
                if coeff:
                    product = [field.mul(coeff, entry) for entry in rows[j - 1]]
                    if not ideal.contains(product):
                        raise NotAnIdeal(j, tuple(product))
        if ideal.is_full():
            raise NotProper("cannot take the quotient by the whole algebra")

        kept: list[int] = []
        reached = ideal
        for i in range(1, self.dim + 1):
            candidate = self.basis_element(i).coords
            if not reached.contains(candidate):
                kept.append(i)
                reached = reached.add(Subspace.span(field, self.dim, [candidate]))
        # kept coclasses plus the ideal basis form a basis of the algebra, so
        # coordinates in the quotient come from solving against that basis.
        basis_rows = [list(self.basis_element(i).coords) for i in kept]
        basis_rows += [list(b) for b in ideal.basis]
        solver = Matrix(field, basis_rows).inverse()
        m = len(kept)

        def project(vec):
            return solver.apply_to_row(vec)[:m]

        projection = Matrix(field, [project(self.basis_element(i).coords) for i in range(1, self.dim + 1)])
        quotient_rows = [project(list(rows[i - 1])) for i in kept]
        algebra = EvolutionAlgebra(field, Matrix(field, quotient_rows))
        return Quotient(algebra=algebra, kept=tuple(kept), projection=projection)

    def attached_graph(self):
        """Weighted digraph with an edge (i, j) for every nonzero alpha_ij."""
        from .graphs import weighted_digraph_from_matrix

        return weighted_digraph_from_matrix(self.structural_matrix)


class Element:
    """Element of a specific :class:`EvolutionAlgebra` instance.

    Elements are tied to their algebra by object identity; mixing elements
    of two structurally equal but distinct algebras raises
    :class:`AlgebraMismatch`.
    """

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra: EvolutionAlgebra, coords: tuple):
        self.algebra = algebra
        self.coords = coords

    def _require_same(self, other: "Element"):
        if not isinstance(other, Element) or other.algebra is not self.algebra:
            raise AlgebraMismatch("elements belong to different algebra instances")

    def __add__(self, other: "Element") -> "Element":
        self._require_same(other)
        field = self.algebra.field
        return Element(self.algebra, tuple(field.add(a, b) for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Element") -> "Element":
        self._require_same(other)
        field = self.algebra.field
        return Element(self.algebra, tuple(field.sub(a, b) for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Element":
        field = self.algebra.field
        return Element(self.algebra, tuple(field.neg(a) for a in self.coords))

    def __mul__(self, other: "Element") -> "Element":
        return self.algebra.multiply(self, other)

    def scale(self, c) -> "Element":
        field = self.algebra.field
        c = field.scalar(c)
        return Element(self.algebra, tuple(field.mul(c, a) for a in self.coords))

    def left_power(self, k: int) -> "Element":
        """Left-normed power x^(k): x^(1) = x, x^(k+1) = x^(k) * x."""
        if k < 1:
            raise ValueError("power index must be at least 1")
        acc = self
        for _ in range(k - 1):
            acc = self.algebra.multiply(acc, self)
        return acc

    def support(self) -> frozenset[int]:
        """1-based indices of the nonzero coordinates."""
        return frozenset(i + 1 for i, x in enumerate(self.coords) if x)

    def is_zero(self) -> bool:
        return vec_is_zero(self.coords)

    def __eq__(self, other):
        return (
            isinstance(other, Element)
            and other.algebra is self.algebra
            and other.coords == self.coords
        )

    def __hash__(self):
        return hash((id(self.algebra), self.coords))

    def __repr__(self):
        field = self.algebra.field
        return "Element(" + ", ".join(field.format(x) for x in self.coords) + ")"


@dataclass(frozen=True)
class Quotient:
    """Quotient algebra plus the data needed to map elements into it."""

    algebra: EvolutionAlgebra
    kept: tuple[int, ...]
    projection: Matrix

    def project(self, element: Element) -> Element:
        """Image of an element of the original algebra in the quotient."""
        coords = self.projection.apply_to_row(element.coords)
        return self.algebra.element(coords)
