"""Exact dense vectors, matrices and subspaces over a Field.

Vectors are rows; linear maps act on the right (``y = x @ M``), so row i
of a matrix is the image of the i-th basis vector.  Subspaces are kept in
reduced row-echelon form, which makes subspace equality structural.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

from .errors import DimensionMismatch, FieldMismatch, NonSquare, SingularMatrix
from .fields import Field


def check_same_field(a: Field, b: Field):
    if a != b:
        raise FieldMismatch(f"mixed fields {a.tag} and {b.tag}")


def vec_add(field: Field, u: Sequence, v: Sequence) -> list:
    return [field.add(a, b) for a, b in zip(u, v)]

def vec_sub(field: Field, u: Sequence, v: Sequence) -> list:
    return [field.sub(a, b) for a, b in zip(u, v)]

def vec_scale(field: Field, c, v: Sequence) -> list:
    return [field.mul(c, a) for a in v]

def vec_is_zero(v: Sequence) -> bool:
    return not any(v)


def _rref(field: Field, rows: list[list]) -> tuple[list[list], list[int]]:
    """In-place reduced row echelon form; returns (rows, pivot columns)."""
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = field.inv(rows[r][c])
        if inv != field.one:
            rows[r] = [field.mul(inv, x) for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                factor = rows[i][c]
                rows[i] = [field.sub(x, field.mul(factor, y)) for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


class Matrix:
    """Immutable dense matrix with exact entries."""

    __slots__ = ("field", "rows", "nrows", "ncols")

    def __init__(self, field: Field, rows: Iterable[Iterable]):
        self.field = field
        self.rows = tuple(tuple(row) for row in rows)
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        for row in self.rows:
            if len(row) != self.ncols:
                raise DimensionMismatch("ragged rows in matrix")

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        one, zero = field.one, field.zero
        return cls(field, [[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, field: Field, nrows: int, ncols: int) -> "Matrix":
        zero = field.zero
        return cls(field, [[zero] * ncols for _ in range(nrows)])

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and other.field == self.field
            and other.rows == self.rows
        )

    def __hash__(self):
        return hash((self.field, self.rows))

    def __repr__(self):
        body = "; ".join("[" + ", ".join(self.field.format(x) for x in row) + "]" for row in self.rows)
        return f"Matrix({self.field.tag}, {body})"

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def transpose(self) -> "Matrix":
        return Matrix(self.field, zip(*self.rows)) if self.rows else Matrix(self.field, [])

    def row(self, i: int) -> list:
        """Row with 1-based index i."""
        return list(self.rows[i - 1])

    def matmul(self, other: "Matrix") -> "Matrix":
        check_same_field(self.field, other.field)
        if self.ncols != other.nrows:
            raise DimensionMismatch(f"cannot multiply {self.nrows}x{self.ncols} by {other.nrows}x{other.ncols}")
        field = self.field
        cols = other.transpose().rows
        out = []
        for row in self.rows:
            out.append([_dot(field, row, col) for col in cols])
        return Matrix(field, out)

    def apply_to_row(self, vec: Sequence) -> list:
        """Image of a row vector: vec @ self."""
        if len(vec) != self.nrows:
            raise DimensionMismatch("vector length does not match matrix rows")
        field = self.field
        out = [field.zero] * self.ncols
        for coeff, row in zip(vec, self.rows):
            if coeff:
                for j, entry in enumerate(row):
                    if entry:
                        out[j] = field.add(out[j], field.mul(coeff, entry))
        return out

    def determinant(self):
        if not self.is_square():
            raise NonSquare(f"determinant of {self.nrows}x{self.ncols} matrix")
        field = self.field
        n = self.nrows
        rows = [list(r) for r in self.rows]
        det = field.one
        for c in range(n):
            pivot_row = None
            for i in range(c, n):
                if rows[i][c]:
                    pivot_row = i
                    break
            if pivot_row is None:
                return field.zero
            if pivot_row != c:
                rows[c], rows[pivot_row] = rows[pivot_row], rows[c]
                det = field.neg(det)
            pivot = rows[c][c]
            det = field.mul(det, pivot)
            inv = field.inv(pivot)
            for i in range(c + 1, n):
                if rows[i][c]:
                    factor = field.mul(rows[i][c], inv)
                    rows[i] = [field.sub(x, field.mul(factor, y)) for x, y in zip(rows[i], rows[c])]
        return det

    def rref(self) -> tuple["Matrix", tuple[int, ...]]:
        rows, pivots = _rref(self.field, [list(r) for r in self.rows])
        return Matrix(self.field, rows), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def inverse(self) -> "Matrix":
        if not self.is_square():
            raise NonSquare("only square matrices can be inverted")
        n = self.nrows
        field = self.field
        augmented = [list(row) + list(identity_row) for row, identity_row in
                     zip(self.rows, Matrix.identity(field, n).rows)]
        reduced, pivots = _rref(field, augmented)
        if len(pivots) != n or pivots != list(range(n)):
            raise SingularMatrix("matrix is singular")
        return Matrix(field, [row[n:] for row in reduced])

    def kernel(self) -> "Subspace":
        """Subspace of row vectors x with x @ self = 0."""
        field = self.field
        transposed, pivots = self.transpose().rref()
        pivot_set = set(pivots)
        free_cols = [c for c in range(self.nrows) if c not in pivot_set]
        basis = []
        for f in free_cols:
            vec = [field.zero] * self.nrows
            vec[f] = field.one
            for row_idx, p in enumerate(pivots):
                vec[p] = field.neg(transposed.rows[row_idx][f])
            basis.append(vec)
        return Subspace.span(field, self.nrows, basis)


def _dot(field: Field, u: Sequence, v: Sequence):
    acc = field.zero
    for a, b in zip(u, v):
        if a and b:
            acc = field.add(acc, field.mul(a, b))
    return acc


class Subspace:
    """Subspace of F^n with a canonical reduced row-echelon basis."""

    __slots__ = ("field", "ambient_dim", "basis")

    def __init__(self, field: Field, ambient_dim: int, canonical_basis: tuple):
        self.field = field
        self.ambient_dim = ambient_dim
        self.basis = canonical_basis

    @classmethod
    def span(cls, field: Field, ambient_dim: int, vectors: Iterable[Sequence]) -> "Subspace":
        rows = []
        for v in vectors:
            v = list(v)
            if len(v) != ambient_dim:
                raise DimensionMismatch(f"vector of length {len(v)} in ambient dimension {ambient_dim}")
            rows.append(v)
        reduced, _ = _rref(field, rows)
        basis = tuple(tuple(r) for r in reduced if any(r))
        return cls(field, ambient_dim, basis)

    @classmethod
    def zero(cls, field: Field, ambient_dim: int) -> "Subspace":
        return cls(field, ambient_dim, ())

    @classmethod
    def full(cls, field: Field, ambient_dim: int) -> "Subspace":
        return cls.span(field, ambient_dim, Matrix.identity(field, ambient_dim).rows)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and other.field == self.field
            and other.ambient_dim == self.ambient_dim
            and other.basis == self.basis
        )

    def __hash__(self):
        return hash((self.field, self.ambient_dim, self.basis))

    def __repr__(self):
        rows = ", ".join("(" + ", ".join(self.field.format(x) for x in row) + ")" for row in self.basis)
        return f"Subspace({self.field.tag}, dim={self.dim} of {self.ambient_dim}, basis=[{rows}])"

    def _check_compatible(self, other: "Subspace"):
        check_same_field(self.field, other.field)
        if other.ambient_dim != self.ambient_dim:
            raise DimensionMismatch("subspaces live in different ambient spaces")

    def reduce(self, vector: Sequence) -> list:
        """Residual of a vector after subtracting its projection on the basis."""
        if len(vector) != self.ambient_dim:
            raise DimensionMismatch("vector length does not match ambient dimension")
        field = self.field
        vec = list(vector)
        for row in self.basis:
            pivot = next(i for i, x in enumerate(row) if x)
            coeff = vec[pivot]
            if coeff:
                vec = [field.sub(x, field.mul(coeff, y)) for x, y in zip(vec, row)]
        return vec

    def contains(self, vector: Sequence) -> bool:
        return vec_is_zero(self.reduce(vector))

    def contains_subspace(self, other: "Subspace") -> bool:
        self._check_compatible(other)
        return all(self.contains(v) for v in other.basis)

    def add(self, other: "Subspace") -> "Subspace":
        self._check_compatible(other)
        return Subspace.span(self.field, self.ambient_dim, list(self.basis) + list(other.basis))

    def intersect(self, other: "Subspace") -> "Subspace":
        # Zassenhaus: rref of [U|U; W|0], rows with zero left half carry the
        # intersection in their right half.
        self._check_compatible(other)
        n = self.ambient_dim
        zero = self.field.zero
        rows = [list(u) + list(u) for u in self.basis]
        rows += [list(w) + [zero] * n for w in other.basis]
        reduced, _ = _rref(self.field, rows)
        inter = [row[n:] for row in reduced if not any(row[:n]) and any(row[n:])]
        return Subspace.span(self.field, n, inter)
