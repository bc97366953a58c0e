"""Exception hierarchy shared by all evoline modules.

Every error carries a stable ``category`` slug so the CLI can emit
machine-readable failures.
"""


class EvolineError(Exception):
    category = "error"


class FieldMismatch(EvolineError):
    category = "field-mismatch"


class DivisionByZero(EvolineError, ZeroDivisionError):
    category = "division-by-zero"


class UnsupportedField(EvolineError):
    category = "unsupported-field"


class NonSquare(EvolineError):
    category = "non-square"


class DimensionMismatch(EvolineError):
    category = "dimension-mismatch"


class SingularMatrix(EvolineError):
    category = "singular-matrix"


class AlgebraMismatch(EvolineError):
    category = "algebra-mismatch"


class NotNatural(EvolineError):
    """A candidate basis has a nonzero product between two distinct vectors."""

    category = "not-natural"

    def __init__(self, i, j, product):
        self.i = i
        self.j = j
        self.product = product
        super().__init__(f"basis vectors {i} and {j} have nonzero product {product}")


class SingularChange(EvolineError):
    category = "singular-change"


class NotAnIdeal(EvolineError):
    """The given subspace is not closed under multiplication by the algebra."""

    category = "not-an-ideal"

    def __init__(self, j, witness):
        self.j = j
        self.witness = witness
        super().__init__(f"basis vector {j} maps the subspace outside itself: {witness}")


class NotProper(EvolineError):
    category = "not-proper"


class NotRegular(EvolineError):
    category = "not-regular"


class SizeLimit(EvolineError):
    category = "size-limit"


class InternalInconsistency(EvolineError):
    """Independent decision procedures disagreed; this always signals a bug."""

    category = "internal-inconsistency"


class WitnessFailed(EvolineError):
    category = "witness-failed"


class ParseError(EvolineError):
    category = "parse-error"


class ShapeError(ParseError):
    category = "shape-error"


class BadScalar(ParseError):
    category = "bad-scalar"


class BadFieldTag(ParseError):
    category = "bad-field-tag"
