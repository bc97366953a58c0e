"""JSON input and output for algebra definitions.

An algebra document is a JSON object with keys ``field`` (a tag such as
"Q" or "F7"), ``dim``, and ``matrix`` (dim x dim array of scalar strings).
Scalars are always strings so rationals survive serialization exactly.
"""

from __future__ import annotations

import json

from .algebra import EvolutionAlgebra
from .errors import BadScalar, ParseError, ShapeError
from .fields import field_from_tag
from .linalg import Matrix, Subspace


def parse_algebra(text: str) -> EvolutionAlgebra:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    return algebra_from_document(doc)


def algebra_from_document(doc) -> EvolutionAlgebra:
    if not isinstance(doc, dict):
        raise ParseError("algebra document must be a JSON object")
    for key in ("field", "dim", "matrix"):
        if key not in doc:
            raise ParseError(f"algebra document is missing the {key!r} key")
    tag = doc["field"]
    if not isinstance(tag, str):
        raise ParseError("'field' must be a string tag")
    field = field_from_tag(tag)
    dim = doc["dim"]
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise ShapeError("'dim' must be a positive integer")
    matrix = doc["matrix"]
    if not isinstance(matrix, list) or len(matrix) != dim:
        raise ShapeError(f"'matrix' must be a list of {dim} rows")
    rows = []
    for i, row in enumerate(matrix, start=1):
        if not isinstance(row, list) or len(row) != dim:
            raise ShapeError(f"matrix row {i} must be a list of {dim} entries")
        parsed = []
        for j, entry in enumerate(row, start=1):
            if not isinstance(entry, str):
                raise BadScalar(f"matrix entry ({i},{j}) must be a string, got {entry!r}")
            try:
                parsed.append(field.parse(entry))
            except BadScalar as exc:
                raise BadScalar(f"matrix entry ({i},{j}): {exc}") from exc
        rows.append(parsed)
    return EvolutionAlgebra(field, Matrix(field, rows))


def algebra_to_document(alg: EvolutionAlgebra) -> dict:
    field = alg.field
    return {
        "field": field.tag,
        "dim": alg.dim,
        "matrix": [[field.format(x) for x in row] for row in alg.structural_matrix.rows],
    }


def serialize_algebra(alg: EvolutionAlgebra) -> str:
    """Canonical byte-stable serialization of an algebra document."""
    return json.dumps(algebra_to_document(alg), indent=2) + "\n"


def parse_ideal(text: str, alg: EvolutionAlgebra) -> Subspace:
    """Ideal description: a JSON array of coordinate rows in scalar syntax."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    if not isinstance(doc, list):
        raise ParseError("ideal document must be a JSON array of coordinate rows")
    field = alg.field
    vectors = []
    for i, row in enumerate(doc, start=1):
        if not isinstance(row, list) or len(row) != alg.dim:
            raise ShapeError(f"ideal row {i} must be a list of {alg.dim} entries")
        parsed = []
        for j, entry in enumerate(row, start=1):
            if not isinstance(entry, str):
                raise BadScalar(f"ideal entry ({i},{j}) must be a string, got {entry!r}")
            parsed.append(field.parse(entry))
        vectors.append(parsed)
    return Subspace.span(field, alg.dim, vectors)
