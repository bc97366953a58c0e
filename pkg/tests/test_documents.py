"""Algebra document parsing and canonical serialization."""

import json
from fractions import Fraction
from pathlib import Path

import pytest

from evoline import EvolutionAlgebra, QQ, parse_algebra, parse_ideal, serialize_algebra
from evoline.errors import BadFieldTag, BadScalar, ParseError, ShapeError

FIXTURES = Path(__file__).parent / "fixtures"


def test_parse_chain_to_idempotent():
    alg = parse_algebra('{"field":"Q","dim":2,"matrix":[["0","1"],["0","1"]]}')
    assert alg.field == QQ
    assert alg.structural_matrix.rows == (
        (Fraction(0), Fraction(1)),
        (Fraction(0), Fraction(1)),
    )


def test_parse_prime_field_document():
    alg = parse_algebra('{"field":"F7","dim":2,"matrix":[["0","1"],["1","0"]]}')
    assert alg.field.characteristic == 7
    assert alg.structural_matrix.rows == ((0, 1), (1, 0))


def test_shape_errors():
    with pytest.raises(ShapeError):
        parse_algebra('{"field":"Q","dim":2,"matrix":[["0","1","2"],["0","1","2"]]}')
    with pytest.raises(ShapeError):
        parse_algebra('{"field":"Q","dim":2,"matrix":[["0","1"]]}')
    with pytest.raises(ShapeError):
        parse_algebra('{"field":"Q","dim":0,"matrix":[]}')


def test_scalar_and_tag_errors():
    with pytest.raises(BadScalar):
        parse_algebra('{"field":"Q","dim":1,"matrix":[["0.5"]]}')
    with pytest.raises(BadScalar):
        parse_algebra('{"field":"F5","dim":1,"matrix":[["7"]]}')
    with pytest.raises(BadScalar):
        parse_algebra('{"field":"Q","dim":1,"matrix":[[1]]}')
    with pytest.raises(BadFieldTag):
        parse_algebra('{"field":"F9","dim":1,"matrix":[["0"]]}')


def test_json_error_carries_location():
    with pytest.raises(ParseError) as info:
        parse_algebra('{"field": "Q",')
    assert "line 1" in str(info.value)


def test_missing_keys():
    with pytest.raises(ParseError):
        parse_algebra('{"field":"Q","dim":1}')
    with pytest.raises(ParseError):
        parse_algebra("[1, 2]")


def test_serialize_round_trip_is_byte_identical():
    for name in ("two_loops", "fan", "two_cycle_f7"):
        text = (FIXTURES / f"{name}.json").read_text()
        assert serialize_algebra(parse_algebra(text)) == text


def test_serialization_normalizes_rationals():
    alg = EvolutionAlgebra.from_rows(QQ, [[Fraction(2, 4)]])
    doc = json.loads(serialize_algebra(alg))
    assert doc["matrix"] == [["1/2"]]


def test_parse_ideal(fan_q):
    text = (FIXTURES / "last_axis_ideal.json").read_text()
    ideal = parse_ideal(text, fan_q)
    assert ideal.dim == 1
    assert ideal.contains([Fraction(0), Fraction(0), Fraction(3)])


def test_parse_ideal_errors(fan_q):
    with pytest.raises(ShapeError):
        parse_ideal('[["0","1"]]', fan_q)
    with pytest.raises(ParseError):
        parse_ideal('{"rows": []}', fan_q)
    with pytest.raises(BadScalar):
        parse_ideal('[["0","1",2]]', fan_q)
