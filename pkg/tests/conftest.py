"""Shared fixtures: small named algebras used across the test modules."""

import pytest

from evoline import EvolutionAlgebra, PrimeField, QQ


@pytest.fixture
def two_loops_q():
    """n=2, all four structural constants nonzero (weights 1,2,3,4)."""
    return EvolutionAlgebra.from_rows(QQ, [[1, 2], [3, 4]])


@pytest.fixture
def chain_to_idempotent_q():
    """e1^2 = e2, e2^2 = e2 over Q."""
    return EvolutionAlgebra.from_rows(QQ, [[0, 1], [0, 1]])


@pytest.fixture
def fan_q():
    """e1^2 = e2 + e3, e2^2 = e3^2 = 0 over Q."""
    return EvolutionAlgebra.from_rows(QQ, [[0, 1, 1], [0, 0, 0], [0, 0, 0]])


@pytest.fixture
def two_cycle_q():
    """e1^2 = e2, e2^2 = e1 over Q."""
    return EvolutionAlgebra.from_rows(QQ, [[0, 1], [1, 0]])


@pytest.fixture
def two_cycle_f7():
    """e1^2 = e2, e2^2 = e1 over F7."""
    return EvolutionAlgebra.from_rows(PrimeField(7), [[0, 1], [1, 0]])


@pytest.fixture
def idempotent_line_q():
    """e1^2 = e1 over Q."""
    return EvolutionAlgebra.from_rows(QQ, [[1]])


@pytest.fixture
def shared_square_q():
    """e1^2 = e2^2 = e3^2 = e3 over Q; not regular, graph automorphisms swap 1,2."""
    return EvolutionAlgebra.from_rows(QQ, [[0, 0, 1], [0, 0, 1], [0, 0, 1]])
