"""Acceptance suite: one test per criterion, each printing a PASS line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines and timings.  All comparisons are exact; the fuzz corpora are seeded,
so every run checks the identical instances.
"""

import itertools
import random
import time
from fractions import Fraction
from pathlib import Path

import pytest
from click.testing import CliRunner

from evoline import (
    EvolutionAlgebra,
    Matrix,
    MonomialMap,
    PrimeField,
    QQ,
    automorphism_group,
    is_isomorphic_regular,
    nilpotency_report,
    verify_non_nil_witness,
)
from evoline.automorphisms import respects_products
from evoline.cli import main
from evoline.errors import NotRegular

from .oracles import (
    brute_force_monomial_automorphisms,
    kernel_annihilator,
    monomial_set,
    random_algebra,
    random_monomial_map,
    random_regular_algebra,
)

F3 = PrimeField(3)
F5 = PrimeField(5)
F7 = PrimeField(7)

FIXTURES = Path(__file__).parent / "fixtures"
GOLDEN = Path(__file__).parent / "golden"

CORPUS_SEED = 20240
CORPUS_SIZE = 1000  # half over Q, half over F5


def announce(number, label, started):
    print(f"criterion {number} ({label}): PASS [{time.perf_counter() - started:.2f}s]")


@pytest.fixture(scope="module")
def fuzz_corpus():
    rng = random.Random(CORPUS_SEED)
    corpus = []
    for k in range(CORPUS_SIZE):
        n = rng.randint(1, 7)
        if k % 2 == 0:
            corpus.append(random_algebra(rng, QQ, n, [-2, -1, 0, 1, 2]))
        else:
            corpus.append(random_algebra(rng, F5, n, list(range(5))))
    return corpus


@pytest.fixture(scope="module")
def computed_groups():
    """Groups produced while checking criteria 5 and 6, reused by criterion 8."""
    return []


def test_criterion_01_named_fixtures():
    started = time.perf_counter()
    # n=2, e1^2 = e2, e2^2 = e2: graph and its second natural basis
    alg = EvolutionAlgebra.from_rows(QQ, [[0, 1], [0, 1]])
    graph = alg.attached_graph()
    assert graph.weights == {(1, 2): Fraction(1), (2, 2): Fraction(1)}
    rebased = alg.rebase(Matrix(QQ, [[Fraction(1), Fraction(1)], [Fraction(1), Fraction(-1)]]))
    assert rebased.structural_matrix.rows == (
        (Fraction(1), Fraction(-1)),
        (Fraction(1), Fraction(-1)),
    )
    assert rebased.attached_graph().weights == {
        (1, 1): Fraction(1),
        (1, 2): Fraction(-1),
        (2, 1): Fraction(1),
        (2, 2): Fraction(-1),
    }
    # n=3 fan: connected under the first basis, split by the second
    fan = EvolutionAlgebra.from_rows(QQ, [[0, 1, 1], [0, 0, 0], [0, 0, 0]])
    assert fan.attached_graph().unweighted.is_weakly_connected()
    refanned = fan.rebase(
        Matrix(QQ, [[Fraction(x) for x in row] for row in [[1, 0, 0], [0, 1, 1], [0, 0, 1]]])
    )
    assert refanned.attached_graph().unweighted.weak_components() == [(1, 2), (3,)]
    # n=2 with all four constants nonzero: all four weighted edges
    loops = EvolutionAlgebra.from_rows(QQ, [[1, 2], [3, 4]])
    assert loops.attached_graph().weights == {
        (1, 1): Fraction(1),
        (1, 2): Fraction(2),
        (2, 1): Fraction(3),
        (2, 2): Fraction(4),
    }
    assert time.perf_counter() - started < 1.0
    announce(1, "named fixture algebras and both natural bases", started)


def test_criterion_02_nilpotency_equivalence_fuzz(fuzz_corpus):
    started = time.perf_counter()
    acyclic_count = 0
    for alg in fuzz_corpus:
        n = alg.dim
        # nilpotency_report internally recomputes all four routes and raises
        # InternalInconsistency if any pair disagrees
        report = nilpotency_report(alg)
        if report.acyclic:
            acyclic_count += 1
            order = report.triangular_order
            rows = alg.structural_matrix.rows
            for i in range(n):
                for j in range(i + 1):
                    assert not rows[order[i] - 1][order[j] - 1]
            assert report.right_index is not None and report.right_index <= n + 1
            assert report.right_chain.subspaces[-1].is_zero()
        else:
            verify_non_nil_witness(alg, report.witness, bound=3 * n)
    assert acyclic_count > 0
    elapsed = time.perf_counter() - started
    assert elapsed < 30.0
    announce(2, f"theorem equivalence fuzz, {len(fuzz_corpus)} algebras", started)


def test_criterion_03_annihilator_oracle(fuzz_corpus):
    started = time.perf_counter()
    for alg in fuzz_corpus:
        assert alg.annihilator() == kernel_annihilator(alg)
    announce(3, "annihilator equals brute-force kernel", started)


def test_criterion_04_regularity_and_disjoint_support(fuzz_corpus):
    started = time.perf_counter()
    rng = random.Random(CORPUS_SEED + 4)
    for alg in fuzz_corpus:
        n = alg.dim
        field = alg.field
        regular = alg.is_regular()
        assert regular == bool(alg.determinant())
        assert regular == (alg.squares_span().dim == n)
        if not regular:
            continue
        # exhaustive basis pairs: distinct basis vectors multiply to zero and
        # have disjoint supports
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if i != j:
                    ei, ej = alg.basis_element(i), alg.basis_element(j)
                    assert (ei * ej).is_zero()
                    assert not (ei.support() & ej.support())
        # random zero-product pairs: partners are drawn from the exact kernel
        # of multiplication by x, so x*y = 0 by construction
        pairs = 0
        attempts = 0
        while pairs < 100 and attempts < 400:
            attempts += 1
            x = alg.element([field.scalar(rng.randint(-2, 2)) if field is QQ else rng.randrange(5) for _ in range(n)])
            if x.is_zero():
                continue
            rows = [
                [field.mul(x.coords[j], entry) for entry in alg.structural_matrix.rows[j]]
                for j in range(n)
            ]
            kernel = Matrix(field, rows).kernel()
            if kernel.is_zero():
                continue
            for _ in range(10):
                coeffs = [rng.randint(-2, 2) for _ in kernel.basis]
                y_coords = [field.zero] * n
                for c, basis_vec in zip(coeffs, kernel.basis):
                    c = field.scalar(c)
                    if c:
                        y_coords = [field.add(a, field.mul(c, b)) for a, b in zip(y_coords, basis_vec)]
                y = alg.element(y_coords)
                if y.is_zero():
                    continue
                assert (x * y).is_zero()
                assert not (x.support() & y.support())
                pairs += 1
                if pairs >= 100:
                    break
    announce(4, "regularity equivalences and disjoint-support lemma", started)


def test_criterion_05_automorphism_oracle(computed_groups):
    started = time.perf_counter()
    # every n=2 algebra over F3
    checked_regular = 0
    for flat in itertools.product(range(3), repeat=4):
        alg = EvolutionAlgebra.from_rows(F3, [list(flat[:2]), list(flat[2:])])
        if alg.is_regular():
            group = automorphism_group(alg)
            assert monomial_set(group) == brute_force_monomial_automorphisms(alg)
            computed_groups.append(group)
            checked_regular += 1
        else:
            with pytest.raises(NotRegular):
                automorphism_group(alg)
    assert checked_regular == 48  # |GL_2(F3)| = 48 regular structural matrices
    # fixed seeded sample: 25 regular instances each for n=2/F7 and n=3/F3
    rng = random.Random(CORPUS_SEED + 5)
    for _ in range(25):
        alg = random_regular_algebra(rng, F7, 2, list(range(7)))
        group = automorphism_group(alg)
        assert monomial_set(group) == brute_force_monomial_automorphisms(alg)
        computed_groups.append(group)
    for _ in range(25):
        alg = random_regular_algebra(rng, F3, 3, list(range(3)))
        group = automorphism_group(alg)
        assert monomial_set(group) == brute_force_monomial_automorphisms(alg)
        computed_groups.append(group)
    elapsed = time.perf_counter() - started
    assert elapsed < 60.0
    announce(5, "automorphism groups equal brute force", started)


def test_criterion_06_named_automorphism_counts(computed_groups):
    started = time.perf_counter()
    two_cycle_f7 = EvolutionAlgebra.from_rows(F7, [[0, 1], [1, 0]])
    group_f7 = automorphism_group(two_cycle_f7)
    assert group_f7.order == 6
    assert monomial_set(group_f7) == brute_force_monomial_automorphisms(two_cycle_f7)
    two_cycle_q = EvolutionAlgebra.from_rows(QQ, [[0, 1], [1, 0]])
    group_q = automorphism_group(two_cycle_q)
    assert group_q.order == 2
    idempotent = EvolutionAlgebra.from_rows(QQ, [[1]])
    group_one = automorphism_group(idempotent)
    assert group_one.order == 1
    computed_groups.extend([group_f7, group_q, group_one])
    announce(6, "named automorphism counts 6 / 2 / 1", started)


def test_criterion_07_refusal_behavior():
    started = time.perf_counter()
    alg = EvolutionAlgebra.from_rows(QQ, [[0, 0, 1], [0, 0, 1], [0, 0, 1]])
    assert alg.determinant() == 0
    assert not alg.is_regular()
    with pytest.raises(NotRegular):
        automorphism_group(alg)
    result = CliRunner().invoke(main, ["aut", str(FIXTURES / "shared_square.json")])
    assert result.exit_code == 1
    assert '"category": "not-regular"' in result.stderr
    announce(7, "non-regular input refused", started)


def test_criterion_08_group_axioms(computed_groups):
    started = time.perf_counter()
    assert computed_groups, "criteria 5 and 6 must run first"
    for group in computed_groups:
        field = group.algebra.field
        elements = set(group.elements)
        assert MonomialMap.identity(field, group.algebra.dim) in elements
        for phi in elements:
            assert phi.inverse(field) in elements
            assert respects_products(group.algebra, phi)
            for psi in elements:
                assert phi.compose(field, psi) in elements
    announce(8, f"group axioms on {len(computed_groups)} groups", started)


def test_criterion_09_rigidity():
    started = time.perf_counter()
    rng = random.Random(CORPUS_SEED + 9)
    for _ in range(100):
        n = rng.randint(1, 5)
        alg = random_regular_algebra(rng, F5, n, list(range(5)))
        twist = random_monomial_map(rng, F5, n, [1, 2, 3, 4])
        rebased = alg.rebase(twist.as_matrix(F5))
        phi = is_isomorphic_regular(alg, rebased)
        assert phi is not None
        assert respects_products(alg, phi, target=rebased)
        sigma = twist.sigma
        old_edges = alg.attached_graph().unweighted.edges
        new_edges = rebased.attached_graph().unweighted.edges
        assert old_edges == {(sigma[i - 1], sigma[j - 1]) for i, j in new_edges}
    announce(9, "monomial rebases recovered on 100 regular algebras", started)


def test_criterion_10_cli_golden():
    started = time.perf_counter()
    runner = CliRunner()
    cases = [
        ("analyze_fan.txt", ["analyze", str(FIXTURES / "fan.json")]),
        ("analyze_chain_to_idempotent.txt", ["analyze", str(FIXTURES / "chain_to_idempotent.json")]),
        ("analyze_two_cycle_f7.txt", ["analyze", str(FIXTURES / "two_cycle_f7.json")]),
        ("analyze_fan.json.txt", ["analyze", str(FIXTURES / "fan.json"), "--json"]),
        ("aut_two_cycle_f7.txt", ["aut", str(FIXTURES / "two_cycle_f7.json")]),
        ("graph_fan.dot", ["graph", str(FIXTURES / "fan.json")]),
        ("graph_chain_to_idempotent.dot", ["graph", str(FIXTURES / "chain_to_idempotent.json")]),
    ]
    for name, argv in cases:
        first = runner.invoke(main, argv)
        second = runner.invoke(main, argv)
        assert first.exit_code == 0
        assert first.output == (GOLDEN / name).read_text()
        assert first.output == second.output
    announce(10, "CLI outputs byte-identical to golden files", started)
