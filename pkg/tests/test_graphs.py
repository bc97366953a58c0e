"""Attached graphs: construction, connectivity, cycles, DOT export."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from evoline import Digraph, EvolutionAlgebra, PrimeField, QQ

from .oracles import random_algebra

F5 = PrimeField(5)


def test_attach_graph_examples(chain_to_idempotent_q, fan_q):
    g = chain_to_idempotent_q.attached_graph()
    assert {k: str(v) for k, v in g.weights.items()} == {(1, 2): "1", (2, 2): "1"}
    g = fan_q.attached_graph()
    assert {k: str(v) for k, v in g.weights.items()} == {(1, 2): "1", (1, 3): "1"}
    zero = EvolutionAlgebra.from_rows(QQ, [[0, 0], [0, 0]])
    assert not zero.attached_graph().weights


@settings(max_examples=50, deadline=None)
@given(st.integers(min_value=0, max_value=10**6), st.integers(min_value=1, max_value=5))
def test_edges_follow_nonzero_entries(seed, n):
    rng = random.Random(seed)
    alg = random_algebra(rng, F5, n, list(range(5)))
    g = alg.attached_graph()
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            entry = alg.structural_matrix.rows[i - 1][j - 1]
            assert ((i, j) in g.edges) == bool(entry)
            if entry:
                assert g.weight(i, j) == entry


def test_weak_components(fan_q):
    graph = fan_q.attached_graph().unweighted
    assert graph.is_weakly_connected()
    assert graph.weak_components() == [(1, 2, 3)]
    rebased = fan_q.rebase(
        EvolutionAlgebra.from_rows(QQ, [[1, 0, 0], [0, 1, 1], [0, 0, 1]]).structural_matrix
    )
    assert rebased.attached_graph().unweighted.weak_components() == [(1, 2), (3,)]
    edgeless = Digraph(2, [])
    assert edgeless.weak_components() == [(1,), (2,)]
    assert not edgeless.is_weakly_connected()


def test_shortest_cycle_examples(chain_to_idempotent_q, fan_q):
    assert chain_to_idempotent_q.attached_graph().unweighted.shortest_cycle() == (2,)
    assert fan_q.attached_graph().unweighted.shortest_cycle() is None
    assert Digraph(2, [(1, 2), (2, 1)]).shortest_cycle() == (1, 2)


def test_shortest_cycle_prefers_loops_and_small_starts():
    g = Digraph(4, [(1, 2), (2, 1), (3, 3), (4, 4)])
    assert g.shortest_cycle() == (3,)
    g = Digraph(4, [(1, 2), (2, 1), (3, 4), (4, 3)])
    assert g.shortest_cycle() == (1, 2)


def test_shortest_cycle_lexicographic_tie_break():
    # Two 2-cycles through vertex 1; the smaller partner wins.
    g = Digraph(3, [(1, 3), (3, 1), (1, 2), (2, 1)])
    assert g.shortest_cycle() == (1, 2)


def test_sink_elimination_examples(fan_q):
    assert fan_q.attached_graph().unweighted.sink_elimination_order() == (1, 2, 3)
    reversed_fan = Digraph(3, [(2, 1), (3, 1)])
    order = reversed_fan.sink_elimination_order()
    assert order is not None
    assert order[-1] == 1
    looped = Digraph(2, [(1, 1)])
    assert looped.sink_elimination_order() is None


def _random_digraph(rng, n, density):
    edges = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if rng.random() < density]
    return Digraph(n, edges)


@settings(max_examples=150, deadline=None)
@given(
    st.integers(min_value=0, max_value=10**6),
    st.integers(min_value=1, max_value=7),
    st.sampled_from([0.1, 0.25, 0.5]),
)
def test_cycle_and_sink_elimination_agree(seed, n, density):
    g = _random_digraph(random.Random(seed), n, density)
    cycle = g.shortest_cycle()
    order = g.sink_elimination_order()
    assert (cycle is None) == (order is not None)
    if cycle is not None:
        assert len(set(cycle)) == len(cycle)
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            assert (a, b) in g.edges
    if order is not None:
        position = {v: k for k, v in enumerate(order)}
        for a, b in g.edges:
            assert position[a] < position[b]


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=0, max_value=10**6), st.integers(min_value=1, max_value=7))
def test_weak_components_partition(seed, n):
    g = _random_digraph(random.Random(seed), n, 0.3)
    comps = g.weak_components()
    flattened = sorted(v for comp in comps for v in comp)
    assert flattened == list(range(1, n + 1))
    index = {v: k for k, comp in enumerate(comps) for v in comp}
    for a, b in g.edges:
        assert index[a] == index[b]


def test_to_dot(fan_q, chain_to_idempotent_q):
    dot = fan_q.attached_graph().to_dot()
    assert '1 -> 2 [label="1"];' in dot
    assert '1 -> 3 [label="1"];' in dot
    assert dot.startswith("digraph {")
    assert dot.endswith("}\n")
    loop = chain_to_idempotent_q.attached_graph().to_dot()
    assert '2 -> 2 [label="1"];' in loop
    single = EvolutionAlgebra.from_rows(QQ, [[0]]).attached_graph().to_dot()
    assert "1;" in single
    assert "->" not in single


def test_to_dot_with_labels(chain_to_idempotent_q):
    dot = chain_to_idempotent_q.attached_graph().to_dot(labels=["a", "b"])
    assert '1 [label="a"];' in dot
    assert '2 [label="b"];' in dot


def test_to_dot_deterministic(two_loops_q):
    first = two_loops_q.attached_graph().to_dot()
    second = two_loops_q.attached_graph().to_dot()
    assert first == second


def test_edge_bounds_checked():
    with pytest.raises(ValueError):
        Digraph(2, [(1, 3)])
