"""Directed graphs attached to evolution algebras.

Vertices are labelled 1..n.  The weighted graph keeps the nonzero
structural constants on its edges; forgetting weights gives the plain
digraph used for connectivity and cycle questions.
"""

from __future__ import annotations

from collections import deque
from typing import Mapping, Optional, Sequence

from .fields import Field
from .linalg import Matrix


class Digraph:
    """Plain digraph on vertices 1..n with a fixed edge set."""

    __slots__ = ("n", "edges", "_out", "_in")

    def __init__(self, n: int, edges):
        self.n = n
        self.edges = frozenset(edges)
        for i, j in self.edges:
            if not (1 <= i <= n and 1 <= j <= n):
                raise ValueError(f"edge ({i}, {j}) outside vertex range 1..{n}")
        self._out = {v: [] for v in range(1, n + 1)}
        self._in = {v: [] for v in range(1, n + 1)}
        for i, j in sorted(self.edges):
            self._out[i].append(j)
            self._in[j].append(i)

    def out_neighbors(self, v: int) -> list[int]:
        return self._out[v]

    def in_neighbors(self, v: int) -> list[int]:
        return self._in[v]

    def __eq__(self, other):
        return isinstance(other, Digraph) and other.n == self.n and other.edges == self.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Digraph(n={self.n}, edges={sorted(self.edges)})"

    # -- connectivity --------------------------------------------------------

    def weak_components(self) -> list[tuple[int, ...]]:
        """Connected components after forgetting edge directions, sorted."""
        seen = set()
        components = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            queue = deque([start])
            seen.add(start)
            comp = []
            while queue:
                v = queue.popleft()
                comp.append(v)
                for w in self._out[v] + self._in[v]:
                    if w not in seen:
                        seen.add(w)
                        queue.append(w)
            components.append(tuple(sorted(comp)))
        return sorted(components)

    def is_weakly_connected(self) -> bool:
        return len(self.weak_components()) <= 1

    # -- cycles ---------------------------------------------------------------

    def _bfs_distances(self, start: int, reverse: bool = False) -> dict[int, int]:
        adjacency = self._in if reverse else self._out
        dist = {start: 0}
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in adjacency[v]:
                if w not in dist:
                    dist[w] = dist[v] + 1
                    queue.append(w)
        return dist

    def shortest_cycle(self) -> Optional[tuple[int, ...]]:
        """A minimum-length oriented cycle, or None if the graph is acyclic.

        Ties are broken by the smallest starting vertex and then the
        lexicographically smallest vertex sequence, so the result is
        deterministic.
        """
        best_len = None
        best_start = None
        for v in range(1, self.n + 1):
            dist = self._bfs_distances(v)
            for u in self._in[v]:
                if u in dist:
                    length = dist[u] + 1
                    if best_len is None or length < best_len:
                        best_len, best_start = length, v
        if best_len is None:
            return None
        # Rebuild the lexicographically smallest cycle of the minimal length.
        # A closed walk of exactly the minimal length is necessarily simple,
        # so greedily picking the smallest feasible successor is safe.
        start = best_start
        back = self._bfs_distances(start, reverse=True)
        cycle = [start]
        current = start
        for position in range(2, best_len + 1):
            needed = best_len - position + 1
            current = min(w for w in self._out[current] if back.get(w) == needed)
            cycle.append(current)
        return tuple(cycle)

    def sink_elimination_order(self) -> Optional[tuple[int, ...]]:
        """Vertex order under which every edge points strictly rightward.

        Built by repeatedly sending a sink (largest index first) to the last
        free position; returns None as soon as no sink exists, i.e. when the
        graph has an oriented cycle.
        """
        remaining = set(range(1, self.n + 1))
        out_degree = {v: 0 for v in remaining}
        for i, j in self.edges:
            if i != j:
                out_degree[i] += 1
        loops = {i for i, j in self.edges if i == j}
        order = [0] * self.n
        for position in range(self.n, 0, -1):
            sinks = [v for v in remaining if out_degree[v] == 0 and v not in loops]
            if not sinks:
                return None
            v = max(sinks)
            order[position - 1] = v
            remaining.remove(v)
            for u in self._in[v]:
                if u in remaining and u != v:
                    out_degree[u] -= 1
        return tuple(order)


class WeightedDigraph:
    """Digraph whose edges carry nonzero field scalars."""

    __slots__ = ("n", "field", "weights", "_unweighted")

    def __init__(self, n: int, field: Field, weights: Mapping[tuple[int, int], object]):
        self.n = n
        self.field = field
        items = sorted(weights.items())
        for (i, j), w in items:
            if not w:
                raise ValueError(f"edge ({i}, {j}) has zero weight")
        self.weights = dict(items)
        self._unweighted = Digraph(n, self.weights.keys())

    @property
    def unweighted(self) -> Digraph:
        return self._unweighted

    @property
    def edges(self) -> frozenset:
        return self._unweighted.edges

    def weight(self, i: int, j: int):
        return self.weights[(i, j)]

    def __eq__(self, other):
        return (
            isinstance(other, WeightedDigraph)
            and other.n == self.n
            and other.field == self.field
            and other.weights == self.weights
        )

    def __hash__(self):
        return hash((self.n, self.field, tuple(sorted(self.weights.items()))))

    def __repr__(self):
        edges = ", ".join(
            f"({i},{j}):{self.field.format(w)}" for (i, j), w in self.weights.items()
        )
        return f"WeightedDigraph(n={self.n}, {{{edges}}})"

    def to_dot(self, labels: Optional[Sequence[str]] = None) -> str:
        """Deterministic DOT text; one line per vertex and per edge."""
        lines = ["digraph {"]
        for v in range(1, self.n + 1):
            if labels is not None:
                lines.append(f'  {v} [label="{labels[v - 1]}"];')
            else:
                lines.append(f"  {v};")
        for (i, j), w in self.weights.items():
            lines.append(f'  {i} -> {j} [label="{self.field.format(w)}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def weighted_digraph_from_matrix(matrix: Matrix) -> WeightedDigraph:
    """Attached graph of a structural matrix: edge (i, j) iff entry ij != 0."""
    weights = {}
    for i, row in enumerate(matrix.rows, start=1):
        for j, entry in enumerate(row, start=1):
            if entry:
                weights[(i, j)] = entry
    return WeightedDigraph(matrix.nrows, matrix.field, weights)
