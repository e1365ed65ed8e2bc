"""Immutable simple graphs on vertices 0..n-1.

Adjacency is stored as one Python int per vertex used as a bitset, so the
complement, degree and pair iteration are cheap for the n <= 62 range the
package targets. Product vertices are flattened row-major: (u1, u2) -> u1*n2 + u2.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import EmptyDomainError, EnumerationCapError, InvalidEdgeError, VertexRangeError

MAX_VERTICES = 62
MAX_ENUMERATION_N = 7

Pair = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph. ``rows[u]`` has bit v set iff u and v are adjacent.

    Construct through :func:`build_graph` (validated) or :meth:`from_rows`
    (trusted, used internally by the graph operations).
    """

    n: int
    rows: tuple[int, ...]

    @classmethod
    def from_rows(cls, rows: Sequence[int]) -> Graph:
        return cls(len(rows), tuple(rows))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(r.bit_count() for r in self.rows)

    @property
    def m(self) -> int:
        return sum(self.degrees) // 2

    @property
    def mbar(self) -> int:
        return self.n * (self.n - 1) // 2 - self.m

    def edges(self) -> list[Pair]:
        """Adjacent pairs u < v in lexicographic order."""
        return [(u, v) for u, v in combinations(range(self.n), 2) if self.rows[u] >> v & 1]

    def non_edges(self) -> list[Pair]:
        """Non-adjacent pairs u < v in lexicographic order."""
        return [(u, v) for u, v in combinations(range(self.n), 2) if not self.rows[u] >> v & 1]

    def adjacency_matrix(self) -> list[list[int]]:
        return [[(r >> v) & 1 for v in range(self.n)] for r in self.rows]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


@dataclass(frozen=True)
class DegreeStats:
    degrees: tuple[int, ...]
    max_degree: int
    min_degree: int
    edge_count: int
    coedge_count: int
    is_regular: bool


def build_graph(n: int, edges: Iterable[Pair]) -> Graph:
    """Validated constructor. Duplicate pairs (in either orientation) collapse."""
    if n < 1:
        raise EmptyDomainError(f"graph must have at least one vertex, got n={n}")
    if n > MAX_VERTICES:
        raise VertexRangeError(f"n={n} exceeds the supported maximum of {MAX_VERTICES}")
    rows = [0] * n
    for pair in edges:
        u, v = pair
        if not (0 <= u < n and 0 <= v < n):
            raise VertexRangeError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise InvalidEdgeError(f"self-loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def empty_graph(n: int) -> Graph:
    return build_graph(n, ())


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise EmptyDomainError(f"graph must have at least one vertex, got n={n}")
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << u) for u in range(n)))


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full & ~r & ~(1 << u) for u, r in enumerate(g.rows)))


def degree_stats(g: Graph) -> DegreeStats:
    d = g.degrees
    m = sum(d) // 2
    hi, lo = max(d), min(d)
    return DegreeStats(
        degrees=d,
        max_degree=hi,
        min_degree=lo,
        edge_count=m,
        coedge_count=g.n * (g.n - 1) // 2 - m,
        is_regular=hi == lo,
    )


def non_edges(g: Graph) -> list[Pair]:
    return g.non_edges()


def graph_union(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union; g2's vertices are shifted by g1.n."""
    k = g1.n
    return Graph.from_rows(g1.rows + tuple(r << k for r in g2.rows))


def graph_join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus every edge between the two vertex sets."""
    n1, n2 = g1.n, g2.n
    to_g2 = ((1 << n2) - 1) << n1
    to_g1 = (1 << n1) - 1
    return Graph.from_rows(
        tuple(r | to_g2 for r in g1.rows) + tuple((r << n1) | to_g1 for r in g2.rows)
    )


def cartesian_product(g1: Graph, g2: Graph) -> Graph:
    n1, n2 = g1.n, g2.n
    rows = []
    for u1 in range(n1):
        for u2 in range(n2):
            row = g2.rows[u2] << (u1 * n2)
            for v1 in range(n1):
                if g1.rows[u1] >> v1 & 1:
                    row |= 1 << (v1 * n2 + u2)
            rows.append(row)
    return Graph.from_rows(rows)


def composition(g1: Graph, g2: Graph) -> Graph:
    """Lexicographic product g1[g2]."""
    n1, n2 = g1.n, g2.n
    block = (1 << n2) - 1
    rows = []
    for u1 in range(n1):
        outer = 0
        for v1 in range(n1):
            if g1.rows[u1] >> v1 & 1:
                outer |= block << (v1 * n2)
        for u2 in range(n2):
            rows.append(outer | (g2.rows[u2] << (u1 * n2)))
    return Graph.from_rows(rows)


def pair_list(n: int) -> list[Pair]:
    """Unordered pairs in the lexicographic order used by the enumeration counter."""
    return list(combinations(range(n), 2))


def graph_from_counter(n: int, counter: int, pairs: Sequence[Pair] | None = None) -> Graph:
    """Bit i of ``counter`` selects the i-th lexicographic pair."""
    if pairs is None:
        pairs = pair_list(n)
    rows = [0] * n
    i = 0
    while counter:
        if counter & 1:
            u, v = pairs[i]
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        counter >>= 1
        i += 1
    return Graph(n, tuple(rows))


def graph_counter(g: Graph) -> int:
    """Inverse of :func:`graph_from_counter`."""
    c = 0
    for i, (u, v) in enumerate(pair_list(g.n)):
        if g.rows[u] >> v & 1:
            c |= 1 << i
    return c


def check_enumeration_n(n: int) -> None:
    if not 1 <= n <= MAX_ENUMERATION_N:
        raise EnumerationCapError(
            f"labeled enumeration supports 1 <= n <= {MAX_ENUMERATION_N}, got n={n}"
        )


def enumerate_labeled_graphs(n: int, start: int = 0, stop: int | None = None) -> Iterator[Graph]:
    """Yield every labeled graph on n vertices, ordered by edge-subset counter.

    ``start``/``stop`` select a counter range so the stream can be split into
    disjoint deterministic parts.
    """
    check_enumeration_n(n)
    pairs = pair_list(n)
    total = 1 << len(pairs)
    stop = total if stop is None else min(stop, total)
    for c in range(max(start, 0), stop):
        yield graph_from_counter(n, c, pairs)


def count_labeled_graphs(n: int) -> int:
    check_enumeration_n(n)
    return 1 << (n * (n - 1) // 2)
