"""Degree-based indices and coindices by direct summation.

Index sums run over edges, coindex sums over non-adjacent pairs, and in both
cases degrees are those of the input graph. Pairs are visited in lexicographic
order so results are bit-reproducible. Integer-valued indices are accumulated
exactly as ints and returned as floats.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

from .errors import IndexDomainError
from .graph import Graph


@dataclass(frozen=True)
class IndexVector:
    so: float
    so_coindex: float
    m1: float
    m1_coindex: float
    m2: float
    m2_coindex: float
    f: float
    f_coindex: float

    def as_dict(self) -> dict[str, float]:
        return asdict(self)


def _radius(a: int, b: int) -> float:
    return math.sqrt(a * a + b * b)


def sombor_index(g: Graph) -> float:
    d = g.degrees
    total = 0.0
    for u, v in g.edges():
        total += _radius(d[u], d[v])
    return total


def sombor_coindex(g: Graph) -> float:
    d = g.degrees
    total = 0.0
    for u, v in g.non_edges():
        total += _radius(d[u], d[v])
    return total


def first_zagreb(g: Graph) -> float:
    return float(sum(x * x for x in g.degrees))


def second_zagreb(g: Graph) -> float:
    d = g.degrees
    return float(sum(d[u] * d[v] for u, v in g.edges()))


def first_zagreb_coindex(g: Graph) -> float:
    d = g.degrees
    return float(sum(d[u] + d[v] for u, v in g.non_edges()))


def second_zagreb_coindex(g: Graph) -> float:
    d = g.degrees
    return float(sum(d[u] * d[v] for u, v in g.non_edges()))


def forgotten_index(g: Graph) -> float:
    return float(sum(x**3 for x in g.degrees))


def forgotten_coindex(g: Graph) -> float:
    d = g.degrees
    return float(sum(d[u] ** 2 + d[v] ** 2 for u, v in g.non_edges()))


def general_first_zagreb(g: Graph, p: float) -> float:
    """Sum of d(u)**p. Raises IndexDomainError for p <= 0 when a vertex is isolated."""
    if p <= 0 and 0 in g.degrees:
        raise IndexDomainError(f"0**{p} is undefined; graph has an isolated vertex")
    return math.fsum(float(x) ** p for x in g.degrees)


def compute_all(g: Graph) -> IndexVector:
    d = g.degrees
    so = so_co = 0.0
    m2 = m1_co = m2_co = f_co = 0
    for u, v in g.edges():
        so += _radius(d[u], d[v])
        m2 += d[u] * d[v]
    for u, v in g.non_edges():
        so_co += _radius(d[u], d[v])
        m1_co += d[u] + d[v]
        m2_co += d[u] * d[v]
        f_co += d[u] ** 2 + d[v] ** 2
    return IndexVector(
        so=so,
        so_coindex=so_co,
        m1=float(sum(x * x for x in d)),
        m1_coindex=float(m1_co),
        m2=float(m2),
        m2_coindex=float(m2_co),
        f=float(sum(x**3 for x in d)),
        f_coindex=float(f_co),
    )
