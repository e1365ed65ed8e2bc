"""Vectorised evaluation over whole blocks of the labeled enumeration.

A block is a contiguous range of edge-subset counters for one vertex count.
Pair k of :func:`sombor.graph.pair_list` is present iff bit k of the counter
is set, so a block becomes a boolean (graphs x pairs) matrix and every index
is a masked row sum. Blocks are independent; with ``workers > 1`` they are
farmed out to processes and merged back in counter order.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterator, Sequence

import numpy as np

from .bounds import SINGLE_GRAPH_THEOREMS, TheoremId, judge
from .graph import Graph, check_enumeration_n, count_labeled_graphs, graph_from_counter, pair_list

BLOCK = 1 << 16
SCREEN_TOL = 1e-6
MONOTONE_GUARD = 1e-12


@dataclass
class BlockQuantities:
    """Per-graph quantities for one block; attribute names match bounds.Quantities."""

    n: int
    counters: np.ndarray
    degrees: np.ndarray  # (graphs, n)
    m: np.ndarray
    mbar: np.ndarray
    delta: np.ndarray
    Delta: np.ndarray
    so: np.ndarray
    so_co: np.ndarray
    m1: np.ndarray
    m1_co: np.ndarray
    m2: np.ndarray
    m2_co: np.ndarray
    f: np.ndarray
    f_co: np.ndarray
    so_comp: np.ndarray
    so_co_comp: np.ndarray
    m1_co_comp: np.ndarray
    all_pairs: np.ndarray  # sum of the Sombor term over every unordered pair

    @property
    def regular(self) -> np.ndarray:
        return self.delta == self.Delta


def block_quantities(n: int, start: int, stop: int) -> BlockQuantities:
    pairs = pair_list(n)
    npairs = len(pairs)
    counters = np.arange(start, stop, dtype=np.int64)
    shifts = np.arange(npairs, dtype=np.int64)
    present = ((counters[:, None] >> shifts) & 1).astype(bool)
    absent = ~present

    incidence = np.zeros((npairs, n), dtype=np.int64)
    for k, (u, v) in enumerate(pairs):
        incidence[k, u] = incidence[k, v] = 1
    deg = present.astype(np.int64) @ incidence

    pu = np.array([u for u, _ in pairs], dtype=np.int64)
    pv = np.array([v for _, v in pairs], dtype=np.int64)
    du, dv = deg[:, pu], deg[:, pv]
    radius = np.sqrt((du * du + dv * dv).astype(float))
    cu, cv = n - 1 - du, n - 1 - dv
    radius_c = np.sqrt((cu * cu + cv * cv).astype(float))

    m = present.sum(axis=1)
    return BlockQuantities(
        n=n,
        counters=counters,
        degrees=deg,
        m=m,
        mbar=n * (n - 1) // 2 - m,
        delta=deg.min(axis=1),
        Delta=deg.max(axis=1),
        so=(radius * present).sum(axis=1),
        so_co=(radius * absent).sum(axis=1),
        m1=(deg**2).sum(axis=1).astype(float),
        m1_co=((du + dv) * absent).sum(axis=1).astype(float),
        m2=(du * dv * present).sum(axis=1).astype(float),
        m2_co=(du * dv * absent).sum(axis=1).astype(float),
        f=(deg**3).sum(axis=1).astype(float),
        f_co=((du * du + dv * dv) * absent).sum(axis=1).astype(float),
        # complement edges are the absent pairs, its non-edges the present ones
        so_comp=(radius_c * absent).sum(axis=1),
        so_co_comp=(radius_c * present).sum(axis=1),
        m1_co_comp=((cu + cv) * present).sum(axis=1).astype(float),
        all_pairs=radius.sum(axis=1),
    )


def blocks(n: int, block: int = BLOCK) -> list[tuple[int, int, int]]:
    total = count_labeled_graphs(n)
    return [(n, s, min(s + block, total)) for s in range(0, total, block)]


def _map(fn: Callable, jobs: Sequence, workers: int) -> Iterator:
    if workers <= 1 or len(jobs) <= 1:
        return map(fn, jobs)
    pool = ProcessPoolExecutor(max_workers=workers)
    try:
        return iter(list(pool.map(fn, jobs)))
    finally:
        pool.shutdown()


@dataclass
class TheoremVerdicts:
    applicable: np.ndarray
    holds: np.ndarray
    equality: np.ndarray  # equality on every bounded side
    regular: np.ndarray


def theorem_verdicts(theorem: TheoremId, q: BlockQuantities, rel_tol: float = 1e-9) -> TheoremVerdicts:
    lower, value, upper, applicable = SINGLE_GRAPH_THEOREMS[theorem](q)
    shape = q.counters.shape
    with np.errstate(invalid="ignore", divide="ignore"):
        holds, eq_lo, eq_up = judge(lower, value, upper, rel_tol)
    applicable = np.broadcast_to(np.asarray(applicable, dtype=bool), shape)
    if lower is None:
        eq = np.broadcast_to(eq_up, shape)
    elif upper is None:
        eq = np.broadcast_to(eq_lo, shape)
    else:
        eq = eq_lo & eq_up
    return TheoremVerdicts(applicable, np.broadcast_to(holds, shape), eq, q.regular)


# ------------------------------------------------------------- audits


@dataclass
class TheoremTally:
    checked: int = 0
    held: int = 0
    equality: int = 0
    violations: int = 0
    not_applicable: int = 0
    regular_checked: int = 0
    regular_equality_misses: int = 0
    violating: list[tuple[int, int]] = field(default_factory=list)  # (n, counter)

    def add(self, other: TheoremTally) -> None:
        self.checked += other.checked
        self.held += other.held
        self.equality += other.equality
        self.violations += other.violations
        self.not_applicable += other.not_applicable
        self.regular_checked += other.regular_checked
        self.regular_equality_misses += other.regular_equality_misses
        self.violating.extend(other.violating)

    def as_dict(self) -> dict[str, int]:
        return {
            "checked": self.checked,
            "held": self.held,
            "equality": self.equality,
            "violations": self.violations,
            "not_applicable": self.not_applicable,
        }


def _tally_block(job: tuple[int, int, int, tuple[str, ...]]) -> dict[str, TheoremTally]:
    n, start, stop, names = job
    q = block_quantities(n, start, stop)
    out = {}
    for name in names:
        v = theorem_verdicts(TheoremId(name), q)
        app = v.applicable
        bad = app & ~v.holds
        reg = app & v.regular
        out[name] = TheoremTally(
            checked=int(len(q.counters)),
            held=int((app & v.holds).sum()),
            equality=int((app & v.equality).sum()),
            violations=int(bad.sum()),
            not_applicable=int((~app).sum()),
            regular_checked=int(reg.sum()),
            regular_equality_misses=int((reg & ~v.equality).sum()),
            violating=[(n, int(c)) for c in q.counters[bad]],
        )
    return out


def audit_universe(
    max_n: int,
    theorems: Sequence[TheoremId | str] | None = None,
    workers: int = 1,
    min_n: int = 1,
) -> dict[TheoremId, TheoremTally]:
    """Tally every single-graph theorem over all labeled graphs with min_n..max_n vertices."""
    check_enumeration_n(max_n)
    names = tuple(TheoremId(t).value for t in (theorems or SINGLE_GRAPH_THEOREMS))
    jobs = [(n, s, e, names) for n in range(min_n, max_n + 1) for (_, s, e) in blocks(n)]
    totals = {TheoremId(name): TheoremTally() for name in names}
    for part in _map(_tally_block, jobs, workers):
        for name, tally in part.items():
            totals[TheoremId(name)].add(tally)
    return totals


def _screen_block(job: tuple[int, int, int, str]) -> list[int]:
    n, start, stop, name = job
    q = block_quantities(n, start, stop)
    v = theorem_verdicts(TheoremId(name), q, rel_tol=-SCREEN_TOL)
    # negative tolerance: anything within SCREEN_TOL of failing is a candidate
    return [int(c) for c in q.counters[v.applicable & ~v.holds]]


def screen_candidates(theorem: TheoremId | str, n: int, workers: int = 1) -> Iterator[Graph]:
    """Graphs on n vertices that violate, or come within 1e-6 relative of violating, the theorem."""
    theorem = TheoremId(theorem)
    check_enumeration_n(n)
    if theorem is TheoremId.R_EDGE_MONOTONE:
        worst = monotonicity_scan(n).worst
        counters = np.nonzero(worst <= SCREEN_TOL)[0]
    else:
        jobs = [(n, s, e, theorem.value) for (_, s, e) in blocks(n)]
        counters = [c for part in _map(_screen_block, jobs, workers) for c in part]
    pairs = pair_list(n)
    for c in counters:
        yield graph_from_counter(n, int(c), pairs)


# ------------------------------------------------------- monotonicity


@dataclass
class MonotonicityScan:
    n: int
    coindex: np.ndarray  # coindex of every labeled graph, indexed by counter
    margins: np.ndarray  # (graphs, pairs): positive when the toggle moves the coindex the expected way
    worst: np.ndarray

    def violations(self, guard: float = MONOTONE_GUARD) -> np.ndarray:
        """(counter, pair) cells where the coindex moves the wrong way."""
        return np.argwhere(self.margins < -guard)

    def flagged(self, guard: float = MONOTONE_GUARD) -> np.ndarray:
        """(counter, pair) cells where the change is zero within the guard band."""
        return np.argwhere(np.abs(self.margins) <= guard)

    def degenerate(self) -> np.ndarray:
        """(counter, pair) cells where the coindex is exactly 0 before and after the toggle."""
        c = np.arange(len(self.coindex))
        npairs = self.margins.shape[1]
        toggled = c[:, None] ^ (1 << np.arange(npairs))
        both_zero = (self.coindex[:, None] == 0) & (self.coindex[toggled] == 0)
        return np.argwhere(both_zero)


def coindex_table(n: int) -> np.ndarray:
    parts = [block_quantities(n, s, e).so_co for (_, s, e) in blocks(n)]
    return np.concatenate(parts) if parts else np.zeros(0)


def monotonicity_scan(n: int) -> MonotonicityScan:
    """Margins for every (graph, pair) on n vertices, using the counter table.

    Toggling pair k maps counter c to c ^ (1 << k), so the coindex after any
    single edge change is just another entry of the same table.
    """
    check_enumeration_n(n)
    so_co = coindex_table(n)
    npairs = n * (n - 1) // 2
    c = np.arange(len(so_co), dtype=np.int64)
    bit = 1 << np.arange(npairs, dtype=np.int64)
    other = so_co[c[:, None] ^ bit]
    has = (c[:, None] & bit) != 0
    margins = np.where(has, other - so_co[:, None], so_co[:, None] - other)
    worst = margins.min(axis=1) if npairs else np.full(len(c), math.inf)
    return MonotonicityScan(n, so_co, margins, worst)
