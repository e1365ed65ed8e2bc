"""Evaluate both sides of each inequality on concrete graphs and hunt for violations.

Inequalities are checked as printed. A theorem that fails is reported through
``holds=False``; nothing here repairs a statement.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator

from .bounds import (
    NOT_APPLICABLE_REASON,
    PAIR_THEOREMS,
    SINGLE_GRAPH_THEOREMS,
    SQRT2,
    Quantities,
    TheoremId,
    judge,
)
from .errors import EnumerationCapError
from .graph import (
    Graph,
    cartesian_product,
    check_enumeration_n,
    composition,
    degree_stats,
    enumerate_labeled_graphs,
    graph_join,
    graph_union,
)
from .graphio import encode_graph6
from .invariants import sombor_coindex

MONOTONE_GUARD = 1e-12
MAX_PAIR_N = 4


@dataclass(frozen=True)
class BoundRecord:
    theorem: TheoremId
    lower: float | None
    value: float
    upper: float | None
    applicable: bool = True
    not_applicable_reason: str = ""
    holds: bool | None = None
    equality_lower: bool | None = None
    equality_upper: bool | None = None
    is_regular_input: bool = False
    gap_lower: float | None = None
    gap_upper: float | None = None
    note: str = ""

    @property
    def equality(self) -> bool:
        """Equality on every side the theorem bounds."""
        if not self.applicable:
            return False
        flags = []
        if self.lower is not None:
            flags.append(self.equality_lower)
        if self.upper is not None:
            flags.append(self.equality_upper)
        return bool(flags) and all(flags)

    @property
    def violated(self) -> bool:
        return self.applicable and self.holds is False

    def as_dict(self) -> dict:
        return {
            "theorem": self.theorem.value,
            "lower": self.lower,
            "value": self.value,
            "upper": self.upper,
            "applicable": self.applicable,
            "not_applicable_reason": self.not_applicable_reason,
            "holds": self.holds,
            "equality_lower": self.equality_lower,
            "equality_upper": self.equality_upper,
            "is_regular_input": self.is_regular_input,
            "gap_lower": self.gap_lower,
            "gap_upper": self.gap_upper,
            "note": self.note,
        }


@dataclass(frozen=True)
class AuditReport:
    graph_id: str
    records: tuple[BoundRecord, ...]
    operands: tuple[str, ...] = ()

    @property
    def violations(self) -> tuple[BoundRecord, ...]:
        return tuple(r for r in self.records if r.violated)

    def record(self, theorem: TheoremId | str) -> BoundRecord:
        theorem = TheoremId(theorem)
        for r in self.records:
            if r.theorem is theorem:
                return r
        raise KeyError(theorem.value)


def _opt(x) -> float | None:
    return None if x is None else float(x)


def make_record(theorem: TheoremId, lower, value, upper, applicable=True, *, regular=False, reason="", note=""):
    lower, value, upper = _opt(lower), float(value), _opt(upper)
    if not applicable:
        return BoundRecord(
            theorem, lower, value, upper, applicable=False,
            not_applicable_reason=reason or "not applicable", is_regular_input=regular, note=note,
        )
    holds, eq_lo, eq_up = judge(lower, value, upper)
    return BoundRecord(
        theorem,
        lower,
        value,
        upper,
        holds=bool(holds),
        equality_lower=bool(eq_lo) if lower is not None else None,
        equality_upper=bool(eq_up) if upper is not None else None,
        is_regular_input=regular,
        gap_lower=None if lower is None else value - lower,
        gap_upper=None if upper is None else upper - value,
        note=note,
    )


def _evaluate(theorem: TheoremId, g: Graph, q: Quantities | None = None) -> BoundRecord:
    q = q or Quantities.of(g)
    lower, value, upper, applicable = SINGLE_GRAPH_THEOREMS[theorem](q)
    return make_record(
        theorem, lower, value, upper, bool(applicable),
        regular=q.delta == q.Delta, reason=NOT_APPLICABLE_REASON.get(theorem, ""),
    )


def eval_degree_bounds(g: Graph) -> BoundRecord:
    return _evaluate(TheoremId.T_DEGREE_BOUNDS, g)


def eval_m1bar_bound(g: Graph) -> BoundRecord:
    return _evaluate(TheoremId.T_M1BAR_BOUND, g)


def eval_m1bar_corollary(g: Graph) -> BoundRecord:
    return _evaluate(TheoremId.T_M1BAR_COROLLARY, g)


def eval_so_plus_coso(g: Graph) -> BoundRecord:
    return _evaluate(TheoremId.T_SO_PLUS_COSO, g)


def eval_sobar_complement_pair(g: Graph) -> BoundRecord:
    return _evaluate(TheoremId.T_SOBAR_COMPLEMENT_PAIR, g)


def eval_selfcomp_sum(g: Graph) -> BoundRecord:
    return _evaluate(TheoremId.T_SELFCOMP_SUM, g)


def eval_cs_fbar_upper(g: Graph) -> BoundRecord:
    return _evaluate(TheoremId.T_CS_FBAR_UPPER, g)


def eval_ps_fbar_lower(g: Graph) -> BoundRecord:
    return _evaluate(TheoremId.T_PS_FBAR_LOWER, g)


def eval_ps_m1bar_lower(g: Graph) -> BoundRecord:
    return _evaluate(TheoremId.T_PS_M1BAR_LOWER, g)


def eval_m2bar_upper(g: Graph) -> BoundRecord:
    return _evaluate(TheoremId.T_M2BAR_UPPER, g)


# ------------------------------------------------------------ operations


def eval_union_bounds(g1: Graph, g2: Graph) -> BoundRecord:
    s1, s2 = degree_stats(g1), degree_stats(g2)
    base = sombor_coindex(g1) + sombor_coindex(g2)
    cross = g1.n * g2.n
    lower = base + cross * math.hypot(s1.min_degree, s2.min_degree)
    upper = base + cross * math.hypot(s1.max_degree, s2.max_degree)
    value = sombor_coindex(graph_union(g1, g2))
    return make_record(TheoremId.T_UNION_BOUNDS, lower, value, upper,
                       regular=s1.is_regular and s2.is_regular)


def eval_join_bounds(g1: Graph, g2: Graph) -> BoundRecord:
    s1, s2 = degree_stats(g1), degree_stats(g2)
    n1, n2 = g1.n, g2.n
    lower = SQRT2 * (s1.coedge_count * (s1.min_degree + n2) + s2.coedge_count * (s2.min_degree + n1))
    upper = SQRT2 * (s1.coedge_count * (s1.max_degree + n2) + s2.coedge_count * (s2.max_degree + n1))
    value = sombor_coindex(graph_join(g1, g2))
    return make_record(TheoremId.T_JOIN_BOUNDS, lower, value, upper,
                       regular=s1.is_regular and s2.is_regular)


def eval_cartesian_bounds(g1: Graph, g2: Graph) -> BoundRecord:
    s1, s2 = degree_stats(g1), degree_stats(g2)
    n1, n2, m1, m2 = g1.n, g2.n, s1.edge_count, s2.edge_count
    mbar = math.comb(n1 * n2, 2) - n1 * m2 - m1 * n2
    lower = mbar * SQRT2 * (s1.min_degree + s2.min_degree)
    upper = mbar * SQRT2 * (s1.max_degree + s2.max_degree)
    value = sombor_coindex(cartesian_product(g1, g2))
    return make_record(TheoremId.T_CARTESIAN_BOUNDS, lower, value, upper,
                       regular=s1.is_regular and s2.is_regular)


def eval_composition_bounds(g1: Graph, g2: Graph) -> BoundRecord:
    s1, s2 = degree_stats(g1), degree_stats(g2)
    n1, n2, m1, m2 = g1.n, g2.n, s1.edge_count, s2.edge_count
    mbar = math.comb(n1 * n2, 2) - n1 * m2 - m1 * n2 * n2
    lower = mbar * SQRT2 * (n2 * s1.min_degree + s2.min_degree)
    upper = mbar * SQRT2 * (n2 * s1.max_degree + s2.max_degree)
    value = sombor_coindex(composition(g1, g2))
    return make_record(TheoremId.T_COMPOSITION_BOUNDS, lower, value, upper,
                       regular=s1.is_regular and s2.is_regular)


PAIR_EVALUATORS = {
    TheoremId.T_UNION_BOUNDS: (eval_union_bounds, graph_union),
    TheoremId.T_JOIN_BOUNDS: (eval_join_bounds, graph_join),
    TheoremId.T_CARTESIAN_BOUNDS: (eval_cartesian_bounds, cartesian_product),
    TheoremId.T_COMPOSITION_BOUNDS: (eval_composition_bounds, composition),
}


def union_decomposition(g1: Graph, g2: Graph) -> float:
    """Coindex of the disjoint union from operand data alone: both coindices
    plus every cross pair, with each endpoint keeping its own degree."""
    cross = sum(math.hypot(a, b) for a in g1.degrees for b in g2.degrees)
    return sombor_coindex(g1) + sombor_coindex(g2) + cross


def join_decomposition(g1: Graph, g2: Graph) -> float:
    """Coindex of the join from operand data alone. Cross pairs are all
    adjacent, so only non-edges inside each operand count, with every degree
    raised by the other operand's order."""
    d1, d2 = g1.degrees, g2.degrees
    total = sum(math.hypot(d1[u] + g2.n, d1[v] + g2.n) for u, v in g1.non_edges())
    total += sum(math.hypot(d2[u] + g1.n, d2[v] + g1.n) for u, v in g2.non_edges())
    return total


# ---------------------------------------------------------- monotonicity


def _toggle(g: Graph, u: int, v: int) -> Graph:
    rows = list(g.rows)
    rows[u] ^= 1 << v
    rows[v] ^= 1 << u
    return Graph(g.n, tuple(rows))


def eval_edge_monotonicity(g: Graph) -> BoundRecord:
    """Deleting an edge should raise the coindex and adding one should lower it.

    ``value`` is the worst margin over all pairs: coindex(g - e) - coindex(g)
    for edges, coindex(g) - coindex(g + e) for non-edges. ``holds`` allows a
    1e-12 guard band; ``equality_lower`` flags margins inside it, i.e. places
    where strictness fails.
    """
    th = TheoremId.R_EDGE_MONOTONE
    if g.n < 2:
        return BoundRecord(th, 0.0, 0.0, None, applicable=False, not_applicable_reason="no vertex pairs")
    base = sombor_coindex(g)
    worst = math.inf
    note = ""
    for u in range(g.n):
        for v in range(u + 1, g.n):
            other = sombor_coindex(_toggle(g, u, v))
            if g.has_edge(u, v):
                margin, kind = other - base, "remove"
            else:
                margin, kind = base - other, "add"
            if margin < worst:
                worst = margin
                note = f"{kind} ({u},{v}): {base:.12g} -> {other:.12g}"
    return BoundRecord(
        th,
        0.0,
        worst,
        None,
        holds=worst > -MONOTONE_GUARD,
        equality_lower=abs(worst) <= MONOTONE_GUARD,
        is_regular_input=degree_stats(g).is_regular,
        gap_lower=worst,
        note=note,
    )


# ------------------------------------------------------------------ audit


def audit_graph(g: Graph, theorems: Iterable[TheoremId | str] | None = None) -> AuditReport:
    """Run the single-graph theorems (all ten by default) on one graph.

    R_EDGE_MONOTONE is only included when requested explicitly.
    """
    q = Quantities.of(g)
    wanted = list(SINGLE_GRAPH_THEOREMS) if theorems is None else [TheoremId(t) for t in theorems]
    records = []
    for th in wanted:
        if th is TheoremId.R_EDGE_MONOTONE:
            records.append(eval_edge_monotonicity(g))
        elif th in SINGLE_GRAPH_THEOREMS:
            records.append(_evaluate(th, g, q))
        else:
            raise ValueError(f"{th.value} needs two operand graphs; use audit_pair")
    return AuditReport(encode_graph6(g), tuple(records))


def audit_pair(theorem: TheoremId | str, g1: Graph, g2: Graph) -> AuditReport:
    theorem = TheoremId(theorem)
    evaluator, op = PAIR_EVALUATORS[theorem]
    rec = evaluator(g1, g2)
    return AuditReport(encode_graph6(op(g1, g2)), (rec,), (encode_graph6(g1), encode_graph6(g2)))


def labeled_universe(max_n: int) -> Iterator[Graph]:
    for n in range(1, max_n + 1):
        yield from enumerate_labeled_graphs(n)


def pair_universe(max_n: int = MAX_PAIR_N) -> Iterator[tuple[Graph, Graph]]:
    """Ordered pairs of labeled graphs with both orders <= max_n."""
    if not 1 <= max_n <= MAX_PAIR_N:
        raise EnumerationCapError(f"pair audits support 1 <= max_n <= {MAX_PAIR_N}, got {max_n}")
    graphs = list(labeled_universe(max_n))
    return product(graphs, repeat=2)


def find_counterexamples(theorem: TheoremId | str, max_n: int, workers: int = 1) -> list[AuditReport]:
    """Every graph (or operand pair) up to ``max_n`` vertices violating ``theorem``.

    Single-graph theorems are screened with the vectorised evaluator and each
    candidate is confirmed by the scalar evaluator, so the returned records
    are exactly the scalar verdicts. Order follows the enumeration.
    """
    theorem = TheoremId(theorem)
    if theorem in PAIR_THEOREMS:
        out = []
        for g1, g2 in pair_universe(max_n):
            rep = audit_pair(theorem, g1, g2)
            if rep.violations:
                out.append(rep)
        return out

    check_enumeration_n(max_n)
    from .batch import screen_candidates  # numpy path; kept lazy for import speed

    out = []
    for n in range(1, max_n + 1):
        for g in screen_candidates(theorem, n, workers=workers):
            rep = audit_graph(g, [theorem])
            if rep.violations:
                out.append(rep)
    return out


def regular_equality_misses(records: Iterable[BoundRecord]) -> list[BoundRecord]:
    """Applicable records on regular inputs that do not attain equality."""
    return [r for r in records if r.is_regular_input and r.applicable and not r.equality]


__all__ = [
    "AuditReport",
    "BoundRecord",
    "TheoremId",
    "audit_graph",
    "audit_pair",
    "eval_cartesian_bounds",
    "eval_composition_bounds",
    "eval_cs_fbar_upper",
    "eval_degree_bounds",
    "eval_edge_monotonicity",
    "eval_join_bounds",
    "eval_m1bar_bound",
    "eval_m1bar_corollary",
    "eval_m2bar_upper",
    "eval_ps_fbar_lower",
    "eval_ps_m1bar_lower",
    "eval_selfcomp_sum",
    "eval_so_plus_coso",
    "eval_sobar_complement_pair",
    "eval_union_bounds",
    "find_counterexamples",
    "join_decomposition",
    "union_decomposition",
]
