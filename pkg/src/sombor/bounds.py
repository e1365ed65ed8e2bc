"""Both sides of each single-graph inequality, written once for scalars and arrays.

Every formula takes an object exposing the per-graph quantities of
:class:`Quantities` (plain numbers for one graph, numpy arrays for a batch)
and returns ``(lower, value, upper, applicable)``. A side that the theorem
does not bound is ``None``. ``applicable`` is ``True`` or a boolean mask.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Any, Callable

import numpy as np

from .graph import Graph, complement
from .invariants import compute_all, sombor_coindex, sombor_index

SQRT2 = np.sqrt(2.0)
REL_TOL = 1e-9


class TheoremId(str, Enum):
    T_DEGREE_BOUNDS = "T_DEGREE_BOUNDS"
    T_M1BAR_BOUND = "T_M1BAR_BOUND"
    T_M1BAR_COROLLARY = "T_M1BAR_COROLLARY"
    T_SO_PLUS_COSO = "T_SO_PLUS_COSO"
    T_SOBAR_COMPLEMENT_PAIR = "T_SOBAR_COMPLEMENT_PAIR"
    T_SELFCOMP_SUM = "T_SELFCOMP_SUM"
    T_CS_FBAR_UPPER = "T_CS_FBAR_UPPER"
    T_PS_FBAR_LOWER = "T_PS_FBAR_LOWER"
    T_PS_M1BAR_LOWER = "T_PS_M1BAR_LOWER"
    T_M2BAR_UPPER = "T_M2BAR_UPPER"
    T_UNION_BOUNDS = "T_UNION_BOUNDS"
    T_JOIN_BOUNDS = "T_JOIN_BOUNDS"
    T_CARTESIAN_BOUNDS = "T_CARTESIAN_BOUNDS"
    T_COMPOSITION_BOUNDS = "T_COMPOSITION_BOUNDS"
    R_EDGE_MONOTONE = "R_EDGE_MONOTONE"


@dataclass(frozen=True)
class Quantities:
    """Everything the single-graph theorems read, for one graph."""

    n: int
    m: int
    mbar: int
    delta: int
    Delta: int
    so: float
    so_co: float
    m1: float
    m1_co: float
    m2_co: float
    f_co: float
    so_comp: float  # SO of the complement
    so_co_comp: float  # coindex of the complement

    @classmethod
    def of(cls, g: Graph) -> Quantities:
        iv = compute_all(g)
        gc = complement(g)
        d = g.degrees
        return cls(
            n=g.n,
            m=g.m,
            mbar=g.mbar,
            delta=min(d),
            Delta=max(d),
            so=iv.so,
            so_co=iv.so_coindex,
            m1=iv.m1,
            m1_co=iv.m1_coindex,
            m2_co=iv.m2_coindex,
            f_co=iv.f_coindex,
            so_comp=sombor_index(gc),
            so_co_comp=sombor_coindex(gc),
        )


def tolerance(value: Any, bound: Any, rel_tol: float = REL_TOL) -> Any:
    return rel_tol * np.maximum(1.0, np.maximum(np.abs(value), np.abs(bound)))


def _positive(x: Any) -> Any:
    # divisor for formulas that are only applicable when the minimum degree is positive
    return np.maximum(x, 1)


def degree_bounds(q):
    lower = q.delta * q.n * (q.n - 1 - q.Delta) / SQRT2
    upper = q.Delta * q.n * (q.n - 1 - q.delta) / SQRT2
    return lower, q.so_co, upper, True


def m1bar_bound(q):
    return None, q.so_co, q.m1_co - (2 - SQRT2) * q.delta * q.mbar, True


def m1bar_corollary(q):
    upper = 2 * q.m * (q.n - 1) - q.m1 - (1 - 1 / SQRT2) * (q.n * (q.n - 1) - 2 * q.m) * q.delta
    return None, q.so_co, upper, True


def so_plus_coso(q):
    return None, q.so + q.so_co, q.n * (q.n - 1) * q.Delta / SQRT2, True


def sobar_complement_pair(q):
    return None, q.so_comp + q.so_co, q.mbar * (q.n - 1 + q.Delta - q.delta) * SQRT2, True


def selfcomp_sum(q):
    upper = 2 * q.m1_co - (2 - SQRT2) * q.delta * (q.n * (q.n - 1) // 2)
    return None, q.so_co + q.so_co_comp, upper, True


def cs_fbar_upper(q):
    return None, q.so_co, np.sqrt(q.mbar * q.f_co), True


def ps_fbar_lower(q):
    d, D = _positive(q.delta), _positive(q.Delta)
    value = 0.5 * (d / D + D / d) * q.so_co
    return np.sqrt(q.mbar * q.f_co), value, None, q.delta > 0


def ps_m1bar_lower(q):
    d = _positive(q.delta)
    value = (1 + q.Delta / d) * q.so_co
    return 2 * np.sqrt(q.mbar * q.Delta * q.m1_co), value, None, q.delta > 0


def m2bar_upper(q):
    d, D = _positive(q.delta), _positive(q.Delta)
    return None, q.so_co, np.sqrt((d / D + D / d) * q.mbar * q.m2_co), q.delta > 0


SINGLE_GRAPH_THEOREMS: dict[TheoremId, Callable] = {
    TheoremId.T_DEGREE_BOUNDS: degree_bounds,
    TheoremId.T_M1BAR_BOUND: m1bar_bound,
    TheoremId.T_M1BAR_COROLLARY: m1bar_corollary,
    TheoremId.T_SO_PLUS_COSO: so_plus_coso,
    TheoremId.T_SOBAR_COMPLEMENT_PAIR: sobar_complement_pair,
    TheoremId.T_SELFCOMP_SUM: selfcomp_sum,
    TheoremId.T_CS_FBAR_UPPER: cs_fbar_upper,
    TheoremId.T_PS_FBAR_LOWER: ps_fbar_lower,
    TheoremId.T_PS_M1BAR_LOWER: ps_m1bar_lower,
    TheoremId.T_M2BAR_UPPER: m2bar_upper,
}

PAIR_THEOREMS = (
    TheoremId.T_UNION_BOUNDS,
    TheoremId.T_JOIN_BOUNDS,
    TheoremId.T_CARTESIAN_BOUNDS,
    TheoremId.T_COMPOSITION_BOUNDS,
)

# theorems stated with "equality holds if G is a regular graph" that survive audit
REGULAR_EQUALITY_THEOREMS = (
    TheoremId.T_DEGREE_BOUNDS,
    TheoremId.T_M1BAR_BOUND,
    TheoremId.T_SO_PLUS_COSO,
    TheoremId.T_SOBAR_COMPLEMENT_PAIR,
    TheoremId.T_CS_FBAR_UPPER,
    TheoremId.T_PS_FBAR_LOWER,
    TheoremId.T_PS_M1BAR_LOWER,
    TheoremId.T_M2BAR_UPPER,
)

NOT_APPLICABLE_REASON = {
    TheoremId.T_PS_FBAR_LOWER: "δ = 0",
    TheoremId.T_PS_M1BAR_LOWER: "δ = 0",
    TheoremId.T_M2BAR_UPPER: "δ = 0",
}


def judge(lower, value, upper, rel_tol: float = REL_TOL):
    """Vectorisable verdict: (holds, equality_lower, equality_upper).

    Both the slack and the equality test use rel_tol * max(1, |value|, |bound|).
    """
    holds = True
    eq_lo = eq_up = False
    if lower is not None:
        t = tolerance(value, lower, rel_tol)
        holds = np.logical_and(holds, lower <= value + t)
        eq_lo = np.abs(value - lower) <= t
    if upper is not None:
        t = tolerance(value, upper, rel_tol)
        holds = np.logical_and(holds, value <= upper + t)
        eq_up = np.abs(value - upper) <= t
    return holds, eq_lo, eq_up
