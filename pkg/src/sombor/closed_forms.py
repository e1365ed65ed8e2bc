"""Published closed forms for the named families.

``Variant.AS_PUBLISHED`` reproduces the printed formula; ``Variant.CORRECTED``
is the value brute force agrees with. They differ only for the closed fence,
where the printed formula carries an extra constant 20*sqrt(2).
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from enum import Enum

from .errors import InvalidParameterError, NoClosedFormError
from .families import Family, FamilySpec

SQRT2 = math.sqrt(2.0)
SQRT5 = math.sqrt(5.0)
FENCE_ERRATUM = 20 * SQRT2


class Variant(str, Enum):
    AS_PUBLISHED = "as_published"
    CORRECTED = "corrected"


@dataclass(frozen=True)
class ClosedFormResult:
    value: float
    variant: Variant
    applicable: bool = True
    note: str = ""


class NonGraphicalWarning(RuntimeWarning):
    """n*r is odd, so no r-regular graph on n vertices exists."""


def closed_sombor_index(spec: FamilySpec) -> float:
    spec.validate()
    f = spec.family
    if f is Family.EMPTY:
        return 0.0
    if f is Family.COMPLETE:
        n = spec.n
        return n * (n - 1) ** 2 / SQRT2
    if f is Family.CYCLE:
        return 2 * SQRT2 * spec.n
    if f is Family.PATH:
        n = spec.n
        if n == 1:
            return 0.0
        if n == 2:
            return SQRT2
        return 2 * (n - 3) * SQRT2 + 2 * SQRT5
    raise NoClosedFormError(f"no closed Sombor index formula for {f.value}")


def closed_sombor_coindex(spec: FamilySpec, variant: Variant | str = Variant.CORRECTED) -> ClosedFormResult:
    spec.validate()
    variant = Variant(variant)
    f = spec.family
    note = ""
    if f in (Family.EMPTY, Family.COMPLETE):
        value = 0.0
    elif f is Family.CYCLE:
        n = spec.n
        value = n * (n - 3) * SQRT2
    elif f is Family.PATH:
        n = spec.n
        # P_1 has no pairs and P_2 = K_2 has no non-edges
        value = 0.0 if n < 3 else ((n - 4) * (n - 3) + 1) * SQRT2 + 2 * (n - 3) * SQRT5
    elif f is Family.STAR:
        n = spec.n
        value = (n - 1) * (n - 2) / SQRT2
    elif f is Family.COMPLETE_BIPARTITE:
        p, q = spec.p, spec.q
        value = p * q * (p + q - 2) / SQRT2
    elif f is Family.NANOTORUS:
        pq = spec.p * spec.q
        value = 2 * pq * (pq - 5) * SQRT2
    elif f is Family.CLOSED_FENCE:
        n = spec.n
        if variant is Variant.AS_PUBLISHED:
            value = 5 * (2 * n * (n - 3) + 4) * SQRT2
        else:
            value = 10 * SQRT2 * n * (n - 3)
        note = "published fence formula exceeds the brute-force value by 20*sqrt(2)"
    else:
        raise NoClosedFormError(f"no closed Sombor coindex formula for {f.value}")
    return ClosedFormResult(value=value, variant=variant, applicable=True, note=note)


def regular_coindex(n: int, r: int) -> float:
    """Coindex of any r-regular graph on n vertices: n*r*(n-1-r)/sqrt(2)."""
    if n < 1:
        raise InvalidParameterError(f"n must be >= 1, got {n}")
    if not 0 <= r <= n - 1:
        raise InvalidParameterError(f"degree r={r} outside 0..{n - 1}")
    if (n * r) % 2:
        warnings.warn(f"no {r}-regular graph on {n} vertices exists (n*r odd)", NonGraphicalWarning, stacklevel=2)
    return n * r * (n - 1 - r) / SQRT2
