"""Named graph families with canonical labelings."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import InvalidParameterError
from .graph import Graph, build_graph, cartesian_product, complete_graph, composition, empty_graph


class Family(str, Enum):
    EMPTY = "empty"
    COMPLETE = "complete"
    PATH = "path"
    CYCLE = "cycle"
    STAR = "star"
    COMPLETE_BIPARTITE = "complete_bipartite"
    NANOTORUS = "nanotorus"
    CLOSED_FENCE = "closed_fence"


# minimum of each parameter the family takes
_MINIMA: dict[Family, dict[str, int]] = {
    Family.EMPTY: {"n": 1},
    Family.COMPLETE: {"n": 1},
    Family.PATH: {"n": 1},
    Family.CYCLE: {"n": 3},
    Family.STAR: {"n": 2},
    Family.COMPLETE_BIPARTITE: {"p": 1, "q": 1},
    Family.NANOTORUS: {"p": 3, "q": 3},
    Family.CLOSED_FENCE: {"n": 3},
}


@dataclass(frozen=True)
class FamilySpec:
    family: Family
    n: int | None = None
    p: int | None = None
    q: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))

    @classmethod
    def of(cls, family: str | Family, *params: int) -> FamilySpec:
        """Positional shorthand: ``FamilySpec.of("cycle", 5)``, ``FamilySpec.of("nanotorus", 3, 4)``."""
        family = Family(family)
        names = list(_MINIMA[family])
        if len(params) != len(names):
            raise InvalidParameterError(
                f"{family.value} takes {len(names)} parameter(s) ({', '.join(names)}), got {len(params)}"
            )
        return cls(family, **dict(zip(names, params)))

    def validate(self) -> None:
        for name, lo in _MINIMA[self.family].items():
            value = getattr(self, name)
            if value is None:
                raise InvalidParameterError(f"{self.family.value} requires parameter {name}")
            if value < lo:
                raise InvalidParameterError(
                    f"{self.family.value} requires {name} >= {lo}, got {name}={value}"
                )

    @property
    def params(self) -> tuple[int, ...]:
        return tuple(getattr(self, name) for name in _MINIMA[self.family])

    def label(self) -> str:
        return f"{self.family.value}({', '.join(map(str, self.params))})"


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(n: int) -> Graph:
    """S_n = K_{1,n-1} with center 0."""
    return build_graph(n, [(0, i) for i in range(1, n)])


def complete_bipartite_graph(p: int, q: int) -> Graph:
    return build_graph(p + q, [(i, p + j) for i in range(p) for j in range(q)])


def generate_family(spec: FamilySpec) -> Graph:
    spec.validate()
    f = spec.family
    if f is Family.EMPTY:
        return empty_graph(spec.n)
    if f is Family.COMPLETE:
        return complete_graph(spec.n)
    if f is Family.PATH:
        return path_graph(spec.n)
    if f is Family.CYCLE:
        return cycle_graph(spec.n)
    if f is Family.STAR:
        return star_graph(spec.n)
    if f is Family.COMPLETE_BIPARTITE:
        return complete_bipartite_graph(spec.p, spec.q)
    if f is Family.NANOTORUS:
        return cartesian_product(cycle_graph(spec.p), cycle_graph(spec.q))
    if f is Family.CLOSED_FENCE:
        return composition(cycle_graph(spec.n), complete_graph(2))
    raise AssertionError(f)
