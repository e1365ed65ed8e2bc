"""Where the self-complement sum bound breaks on regular graphs.

For an r-regular graph on n vertices both sides have closed forms, and the
bound holds exactly when 2r <= n - 1. This script checks that rule against
the exhaustive counterexample search.
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from sombor.audit import find_counterexamples
from sombor.bounds import TheoremId
from sombor.graphio import parse_graph6


@dataclass
class SelfCompConfig:
    max_n: int = 6


def main(argv=None) -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-n", type=int, default=SelfCompConfig.max_n)
    cfg = SelfCompConfig(**vars(p.parse_args(argv)))

    reps = find_counterexamples(TheoremId.T_SELFCOMP_SUM, cfg.max_n)
    by_n: dict[int, list] = {}
    for rep in reps:
        g = parse_graph6(rep.graph_id)
        by_n.setdefault(g.n, []).append(g)
    mismatches = 0
    print(f"{'n':>2} {'violations':>10} {'regular':>8}  regular degrees violating")
    for n in range(1, cfg.max_n + 1):
        graphs = by_n.get(n, [])
        reg = sorted({g.degrees[0] for g in graphs if min(g.degrees) == max(g.degrees)})
        predicted = [r for r in range(n) if 2 * r > n - 1 and n * r % 2 == 0]
        mismatches += reg != predicted
        print(f"{n:2d} {len(graphs):10d} {sum(min(g.degrees) == max(g.degrees) for g in graphs):8d}  {reg}")
    print("rule 2r > n-1 matches" if not mismatches else f"rule mismatches on {mismatches} vertex counts")


if __name__ == "__main__":
    main()
