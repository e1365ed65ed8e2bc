"""Tally every single-graph theorem over all labeled graphs up to a vertex cap.

    python3 scripts/exhaustive_audit.py --max-n 7 --workers 4 --json audit.json
"""

from __future__ import annotations

import argparse
import json
import time
from dataclasses import asdict, dataclass, field

from sombor.batch import audit_universe
from sombor.bounds import SINGLE_GRAPH_THEOREMS, TheoremId
from sombor.graph import count_labeled_graphs, graph_from_counter
from sombor.graphio import encode_graph6


@dataclass
class AuditConfig:
    max_n: int = 7
    workers: int = 1
    theorems: list[str] = field(default_factory=lambda: [t.value for t in SINGLE_GRAPH_THEOREMS])
    witnesses: int = 5
    json_path: str | None = None


def parse_args(argv=None) -> AuditConfig:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-n", type=int, default=AuditConfig.max_n)
    p.add_argument("--workers", type=int, default=AuditConfig.workers)
    p.add_argument("--theorem", action="append", dest="theorems", help="repeatable; default all")
    p.add_argument("--witnesses", type=int, default=AuditConfig.witnesses)
    p.add_argument("--json", dest="json_path")
    ns = p.parse_args(argv)
    cfg = AuditConfig(max_n=ns.max_n, workers=ns.workers, witnesses=ns.witnesses, json_path=ns.json_path)
    if ns.theorems:
        cfg.theorems = ns.theorems
    return cfg


def run(cfg: AuditConfig) -> dict:
    start = time.perf_counter()
    tallies = audit_universe(cfg.max_n, cfg.theorems, workers=cfg.workers)
    elapsed = time.perf_counter() - start
    total = sum(count_labeled_graphs(n) for n in range(1, cfg.max_n + 1))
    print(f"{total} labeled graphs on 1..{cfg.max_n} vertices, {elapsed:.1f}s\n")
    print(f"{'theorem':26} {'held':>9} {'equality':>9} {'violations':>10} {'n/a':>9} {'regular miss':>12}")
    result = {"config": asdict(cfg), "graphs": total, "seconds": elapsed, "theorems": {}}
    for name in cfg.theorems:
        t = tallies[TheoremId(name)]
        print(f"{name:26} {t.held:9d} {t.equality:9d} {t.violations:10d} {t.not_applicable:9d} {t.regular_equality_misses:12d}")
        shown = [encode_graph6(graph_from_counter(n, c)) for n, c in t.violating[: cfg.witnesses]]
        if shown:
            print(f"{'':26} e.g. {' '.join(shown)}")
        result["theorems"][name] = {**t.as_dict(), "regular_equality_misses": t.regular_equality_misses,
                                    "witnesses": shown}
    return result


def main(argv=None) -> None:
    cfg = parse_args(argv)
    result = run(cfg)
    if cfg.json_path:
        with open(cfg.json_path, "w", encoding="utf-8") as fh:
            json.dump(result, fh, indent=2)


if __name__ == "__main__":
    main()
