"""Command-line front end.

    sombor compute   [--input FILE] [--format graph6|edgelist] [--output-format json_lines|csv]
    sombor family    --name NAME [--n N | --p P --q Q] [--variant as_published|corrected]
    sombor ops       --op union|join|cartesian|composition [G1 G2 | --input FILE]
    sombor audit     [--theorem ID|all] [--enumerate-max-n N | --input FILE] [--strict]
    sombor enumerate --n N | --max-n N

Data goes to stdout, diagnostics and audit summaries to stderr.
Exit status: 0 ok, 1 violations under --strict, 2 bad input or parameters, 3 I/O error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence, TextIO

from . import __version__
from .audit import (
    PAIR_EVALUATORS,
    AuditReport,
    MAX_PAIR_N,
    audit_graph,
    audit_pair,
    find_counterexamples,
    pair_universe,
)
from .batch import audit_universe, monotonicity_scan
from .bounds import PAIR_THEOREMS, SINGLE_GRAPH_THEOREMS, TheoremId
from .closed_forms import Variant, closed_sombor_coindex, closed_sombor_index
from .errors import EnumerationCapError, NoClosedFormError, SomborError
from .families import Family, FamilySpec, generate_family
from .graph import check_enumeration_n, enumerate_labeled_graphs
from .graphio import encode_graph6, parse_graph6, read_graphs, write_reports
from .invariants import compute_all

EXIT_OK, EXIT_VIOLATIONS, EXIT_INPUT, EXIT_IO = 0, 1, 2, 3

OPS = {
    "union": TheoremId.T_UNION_BOUNDS,
    "join": TheoremId.T_JOIN_BOUNDS,
    "cartesian": TheoremId.T_CARTESIAN_BOUNDS,
    "composition": TheoremId.T_COMPOSITION_BOUNDS,
}


class CliError(Exception):
    def __init__(self, message: str, status: int):
        super().__init__(message)
        self.status = status


def _read_input(path: str, stdin: TextIO) -> str:
    if path == "-":
        return stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror or exc}", EXIT_IO) from exc


def _graphs(args, stdin):
    text = _read_input(args.input, stdin)
    return list(read_graphs(text, args.format))


def _emit(items, args, out: TextIO) -> None:
    out.write(write_reports(items, args.output_format))


# ---------------------------------------------------------------- compute


def cmd_compute(args, stdin, out, err) -> int:
    docs = _graphs(args, stdin)
    _emit([(encode_graph6(d.graph), compute_all(d.graph)) for d in docs], args, out)
    return EXIT_OK


# ----------------------------------------------------------------- family


def _family_spec(args) -> FamilySpec:
    try:
        family = Family(args.name)
    except ValueError:
        raise CliError(f"unknown family {args.name!r}", EXIT_INPUT) from None
    if family in (Family.COMPLETE_BIPARTITE, Family.NANOTORUS):
        return FamilySpec(family, p=args.p, q=args.q)
    return FamilySpec(family, n=args.n)


def family_row(spec: FamilySpec, variant: Variant) -> dict:
    g = generate_family(spec)
    iv = compute_all(g)
    closed = closed_sombor_coindex(spec, variant)
    try:
        closed_so = closed_sombor_index(spec)
    except NoClosedFormError:
        closed_so = None
    diff = abs(closed.value - iv.so_coindex)
    diff_so = None if closed_so is None else abs(closed_so - iv.so)
    scale = max(1.0, abs(closed.value), abs(iv.so_coindex))
    ok = diff <= 1e-9 * scale and (diff_so is None or diff_so <= 1e-9 * max(1.0, abs(iv.so)))
    return {
        "family": spec.family.value,
        "params": " ".join(map(str, spec.params)),
        "graph_id": encode_graph6(g),
        "n": g.n,
        "m": g.m,
        **iv.as_dict(),
        "variant": closed.variant.value,
        "closed_so_coindex": closed.value,
        "closed_so": closed_so,
        "diff_so_coindex": diff,
        "diff_so": diff_so,
        "status": "OK" if ok else "ERRATUM",
        "note": closed.note,
    }


def cmd_family(args, stdin, out, err) -> int:
    row = family_row(_family_spec(args), Variant(args.variant))
    if row["status"] != "OK":
        err.write(
            f"ERRATUM: closed form {row['closed_so_coindex']:.12g} vs computed "
            f"{row['so_coindex']:.12g} for {row['family']}({row['params']})\n"
        )
    _emit([row], args, out)
    return EXIT_OK


# -------------------------------------------------------------------- ops


def cmd_ops(args, stdin, out, err) -> int:
    if args.graphs:
        if len(args.graphs) != 2:
            raise CliError("ops needs exactly two graph6 operands", EXIT_INPUT)
        g1, g2 = (parse_graph6(s) for s in args.graphs)
    else:
        docs = _graphs(args, stdin)
        if len(docs) != 2:
            raise CliError(f"ops needs exactly two input graphs, got {len(docs)}", EXIT_INPUT)
        g1, g2 = docs[0].graph, docs[1].graph
    theorem = OPS[args.op]
    evaluator, op = PAIR_EVALUATORS[theorem]
    result = op(g1, g2)
    rec = evaluator(g1, g2)
    row = {
        "op": args.op,
        "g1": encode_graph6(g1),
        "g2": encode_graph6(g2),
        "graph_id": encode_graph6(result),
        "n": result.n,
        "m": result.m,
        "so_coindex": rec.value,
        **rec.as_dict(),
    }
    _emit([row], args, out)
    return EXIT_OK


# ------------------------------------------------------------------ audit


def _selected_theorems(name: str) -> list[TheoremId]:
    if name == "all":
        return list(SINGLE_GRAPH_THEOREMS)
    try:
        return [TheoremId(name)]
    except ValueError:
        raise CliError(f"unknown theorem {name!r}", EXIT_INPUT) from None


def _summary_line(theorem: TheoremId, counts: dict) -> str:
    fields = " ".join(f"{k}={counts[k]}" for k in ("checked", "held", "equality", "violations", "not_applicable"))
    return f"{theorem.value} {fields}\n"


def _tally_reports(theorems, reports: list[AuditReport]) -> dict:
    counts = {t: dict(checked=0, held=0, equality=0, violations=0, not_applicable=0) for t in theorems}
    for rep in reports:
        for r in rep.records:
            c = counts[r.theorem]
            c["checked"] += 1
            if not r.applicable:
                c["not_applicable"] += 1
            elif r.holds:
                c["held"] += 1
            else:
                c["violations"] += 1
            if r.equality:
                c["equality"] += 1
    return counts


def _enumerated_audit(theorems, max_n, args):
    """Return (reports to emit, per-theorem counts)."""
    reports: list[AuditReport] = []
    counts = {}
    single = [t for t in theorems if t in SINGLE_GRAPH_THEOREMS]
    if single:
        check_enumeration_n(max_n)
        tallies = audit_universe(max_n, single, workers=args.workers)
        for t in single:
            confirmed = find_counterexamples(t, max_n, workers=args.workers)
            tally = tallies[t].as_dict()
            tally["violations"] = len(confirmed)
            tally["held"] = tally["checked"] - tally["not_applicable"] - len(confirmed)
            counts[t] = tally
            if not args.all_reports:
                reports.extend(confirmed)
        if args.all_reports:
            for n in range(1, max_n + 1):
                reports.extend(audit_graph(g, single) for g in enumerate_labeled_graphs(n))
    for t in theorems:
        if t is TheoremId.R_EDGE_MONOTONE:
            check_enumeration_n(max_n)
            c = dict(checked=0, held=0, equality=0, violations=0, not_applicable=0)
            for n in range(1, max_n + 1):
                worst = monotonicity_scan(n).worst
                c["checked"] += len(worst)
                if n == 1:
                    c["not_applicable"] += len(worst)
                    continue
                bad = int((worst < -1e-12).sum())
                c["violations"] += bad
                c["held"] += len(worst) - bad
                c["equality"] += int((abs(worst) <= 1e-12).sum())
            counts[t] = c
            reports.extend(find_counterexamples(t, max_n) if not args.all_reports else [
                audit_graph(g, [t]) for n in range(1, max_n + 1) for g in enumerate_labeled_graphs(n)
            ])
        elif t in PAIR_THEOREMS:
            if not 1 <= max_n <= MAX_PAIR_N:
                raise EnumerationCapError(f"pair theorems support --enumerate-max-n <= {MAX_PAIR_N}")
            pair_reports = [audit_pair(t, g1, g2) for g1, g2 in pair_universe(max_n)]
            counts[t] = _tally_reports([t], pair_reports)[t]
            reports.extend(r for r in pair_reports if args.all_reports or r.violations)
    return reports, counts


def cmd_audit(args, stdin, out, err) -> int:
    theorems = _selected_theorems(args.theorem)
    if args.enumerate_max_n is not None:
        reports, counts = _enumerated_audit(theorems, args.enumerate_max_n, args)
    else:
        graphs = [d.graph for d in _graphs(args, stdin)]
        reports = []
        pair_th = [t for t in theorems if t in PAIR_THEOREMS]
        single = [t for t in theorems if t not in PAIR_THEOREMS]
        if single:
            reports.extend(audit_graph(g, single) for g in graphs)
        for t in pair_th:
            if len(graphs) % 2:
                raise CliError(f"{t.value} consumes graphs two at a time; got {len(graphs)}", EXIT_INPUT)
            reports.extend(audit_pair(t, graphs[i], graphs[i + 1]) for i in range(0, len(graphs), 2))
        counts = _tally_reports(theorems, reports)
    _emit(reports, args, out)
    for t in theorems:
        err.write(_summary_line(t, counts[t]))
    total = sum(c["violations"] for c in counts.values())
    return EXIT_VIOLATIONS if (args.strict and total) else EXIT_OK


# -------------------------------------------------------------- enumerate


def cmd_enumerate(args, stdin, out, err) -> int:
    if (args.n is None) == (args.max_n is None):
        raise CliError("give exactly one of --n or --max-n", EXIT_INPUT)
    sizes = [args.n] if args.n is not None else list(range(1, args.max_n + 1))
    for n in sizes:
        check_enumeration_n(n)
    for n in sizes:
        for g in enumerate_labeled_graphs(n):
            out.write(encode_graph6(g) + "\n")
    return EXIT_OK


# ----------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sombor", description=__doc__.split("\n\n")[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def io_flags(p, inputs=True):
        if inputs:
            p.add_argument("--input", "-i", default="-", help="input file, '-' for stdin (default)")
            p.add_argument("--format", "-f", choices=["graph6", "edgelist"], default="graph6")
        p.add_argument("--output-format", "-o", choices=["json_lines", "csv"], default="json_lines")

    p = sub.add_parser("compute", help="index vector for every input graph")
    io_flags(p)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("family", help="generate a named family and compare with its closed form")
    p.add_argument("--name", required=True, choices=[f.value for f in Family])
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--variant", choices=[v.value for v in Variant], default=Variant.CORRECTED.value)
    io_flags(p, inputs=False)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("ops", help="apply a graph operation and evaluate its coindex bounds")
    p.add_argument("--op", required=True, choices=list(OPS))
    p.add_argument("graphs", nargs="*", metavar="GRAPH6", help="two graph6 operands (else read --input)")
    io_flags(p)
    p.set_defaults(func=cmd_ops)

    p = sub.add_parser("audit", help="evaluate theorems on input graphs or on the labeled enumeration")
    p.add_argument("--theorem", "-t", default="all", help="theorem id or 'all' (the ten single-graph theorems)")
    p.add_argument("--enumerate-max-n", type=int, help="audit every labeled graph with 1..N vertices")
    p.add_argument("--strict", action="store_true", help="exit 1 when any violation is found")
    p.add_argument("--all-reports", action="store_true", help="with --enumerate-max-n, emit every report")
    p.add_argument("--workers", type=int, default=1)
    io_flags(p)
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("enumerate", help="print labeled graphs as graph6 lines")
    p.add_argument("--n", type=int)
    p.add_argument("--max-n", type=int)
    p.set_defaults(func=cmd_enumerate)
    return parser


def run(argv: Sequence[str] | None = None, stdin: TextIO = None, stdout: TextIO = None, stderr: TextIO = None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_INPUT
    try:
        return args.func(args, stdin, stdout, stderr)
    except CliError as exc:
        stderr.write(f"sombor: error: {exc}\n")
        return exc.status
    except SomborError as exc:
        stderr.write(f"sombor: error: {exc}\n")
        return EXIT_INPUT
    except OSError as exc:
        stderr.write(f"sombor: error: {exc}\n")
        return EXIT_IO


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
