"""graph6 and edge-list parsing, and JSON-lines / CSV report rendering.

graph6 (short form only, n <= 62): one size byte chr(n + 63), then the upper
triangle read column by column, x(0,1), x(0,2), x(1,2), x(0,3), ..., packed
six bits per byte (most significant first), each byte offset by 63. Padding
bits in the last byte must be zero.

Edge-list text::

    n 4          # header: vertex count
    0 1          # one 0-based pair per line
    1 2

'#' starts a comment, blank lines are skipped. Several graphs may follow each
other, each starting with its own header.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Any, Iterable, Iterator

from .errors import (
    EdgeListFormatError,
    EmptyDomainError,
    Graph6LengthError,
    Graph6PaddingError,
    MalformedGraph6Error,
    SomborError,
    UnsupportedSizeError,
)
from .graph import MAX_VERTICES, Graph, build_graph

GRAPH6_HEADER = ">>graph6<<"
DIGITS = 12


@dataclass(frozen=True)
class GraphDocument:
    graph: Graph
    source_form: str  # "graph6" or "edge_list"
    source_text: str
    line: int = 1


# ---------------------------------------------------------------- graph6


@lru_cache(maxsize=None)
def _column_pairs(n: int) -> tuple[tuple[int, int], ...]:
    return tuple((u, v) for v in range(1, n) for u in range(v))


def encode_graph6(g: Graph) -> str:
    if g.n > MAX_VERTICES:
        raise UnsupportedSizeError(f"graph6 short form supports n <= {MAX_VERTICES}, got {g.n}")
    out = [chr(g.n + 63)]
    acc = nbits = 0
    for u, v in _column_pairs(g.n):
        acc = (acc << 1) | (g.rows[u] >> v & 1)
        nbits += 1
        if nbits == 6:
            out.append(chr(acc + 63))
            acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(line: str) -> Graph:
    s = line.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    if not s:
        raise Graph6LengthError("empty graph6 string")
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise MalformedGraph6Error(f"byte {i} ({ch!r}, code {ord(ch)}) outside 63..126")
    n = ord(s[0]) - 63
    if n == 63:
        raise UnsupportedSizeError("long-form graph6 header (n > 62) is not supported")
    if n == 0:
        raise EmptyDomainError("graph6 header declares n = 0")
    nbits = n * (n - 1) // 2
    nbytes = -(-nbits // 6)
    if len(s) != 1 + nbytes:
        raise Graph6LengthError(f"n={n} needs {1 + nbytes} bytes, got {len(s)}")
    body = [ord(ch) - 63 for ch in s[1:]]
    pad = nbytes * 6 - nbits
    if pad and body[-1] & ((1 << pad) - 1):
        raise Graph6PaddingError("nonzero padding bits in final byte")
    rows = [0] * n
    for k, (u, v) in enumerate(_column_pairs(n)):
        if body[k // 6] >> (5 - k % 6) & 1:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def read_graph6_lines(text: str) -> Iterator[GraphDocument]:
    """One graph per non-blank line; errors carry the 1-based line number."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if not raw.strip():
            continue
        try:
            g = parse_graph6(raw)
        except SomborError as exc:
            exc.line = lineno
            raise
        yield GraphDocument(g, "graph6", raw.strip(), lineno)


# ------------------------------------------------------------- edge list


def _edge_list_blocks(text: str) -> Iterator[tuple[int, int, list[tuple[int, str]]]]:
    """Yield (header line number, n, [(line number, pair text), ...]) per graph."""
    header: tuple[int, int] | None = None
    body: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].strip()
        if not content:
            continue
        tokens = content.split()
        if tokens[0] == "n":
            if len(tokens) != 2 or not tokens[1].lstrip("-").isdigit():
                raise EdgeListFormatError(f"bad header {content!r}; expected 'n <count>'", lineno)
            if header is not None:
                yield header[0], header[1], body
            header, body = (lineno, int(tokens[1])), []
            continue
        if header is None:
            raise EdgeListFormatError("missing 'n <count>' header", lineno)
        body.append((lineno, content))
    if header is None:
        raise EdgeListFormatError("missing 'n <count>' header", 1)
    yield header[0], header[1], body


def _block_to_graph(header_line: int, n: int, body: list[tuple[int, str]]) -> Graph:
    try:
        g = build_graph(n, ())
    except SomborError as exc:
        exc.line = header_line
        raise
    rows = list(g.rows)
    for lineno, content in body:
        tokens = content.split()
        if len(tokens) != 2:
            raise EdgeListFormatError(f"expected 'u v', got {content!r}", lineno)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise EdgeListFormatError(f"non-integer vertex in {content!r}", lineno) from None
        try:
            one = build_graph(n, [(u, v)])
        except SomborError as exc:
            exc.line = lineno
            raise
        rows = [a | b for a, b in zip(rows, one.rows)]
    return Graph(n, tuple(rows))


def parse_edge_lists(text: str) -> Iterator[GraphDocument]:
    for header_line, n, body in _edge_list_blocks(text):
        g = _block_to_graph(header_line, n, body)
        yield GraphDocument(g, "edge_list", format_edge_list(g), header_line)


def parse_edge_list(text: str) -> Graph:
    docs = list(parse_edge_lists(text))
    if len(docs) != 1:
        raise EdgeListFormatError(f"expected exactly one graph, found {len(docs)}", docs[1].line)
    return docs[0].graph


def format_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def read_graphs(text: str, fmt: str) -> Iterator[GraphDocument]:
    if fmt == "graph6":
        return read_graph6_lines(text)
    if fmt in ("edgelist", "edge_list"):
        return parse_edge_lists(text)
    raise ValueError(f"unknown input format {fmt!r}")


# --------------------------------------------------------------- reports


def render_real(x: float | None) -> float | None:
    """Round to DIGITS decimals; the JSON and CSV forms reparse to the same float."""
    if x is None:
        return None
    x = float(x)
    if math.isnan(x) or math.isinf(x):
        return None
    r = round(x, DIGITS)
    return 0.0 if r == 0 else r


def _csv_cell(x: Any) -> str:
    if x is None:
        return ""
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, float):
        r = render_real(x)
        return "" if r is None else f"{r:.{DIGITS}f}"
    return str(x)


def _json_value(x: Any) -> Any:
    if isinstance(x, float):
        return render_real(x)
    if isinstance(x, Enum):
        return x.value
    return x


def _rows(item: Any) -> tuple[list[str], list[dict[str, Any]], dict[str, Any]]:
    """Return (csv header, csv rows, json object) for one report item."""
    from .audit import AuditReport  # local: audit imports this module
    from .invariants import IndexVector

    if isinstance(item, AuditReport):
        recs = [r.as_dict() for r in item.records]
        base = {"graph_id": item.graph_id}
        if item.operands:
            base["operands"] = " ".join(item.operands)
        rows = [{**base, **r} for r in recs]
        obj = {
            "graph_id": item.graph_id,
            **({"operands": list(item.operands)} if item.operands else {}),
            "records": recs,
            "violations": [r.theorem.value for r in item.violations],
        }
        return AUDIT_CSV_HEADER, rows, obj
    if isinstance(item, tuple) and len(item) == 2 and isinstance(item[1], IndexVector):
        graph_id, iv = item
        g = parse_graph6(graph_id)
        row = {"graph_id": graph_id, "n": g.n, "m": g.m, **iv.as_dict()}
        return INDEX_CSV_HEADER, [row], row
    if isinstance(item, IndexVector):
        row = item.as_dict()
        return INDEX_CSV_HEADER, [row], row
    if isinstance(item, dict):
        return list(item), [item], item
    raise TypeError(f"cannot render {type(item).__name__}")


INDEX_CSV_HEADER = [
    "graph_id", "n", "m", "so", "so_coindex", "m1", "m1_coindex",
    "m2", "m2_coindex", "f", "f_coindex",
]
AUDIT_CSV_HEADER = [
    "graph_id", "operands", "theorem", "lower", "value", "upper", "applicable",
    "not_applicable_reason", "holds", "equality_lower", "equality_upper",
    "is_regular_input", "gap_lower", "gap_upper", "note",
]


def write_reports(items: Iterable[Any], fmt: str = "json_lines") -> str:
    """Render report items, one record per line (UTF-8 text, LF endings).

    Items may be :class:`~sombor.audit.AuditReport`, ``(graph6, IndexVector)``
    pairs, bare :class:`IndexVector` or flat dicts. CSV gets a header row taken
    from the first item; audit reports produce one CSV line per bound record.
    """
    items = list(items)
    if not items:
        return ""
    if fmt == "json_lines":
        lines = []
        for item in items:
            _, _, obj = _rows(item)
            lines.append(json.dumps(_jsonify(obj), ensure_ascii=False))
        return "\n".join(lines) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        header = _rows(items[0])[0]
        w = csv.DictWriter(buf, fieldnames=header, lineterminator="\n", extrasaction="ignore")
        w.writeheader()
        for item in items:
            for row in _rows(item)[1]:
                w.writerow({k: _csv_cell(row.get(k)) for k in header})
        return buf.getvalue()
    raise ValueError(f"unknown report format {fmt!r}")


def _jsonify(obj: Any) -> Any:
    if isinstance(obj, dict):
        return {k: _jsonify(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonify(v) for v in obj]
    return _json_value(obj)
