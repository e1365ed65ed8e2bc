import csv
import io
import json
import math

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from conftest import graphs
from oracles import from_nx, to_nx
from sombor.audit import audit_graph
from sombor.errors import (
    EdgeListFormatError,
    EmptyDomainError,
    Graph6LengthError,
    Graph6PaddingError,
    InvalidEdgeError,
    MalformedGraph6Error,
    ParseError,
    SomborError,
    UnsupportedSizeError,
    VertexRangeError,
)
from sombor.families import FamilySpec, generate_family
from sombor.graph import Graph, build_graph, complete_graph, empty_graph, enumerate_labeled_graphs
from sombor.graphio import (
    AUDIT_CSV_HEADER,
    INDEX_CSV_HEADER,
    encode_graph6,
    format_edge_list,
    parse_edge_list,
    parse_edge_lists,
    parse_graph6,
    read_graph6_lines,
    read_graphs,
    render_real,
    write_reports,
)
from sombor.invariants import compute_all

P4 = build_graph(4, [(0, 1), (1, 2), (2, 3)])
C5 = generate_family(FamilySpec.of("cycle", 5))


class TestGraph6:
    def test_examples(self):
        assert parse_graph6("C~") == complete_graph(4)
        assert parse_graph6("Ch") == P4
        assert parse_graph6("A?") == empty_graph(2)
        assert encode_graph6(complete_graph(4)) == "C~"
        assert encode_graph6(P4) == "Ch"
        assert encode_graph6(empty_graph(2)) == "A?"
        assert encode_graph6(complete_graph(2)) == "A_"
        assert encode_graph6(complete_graph(1)) == "@"

    def test_header_and_whitespace(self):
        assert parse_graph6(">>graph6<<C~\n") == complete_graph(4)
        assert parse_graph6("  Ch  ") == P4

    def test_errors(self):
        with pytest.raises(MalformedGraph6Error):
            parse_graph6("C }")
        with pytest.raises(MalformedGraph6Error):
            parse_graph6("Cé")
        with pytest.raises(Graph6LengthError):
            parse_graph6("C~~")
        with pytest.raises(Graph6LengthError):
            parse_graph6("D")
        with pytest.raises(Graph6LengthError):
            parse_graph6("")
        with pytest.raises(Graph6PaddingError):
            parse_graph6("A@")
        with pytest.raises(UnsupportedSizeError):
            parse_graph6("~??~")
        with pytest.raises(EmptyDomainError):
            parse_graph6("?")

    def test_encode_too_large(self):
        with pytest.raises(UnsupportedSizeError):
            encode_graph6(Graph(63, (0,) * 63))

    @given(graphs(max_n=20))
    def test_matches_networkx(self, g):
        expected = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
        assert encode_graph6(g) == expected
        assert from_nx(nx.from_graph6_bytes(expected.encode())) == g

    def test_roundtrip_n_le_5(self):
        for n in range(1, 6):
            for g in enumerate_labeled_graphs(n):
                s = encode_graph6(g)
                assert parse_graph6(s) == g
                assert encode_graph6(parse_graph6(s)) == s

    @given(graphs(max_n=9), st.data())
    def test_single_byte_corruption(self, g, data):
        s = encode_graph6(g)
        i = data.draw(st.integers(0, len(s) - 1))
        bad = data.draw(st.one_of(st.integers(0, 62), st.integers(127, 255)))
        corrupt = s[:i] + chr(bad) + s[i + 1:]
        with pytest.raises(ParseError):
            parse_graph6(corrupt)
        with pytest.raises(ParseError):
            parse_graph6(s + "?")
        if len(s) > 1:
            with pytest.raises(ParseError):
                parse_graph6(s[:-1])

    def test_line_numbers(self):
        docs = list(read_graph6_lines("C~\n\nCh\n"))
        assert [d.line for d in docs] == [1, 3]
        assert docs[1].source_form == "graph6" and docs[1].source_text == "Ch"
        with pytest.raises(MalformedGraph6Error) as err:
            list(read_graph6_lines("C~\nC \x01\n"))
        assert err.value.line == 2
        assert "line 2" in str(err.value)


class TestEdgeList:
    def test_examples(self):
        assert parse_edge_list("n 4\n0 1\n1 2\n2 3") == P4
        assert parse_edge_list("n 3\n# triangle\n0 1\n1 2\n0 2") == complete_graph(3)
        assert parse_edge_list("n 3\n") == empty_graph(3)

    def test_range_error_line(self):
        with pytest.raises(VertexRangeError) as err:
            parse_edge_list("n 2\n0 2")
        assert err.value.line == 2

    def test_other_errors(self):
        with pytest.raises(EdgeListFormatError) as err:
            parse_edge_list("0 1\n")
        assert err.value.line == 1
        with pytest.raises(EdgeListFormatError):
            parse_edge_list("")
        with pytest.raises(EdgeListFormatError) as err:
            parse_edge_list("n 3\n0 1 2\n")
        assert err.value.line == 2
        with pytest.raises(EdgeListFormatError):
            parse_edge_list("n 3\n0 x\n")
        with pytest.raises(InvalidEdgeError) as err:
            parse_edge_list("n 3\n\n# c\n1 1\n")
        assert err.value.line == 4
        with pytest.raises(EmptyDomainError) as err:
            parse_edge_list("n 0\n")
        assert err.value.line == 1
        with pytest.raises(EdgeListFormatError):
            parse_edge_list("n 2\nn 2\n")

    def test_inline_comment_and_duplicates(self):
        assert parse_edge_list("n 3  # three\n0 1 # edge\n1 0\n") == build_graph(3, [(0, 1)])

    def test_multiple_graphs(self):
        docs = list(parse_edge_lists("n 2\n0 1\nn 3\n"))
        assert [d.graph for d in docs] == [complete_graph(2), empty_graph(3)]
        assert [d.line for d in docs] == [1, 3]

    @given(graphs())
    def test_roundtrip(self, g):
        assert parse_edge_list(format_edge_list(g)) == g

    def test_read_graphs_dispatch(self):
        assert next(read_graphs("Ch\n", "graph6")).graph == P4
        assert next(read_graphs("n 1\n", "edgelist")).graph == complete_graph(1)
        with pytest.raises(ValueError):
            read_graphs("", "sparse6")


class TestReports:
    def test_c5_csv(self):
        text = write_reports([(encode_graph6(C5), compute_all(C5))], "csv")
        lines = text.splitlines()
        assert len(lines) == 2 and lines[0] == ",".join(INDEX_CSV_HEADER)
        assert "14.142135623731" in lines[1]
        assert text.endswith("\n") and "\r" not in text

    def test_empty(self):
        assert write_reports([], "json_lines") == ""
        assert write_reports([], "csv") == ""

    def test_k2_violations(self):
        out = write_reports([audit_graph(complete_graph(2))], "json_lines")
        obj = json.loads(out)
        assert obj["violations"] == ["T_SELFCOMP_SUM"]
        assert obj["graph_id"] == "A_"
        assert len(obj["records"]) == 10

    def test_audit_csv_rows(self):
        text = write_reports([audit_graph(C5)], "csv")
        rows = list(csv.DictReader(io.StringIO(text)))
        assert list(rows[0]) == AUDIT_CSV_HEADER
        assert len(rows) == 10 and all(r["holds"] == "true" for r in rows)

    def test_json_field_names(self):
        obj = json.loads(write_reports([compute_all(P4)], "json_lines"))
        assert set(obj) == {"so", "so_coindex", "m1", "m1_coindex", "m2", "m2_coindex", "f", "f_coindex"}

    @given(graphs(max_n=7))
    def test_csv_json_agree(self, g):
        item = (encode_graph6(g), compute_all(g))
        obj = json.loads(write_reports([item], "json_lines"))
        row = next(csv.DictReader(io.StringIO(write_reports([item], "csv"))))
        for key, val in obj.items():
            if isinstance(val, (int, float)):
                assert float(row[key]) == float(val)
            else:
                assert row[key] == val
        rep = audit_graph(g)
        recs = json.loads(write_reports([rep], "json_lines"))["records"]
        rows = list(csv.DictReader(io.StringIO(write_reports([rep], "csv"))))
        for rec, row in zip(recs, rows):
            for key in ("lower", "value", "upper", "gap_lower", "gap_upper"):
                if rec[key] is None:
                    assert row[key] == ""
                else:
                    assert float(row[key]) == rec[key]

    def test_render_real(self):
        assert render_real(10 * math.sqrt(2)) == 14.142135623731
        assert render_real(-1e-15) == 0.0
        assert render_real(None) is None
        assert render_real(float("nan")) is None

    def test_deterministic(self):
        items = [audit_graph(g) for g in enumerate_labeled_graphs(4)]
        assert write_reports(items, "csv") == write_reports(items, "csv")

    def test_bad_format(self):
        with pytest.raises(ValueError):
            write_reports([compute_all(P4)], "xml")


def test_errors_share_base():
    assert issubclass(ParseError, SomborError) and issubclass(SomborError, ValueError)
