from itertools import product

import networkx as nx
import pytest
from hypothesis import given

from conftest import graphs
from oracles import from_nx, nx_product, to_nx
from sombor.errors import EmptyDomainError, EnumerationCapError, InvalidEdgeError, VertexRangeError
from sombor.graph import (
    build_graph,
    cartesian_product,
    complement,
    complete_graph,
    composition,
    degree_stats,
    empty_graph,
    enumerate_labeled_graphs,
    graph_counter,
    graph_from_counter,
    graph_join,
    graph_union,
    non_edges,
)

P4 = build_graph(4, [(0, 1), (1, 2), (2, 3)])
C5 = build_graph(5, [(i, (i + 1) % 5) for i in range(5)])
K2 = complete_graph(2)
K3 = complete_graph(3)
K4 = complete_graph(4)


def small_universe(max_n=4):
    for n in range(1, max_n + 1):
        yield from enumerate_labeled_graphs(n)


class TestBuild:
    def test_path(self):
        assert P4.degrees == (1, 2, 2, 1)
        assert P4.m == 3

    def test_empty(self):
        g = build_graph(3, [])
        assert g.m == 0 and g.degrees == (0, 0, 0)

    def test_duplicates_collapse(self):
        g = build_graph(3, [(0, 1), (0, 1), (1, 0)])
        assert g.m == 1 and g.degrees == (1, 1, 0)

    def test_errors(self):
        with pytest.raises(VertexRangeError):
            build_graph(2, [(0, 2)])
        with pytest.raises(VertexRangeError):
            build_graph(2, [(-1, 0)])
        with pytest.raises(InvalidEdgeError):
            build_graph(3, [(1, 1)])
        with pytest.raises(EmptyDomainError):
            build_graph(0, [])

    def test_errors_are_value_errors(self):
        with pytest.raises(ValueError):
            build_graph(2, [(0, 5)])

    def test_immutable_and_hashable(self):
        with pytest.raises(AttributeError):
            P4.n = 5
        assert len({P4, build_graph(4, [(2, 3), (1, 2), (0, 1)])}) == 1


class TestComplement:
    def test_complete_to_empty(self):
        assert complement(K4) == empty_graph(4)

    def test_involution_p4(self):
        assert complement(complement(P4)) == P4

    def test_c5_self_complementary(self):
        c = complement(C5)
        assert c.degrees == (2, 2, 2, 2, 2) and c.m == 5
        assert nx.is_isomorphic(to_nx(c), to_nx(C5))

    @given(graphs())
    def test_degrees(self, g):
        c = complement(g)
        assert all(c.degrees[u] == g.n - 1 - g.degrees[u] for u in range(g.n))
        assert c.m + g.m == g.n * (g.n - 1) // 2

    def test_involution_exhaustive(self):
        for n in range(1, 8):
            for g in enumerate_labeled_graphs(n, 0, 3000):
                assert complement(complement(g)) == g

    @given(graphs())
    def test_matches_networkx(self, g):
        assert complement(g) == from_nx(nx.complement(to_nx(g)))


class TestDegreeStats:
    def test_p4(self):
        s = degree_stats(P4)
        assert s.degrees == (1, 2, 2, 1)
        assert (s.max_degree, s.min_degree, s.edge_count, s.coedge_count) == (2, 1, 3, 3)
        assert not s.is_regular

    def test_c5(self):
        s = degree_stats(C5)
        assert (s.max_degree, s.min_degree, s.edge_count, s.coedge_count, s.is_regular) == (2, 2, 5, 5, True)

    def test_k4(self):
        s = degree_stats(K4)
        assert (s.max_degree, s.min_degree, s.edge_count, s.coedge_count) == (3, 3, 6, 0)

    @given(graphs())
    def test_invariants(self, g):
        s = degree_stats(g)
        assert sum(s.degrees) == 2 * s.edge_count
        assert 0 <= s.min_degree <= s.max_degree <= g.n - 1
        assert s.coedge_count == g.n * (g.n - 1) // 2 - s.edge_count
        assert s.is_regular == (s.max_degree == s.min_degree)


class TestNonEdges:
    def test_examples(self):
        assert non_edges(K3) == []
        assert non_edges(P4) == [(0, 2), (0, 3), (1, 3)]
        assert non_edges(empty_graph(3)) == [(0, 1), (0, 2), (1, 2)]

    @given(graphs())
    def test_partition(self, g):
        ne, e = set(non_edges(g)), set(g.edges())
        assert not ne & e
        assert len(ne | e) == g.n * (g.n - 1) // 2
        assert len(ne) == g.mbar
        assert non_edges(g) == sorted(non_edges(g))


class TestOperations:
    def test_union_examples(self):
        u = graph_union(K2, K2)
        assert (u.n, u.m, u.degrees) == (4, 2, (1, 1, 1, 1))
        u = graph_union(K3, complete_graph(1))
        assert (u.n, u.m, u.degrees) == (4, 3, (2, 2, 2, 0))
        u = graph_union(build_graph(2, [(0, 1)]), build_graph(3, [(0, 1), (1, 2)]))
        assert (u.n, u.m) == (5, 3)

    def test_join_examples(self):
        star = graph_join(empty_graph(1), empty_graph(3))
        assert star == build_graph(4, [(0, 1), (0, 2), (0, 3)])
        assert graph_join(K2, complete_graph(1)) == K3
        c4 = graph_join(empty_graph(2), empty_graph(2))
        assert c4.degrees == (2, 2, 2, 2) and c4.m == 4
        assert nx.is_isomorphic(to_nx(c4), nx.cycle_graph(4))

    def test_cartesian_examples(self):
        sq = cartesian_product(K2, K2)
        assert (sq.n, sq.m, set(sq.degrees)) == (4, 4, {2})
        t = cartesian_product(K3, K3)
        assert (t.n, t.m, set(t.degrees)) == (9, 18, {4})
        ladder = cartesian_product(K2, build_graph(3, [(0, 1), (1, 2)]))
        assert (ladder.n, ladder.m) == (6, 7)

    def test_composition_examples(self):
        assert composition(K3, K2) == complete_graph(6)
        c4 = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        f = composition(c4, K2)
        assert (f.n, f.m, set(f.degrees)) == (8, 20, {5})
        assert composition(complete_graph(1), P4) == P4

    def test_pair_universe_counts_and_degrees(self):
        universe = list(small_universe(4))
        for g1, g2 in product(universe, repeat=2):
            n1, n2, m1, m2 = g1.n, g2.n, g1.m, g2.m
            assert graph_join(g1, g2).m == m1 + m2 + n1 * n2
            cp = cartesian_product(g1, g2)
            co = composition(g1, g2)
            assert cp.m == n1 * m2 + m1 * n2
            assert co.m == n1 * m2 + m1 * n2 * n2
            for u1 in range(n1):
                for u2 in range(n2):
                    k = u1 * n2 + u2
                    assert cp.degrees[k] == g1.degrees[u1] + g2.degrees[u2]
                    assert co.degrees[k] == n2 * g1.degrees[u1] + g2.degrees[u2]

    @given(graphs(max_n=5), graphs(max_n=5))
    def test_products_match_networkx(self, g1, g2):
        h1, h2 = to_nx(g1), to_nx(g2)
        assert cartesian_product(g1, g2) == from_nx(nx_product(h1, h2, "cartesian"))
        assert composition(g1, g2) == from_nx(nx_product(h1, h2, "lexicographic"))

    @given(graphs(max_n=6), graphs(max_n=6))
    def test_union_join_match_networkx(self, g1, g2):
        h = nx.disjoint_union(to_nx(g1), to_nx(g2))
        assert graph_union(g1, g2) == from_nx(h)
        h.add_edges_from((u, g1.n + v) for u in range(g1.n) for v in range(g2.n))
        assert graph_join(g1, g2) == from_nx(h)


class TestEnumeration:
    @pytest.mark.parametrize("n,count", [(1, 1), (2, 2), (3, 8), (4, 64), (5, 1024)])
    def test_counts(self, n, count):
        assert sum(1 for _ in enumerate_labeled_graphs(n)) == count

    def test_n2(self):
        assert list(enumerate_labeled_graphs(2)) == [empty_graph(2), K2]

    def test_distinct_and_deterministic(self):
        a = list(enumerate_labeled_graphs(4))
        assert len(set(a)) == 64
        assert a == list(enumerate_labeled_graphs(4))

    def test_cap(self):
        with pytest.raises(EnumerationCapError):
            next(enumerate_labeled_graphs(8))
        with pytest.raises(EnumerationCapError):
            next(enumerate_labeled_graphs(0))

    def test_partitioned_ranges_concatenate(self):
        whole = list(enumerate_labeled_graphs(5))
        parts = [list(enumerate_labeled_graphs(5, s, s + 100)) for s in range(0, 1024, 100)]
        assert [g for p in parts for g in p] == whole

    @given(graphs(max_n=7))
    def test_counter_roundtrip(self, g):
        assert graph_from_counter(g.n, graph_counter(g)) == g
