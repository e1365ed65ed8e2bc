import math
import random

import numpy as np
import pytest

from sombor.audit import audit_graph, eval_edge_monotonicity
from sombor.batch import (
    BLOCK,
    audit_universe,
    block_quantities,
    blocks,
    monotonicity_scan,
    screen_candidates,
    theorem_verdicts,
)
from sombor.bounds import SINGLE_GRAPH_THEOREMS, Quantities, TheoremId
from sombor.closed_forms import regular_coindex
from sombor.graph import count_labeled_graphs, graph_from_counter, pair_list

FIELDS = ("m", "mbar", "delta", "Delta", "so", "so_co", "m1", "m1_co", "m2_co", "f_co", "so_comp", "so_co_comp")


def check_block(n, start, stop):
    q = block_quantities(n, start, stop)
    pairs = pair_list(n)
    verdicts = {t: theorem_verdicts(t, q) for t in SINGLE_GRAPH_THEOREMS}
    for i, c in enumerate(range(start, stop)):
        g = graph_from_counter(n, c, pairs)
        s = Quantities.of(g)
        for name in FIELDS:
            assert getattr(q, name)[i] == pytest.approx(getattr(s, name), rel=1e-12, abs=1e-12), (n, c, name)
        for rec in audit_graph(g).records:
            v = verdicts[rec.theorem]
            assert bool(v.applicable[i]) == rec.applicable
            if rec.applicable:
                assert bool(v.holds[i]) == rec.holds, (n, c, rec.theorem)
                assert bool(v.equality[i]) == rec.equality, (n, c, rec.theorem)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_block_matches_scalar_exhaustively(n):
    check_block(n, 0, count_labeled_graphs(n))


def test_block_matches_scalar_sample_n7():
    rng = random.Random(20261017)
    total = count_labeled_graphs(7)
    for _ in range(6):
        start = rng.randrange(0, total - 64)
        check_block(7, start, start + 64)


def test_blocks_cover_range():
    assert blocks(7) == [(7, s, min(s + BLOCK, 1 << 21)) for s in range(0, 1 << 21, BLOCK)]
    assert blocks(1) == [(1, 0, 1)]


def test_universe_counts():
    tallies = audit_universe(4)
    total = sum(count_labeled_graphs(n) for n in range(1, 5))
    for t in tallies.values():
        assert t.checked == total
        assert t.held + t.violations + t.not_applicable == total
    assert tallies[TheoremId.T_SELFCOMP_SUM].violations > 0
    assert tallies[TheoremId.T_DEGREE_BOUNDS].violations == 0


def test_universe_workers_agree():
    a = audit_universe(5, ["T_SELFCOMP_SUM"], workers=1)
    b = audit_universe(5, ["T_SELFCOMP_SUM"], workers=2)
    key = TheoremId.T_SELFCOMP_SUM
    assert a[key].as_dict() == b[key].as_dict()
    assert a[key].violating == b[key].violating


def test_screen_is_superset_of_violations():
    for n in range(1, 6):
        cands = set(screen_candidates(TheoremId.T_SELFCOMP_SUM, n))
        pairs = pair_list(n)
        for c in range(count_labeled_graphs(n)):
            g = graph_from_counter(n, c, pairs)
            if audit_graph(g, [TheoremId.T_SELFCOMP_SUM]).violations:
                assert g in cands


@pytest.mark.parametrize("n", [2, 3, 4])
def test_monotonicity_scan_matches_scalar(n):
    scan = monotonicity_scan(n)
    pairs = pair_list(n)
    for c in range(count_labeled_graphs(n)):
        rec = eval_edge_monotonicity(graph_from_counter(n, c, pairs))
        assert scan.worst[c] == pytest.approx(rec.value, abs=1e-12)


def test_monotonicity_scan_cells():
    scan = monotonicity_scan(3)
    # K2 + K1 (counter 1): dropping the edge sends the coindex from 2 to 0
    assert scan.coindex[1] == pytest.approx(2.0)
    assert scan.margins[1, 0] == pytest.approx(-2.0)
    assert len(scan.violations()) == 6


def test_regular_coindex_against_batch_n7():
    n = 7
    for _, s, e in blocks(n):
        q = block_quantities(n, s, e)
        for i in np.nonzero(q.regular)[0]:
            r = int(q.delta[i])
            assert math.isclose(regular_coindex(n, r), q.so_co[i], rel_tol=1e-12, abs_tol=1e-12)
