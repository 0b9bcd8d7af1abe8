import pytest

from conftest import C4, K3, P4, atlas
from proxenum.errors import ArgumentError
from proxenum.graph import Graph
from proxenum.oracle import brute_family
from proxenum.recognition import recognize
from proxenum.threshold import complete_threshold, enumerate_min_threshold_deletions, neighbor_threshold


def test_complete_examples():
    # ascending (min, max) order tries 01, 03, 12, 23: the star at 0 survives
    assert complete_threshold(C4, ()) == {(0, 1), (0, 3)}
    assert complete_threshold(K3, K3.edges()) == K3.edge_set()
    assert complete_threshold(P4, {(1, 2)}) == {(0, 1), (1, 2)}
    with pytest.raises(ArgumentError):
        complete_threshold(P4, P4.edges())


def test_complete_is_maximal():
    for g in atlas(6):
        out = complete_threshold(g, ())
        assert recognize(Graph.from_edges(g.n, out), "threshold")
        for e in g.edge_set() - out:
            assert not recognize(Graph.from_edges(g.n, out | {e}), "threshold")


def test_neighbor_examples():
    assert neighbor_threshold(C4, {(0, 1), (1, 2)}, 2) == {(1, 2), (2, 3)}
    assert neighbor_threshold(C4, {(0, 1), (1, 2)}, 1) == {(0, 1), (1, 2)}
    assert neighbor_threshold(P4, {(0, 1), (1, 2)}, 2) == {(1, 2), (2, 3)}
    with pytest.raises(ArgumentError):
        neighbor_threshold(C4, {(0, 1)}, 2)


def test_neighbours_are_solutions():
    for g in atlas(5):
        fam = brute_family(g, "threshold", "deletion")
        for s in fam:
            for x in range(g.n):
                assert neighbor_threshold(g, s, x) in fam


def test_enumerator_examples():
    assert enumerate_min_threshold_deletions(C4).payloads() == {
        frozenset(s) for s in ({(0, 1), (1, 2)}, {(1, 2), (2, 3)}, {(2, 3), (0, 3)}, {(0, 3), (0, 1)})
    }
    assert enumerate_min_threshold_deletions(P4).payloads() == {
        frozenset({(0, 1), (1, 2)}),
        frozenset({(1, 2), (2, 3)}),
    }
    assert len(enumerate_min_threshold_deletions(K3).solutions()) == 1


def test_linear_out_degree():
    g = Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)])
    run = enumerate_min_threshold_deletions(g)
    sols = run.solutions()
    assert run.stats.neighbor_evaluations == g.n * len(sols)
