import random

import numpy as np
import pytest

from conftest import K3, P3, P4, P5, TWO_K2, atlas, random_graph
from proxenum import _kernels
from proxenum.errors import ArgumentError
from proxenum.graph import Graph, bits, complement, find_forbidden, tables_for
from proxenum.oracle import brute_family, brute_sandwich, maximal_matchings
from proxenum.p3free import (
    complete_p3free_deletion,
    enumerate_min_p3free_completions,
    enumerate_min_p3free_deletions,
    neighbor_p3,
    neighbor_p3_join,
    p3_sandwich,
    unique_p3free_completion,
)
from proxenum.recognition import recognize


def test_unique_completion_examples():
    assert unique_p3free_completion(P3) == K3.edge_set()
    assert unique_p3free_completion(TWO_K2) == TWO_K2.edge_set()
    assert unique_p3free_completion(P4) == Graph.complete(4).edge_set()


def test_unique_completion_is_minimal():
    rnd = random.Random(1)
    for _ in range(40):
        g = random_graph(rnd, rnd.randint(1, 8), 0.3)
        closure = unique_p3free_completion(g)
        assert g.edge_set() <= closure
        assert recognize(Graph.from_edges(g.n, closure), "p3free")
        for e in closure - g.edge_set():
            assert not recognize(Graph.from_edges(g.n, closure - {e}), "p3free")


def test_sandwich_examples():
    assert not p3_sandwich(P3.edges(), P3)
    assert p3_sandwich([(0, 1)], P3)
    assert p3_sandwich([], P5)
    with pytest.raises(ArgumentError):
        p3_sandwich([(0, 2)], P3)


def test_sandwich_matches_brute_force():
    rnd = random.Random(2)
    for _ in range(150):
        g2 = random_graph(rnd, rnd.randint(2, 6), 0.5)
        if g2.m > 10:
            continue
        mandatory = [e for e in g2.edges() if rnd.random() < 0.4]
        assert p3_sandwich(mandatory, g2) == brute_sandwich(mandatory, g2, "p3free")


def test_neighbor_examples():
    assert neighbor_p3(P5, {(1, 2), (3, 4)}, 0, 1) == {(0, 1), (3, 4)}
    assert neighbor_p3(P3, {(0, 1)}, 2, 1) == {(1, 2)}
    with pytest.raises(ArgumentError):
        neighbor_p3(P3, {(0, 1)}, 0, 1)


def test_join_variant_keeps_chosen_clique_mates():
    # s is the triangle 0-1-4; vertex 2 sees 0 and 1 but not 4
    g = Graph.from_edges(5, [(0, 1), (0, 4), (1, 4), (0, 2), (1, 2)])
    s = {(0, 1), (0, 4), (1, 4)}
    assert neighbor_p3_join(g, s, 0, 2, ()) == {(0, 2), (1, 4)}
    assert neighbor_p3_join(g, s, 0, 2, {1}) == {(0, 1), (0, 2), (1, 2)}
    assert neighbor_p3(g, s, 0, 2) == {(0, 1), (0, 2), (1, 2)}
    with pytest.raises(ArgumentError):
        neighbor_p3_join(g, s, 0, 2, {4})


def test_complete_deletion():
    assert complete_p3free_deletion(P5, ()) == {(0, 1), (2, 3)}
    with pytest.raises(ArgumentError):
        complete_p3free_deletion(P3, P3.edges())


def test_enumerator_examples():
    assert enumerate_min_p3free_deletions(P5).payloads() == {
        frozenset(s) for s in ({(0, 1), (2, 3)}, {(0, 1), (3, 4)}, {(1, 2), (3, 4)})
    }
    assert enumerate_min_p3free_deletions(K3).payloads() == {K3.edge_set()}
    assert enumerate_min_p3free_deletions(P3).payloads() == {frozenset({(0, 1)}), frozenset({(1, 2)})}
    assert enumerate_min_p3free_completions(P4).payloads() == {Graph.complete(4).edge_set()}


def test_triangle_free_deletions_are_maximal_matchings():
    for g in atlas(6):
        if find_forbidden(g, "P3") is None or g.m > 12:
            continue
        if any(g.rows[u] & g.rows[v] for u, v in g.edges()):
            continue
        assert enumerate_min_p3free_deletions(g).payloads() == maximal_matchings(g)


def _brute_k2k1_completions(g):
    fill = g.non_edges()
    ok = _kernels.scan_edge_subsets(g.n, g.edges(), fill, tables_for(("K2+K1",)))
    best = _kernels.minimal_masks(ok)
    return {g.edge_set() | frozenset(fill[i] for i in bits(int(m))) for m in np.flatnonzero(best)}


def test_dual_k2k1_completions(wide_oracle):
    """Minimal (K2+K1)-free completions of g are the complements of P3-free deletions of co-g."""
    for g in atlas(6):
        full = Graph.complete(g.n).edge_set()
        dual = {full - f for f in enumerate_min_p3free_deletions(complement(g)).payloads()}
        assert dual == _brute_k2k1_completions(g)
