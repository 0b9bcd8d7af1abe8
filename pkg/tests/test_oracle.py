import random

import pytest

from conftest import C4, C5, K3, P3, P4, P5, disjoint_triangles, random_graph
from proxenum import oracle
from proxenum.errors import ArgumentError, CapacityError
from proxenum.graph import Graph, complement
from proxenum.oracle import (
    ExtensionQuery,
    brute_extension,
    brute_family,
    brute_max_edge_subgraphs,
    brute_max_induced,
    brute_min_completions,
    brute_sandwich,
    flashlight_enumerate,
    maximal_matchings,
)
from proxenum.recognition import CLASSES, recognize

P4_EDGES = [(0, 1), (1, 2), (2, 3)]


def test_brute_induced_examples():
    assert brute_max_induced(P4, "cograph") == {frozenset(s) for s in ({0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3})}
    assert brute_max_induced(C4, "cograph") == {frozenset(range(4))}
    fam = brute_max_induced(C5, "split")
    assert fam and all(recognize(Graph.from_edges(5, [e for e in C5.edges() if set(e) <= s]), "split") for s in fam)


def test_brute_edge_examples():
    assert brute_max_edge_subgraphs(P5, "cograph") == {
        frozenset({(0, 1), (1, 2), (3, 4)}),
        frozenset({(0, 1), (2, 3), (3, 4)}),
        frozenset({(1, 2), (2, 3)}),
    }
    tp = brute_max_edge_subgraphs(C4, "tp")
    assert len(tp) == 6 and all(len(s) == 2 for s in tp)
    assert brute_max_edge_subgraphs(K3, "threshold") == {K3.edge_set()}


def test_brute_completion_examples():
    c4 = C4.edge_set()
    assert brute_min_completions(C4, "split") == {c4 | {(1, 3)}, c4 | {(0, 2)}}
    assert brute_min_completions(P3, "p3free") == {K3.edge_set()}
    assert len(brute_min_completions(disjoint_triangles(2), "split")) == 9


def test_brute_sandwich_examples():
    assert not brute_sandwich(P4_EDGES, P4, "cograph")
    assert brute_sandwich(P4_EDGES, C4, "cograph")
    for cls in CLASSES:
        assert brute_sandwich([], P5, cls)
    with pytest.raises(ArgumentError):
        brute_sandwich([(0, 2)], P4, "cograph")


def test_extension_examples():
    assert brute_extension(ExtensionQuery(P4, "induced", frozenset({0}), frozenset({2}), "cograph"))
    assert not brute_extension(ExtensionQuery(P4, "induced", frozenset(range(4)), frozenset(), "cograph"))
    assert brute_extension(ExtensionQuery(P4, "edge", frozenset({(1, 2)}), frozenset({(0, 1)}), "cograph"))


def test_extension_query_validation():
    with pytest.raises(ArgumentError):
        ExtensionQuery(P4, "induced", frozenset({0}), frozenset({0}), "cograph")
    with pytest.raises(ArgumentError):
        ExtensionQuery(P4, "edge", frozenset({(0, 2)}), frozenset(), "cograph")
    with pytest.raises(ArgumentError):
        ExtensionQuery(P4, "induced", frozenset({9}), frozenset(), "cograph")


def test_flashlight_examples():
    assert flashlight_enumerate(P4, "cograph", "induced") == brute_max_induced(P4, "cograph")
    assert len(flashlight_enumerate(C4, "threshold", "deletion")) == 4
    assert flashlight_enumerate(K3, "split", "deletion") == {K3.edge_set()}


def test_caps_raise():
    big = Graph.complete(7)
    with pytest.raises(CapacityError):
        brute_max_edge_subgraphs(big, "cograph")
    with pytest.raises(CapacityError):
        brute_max_induced(Graph.empty(9), "cograph")


def test_cap_is_configurable(monkeypatch):
    monkeypatch.setattr(oracle.CONFIG, "cap_m", 2)
    with pytest.raises(CapacityError):
        brute_max_edge_subgraphs(P4, "tp")


@pytest.mark.parametrize("mode", ["induced", "deletion", "completion"])
def test_families_are_antichains(mode):
    rnd = random.Random(2)
    for _ in range(20):
        g = random_graph(rnd, rnd.randint(2, 6))
        for cls in CLASSES:
            fam = list(brute_family(g, cls, mode))
            for a in fam:
                for b in fam:
                    assert a == b or not a <= b


def test_completions_dual_to_deletions():
    rnd = random.Random(4)
    for _ in range(20):
        g = random_graph(rnd, rnd.randint(2, 6))
        co = complement(g)
        n = g.n
        everything = Graph.complete(n).edge_set()
        for cls in ("split", "cograph", "threshold"):
            dual = {everything - f for f in brute_max_edge_subgraphs(co, cls)}
            assert brute_min_completions(g, cls) == dual


def test_maximal_matchings_on_paths():
    assert maximal_matchings(P5) == brute_max_edge_subgraphs(P5, "p3free")
