import random

import pytest

from conftest import C4, P4, P5, K3, random_graph
from proxenum import api
from proxenum.cograph import enumerate_min_cograph_deletions
from proxenum.errors import ArgumentError, CapabilityError
from proxenum.graph import Graph, complement
from proxenum.proximity import EnumerationRun, Solution, dual_enumerate, proximity, proximity_search
from proxenum.recognition import canonical_edge_ordering
from proxenum.trivially_perfect import enumerate_min_tp_deletions


def test_proximity_examples():
    t = Solution.of_edges({(1, 2), (2, 3)})
    order = canonical_edge_ordering(t.payload, 5, "cograph")
    assert order.edges == ((1, 2), (2, 3))
    assert proximity(t, t, order) == 2
    assert proximity(Solution.of_edges({(0, 1), (1, 2), (3, 4)}), t, order) == 1
    assert proximity(Solution.of_edges({(0, 1)}), t, order) == 0


def test_proximity_kind_mismatch():
    with pytest.raises(ArgumentError):
        proximity(Solution.of_vertices({0}), Solution.of_edges({(0, 1)}), ())


def test_solution_key_and_format():
    s = Solution.of_edges({(2, 3), (0, 1)})
    assert s.key == ((0, 1), (2, 3)) and s.format() == "0-1 2-3"
    assert Solution.of_vertices({3, 1}).format() == "1 3"


def test_search_examples():
    assert enumerate_min_cograph_deletions(P5).payloads() == {
        frozenset({(0, 1), (1, 2), (3, 4)}),
        frozenset({(0, 1), (2, 3), (3, 4)}),
        frozenset({(1, 2), (2, 3)}),
    }
    assert len(enumerate_min_tp_deletions(C4).solutions()) == 6
    for cls in ("cograph", "threshold", "tp", "p3free"):
        assert len(api.enumerate_solutions(K3, cls, "deletion").solutions()) == 1


def _toy_neighbours(sol):
    # a path 0 - 1 - 2 - 3 - 4 of integer "solutions"
    (v,) = sol.payload
    return [Solution.of_vertices({w}) for w in (v - 1, v + 1) if 0 <= w <= 4]


def test_alternating_output_order():
    run = proximity_search(Solution.of_vertices({0}), _toy_neighbours)
    # depth d: even depths on entry, odd depths on exit
    assert [s.key for s in run] == [(0,), (2,), (4,), (3,), (1,)]
    assert run.stats.solutions == 5


def test_no_duplicates_and_stats_monotone():
    rnd = random.Random(0)
    g = random_graph(rnd, 7, 0.5)
    run = enumerate_min_cograph_deletions(g)
    seen = set()
    last = 0
    for sol in run:
        assert sol.key not in seen
        seen.add(sol.key)
        assert run.stats.neighbor_evaluations >= last
        last = run.stats.neighbor_evaluations
    assert run.visited == seen
    assert run.stats.max_delay_us >= run.stats.mean_delay_us > 0


def test_run_consumed_once():
    run = enumerate_min_cograph_deletions(P4)
    run.solutions()
    with pytest.raises(RuntimeError):
        run.solutions()


def test_empty_run_handle():
    run = EnumerationRun(Graph.empty(0), lambda r: iter(()))
    assert run.solutions() == [] and run.stats.mean_delay_us == 0.0


def test_dual_examples():
    assert len(dual_enumerate(Graph.from_edges(4, [(0, 1), (2, 3)]), "split", "deletion").solutions()) == 2
    full = Graph.complete(4).edge_set()
    co = complement(P4)
    expect = {full - s for s in enumerate_min_cograph_deletions(co).payloads()}
    assert dual_enumerate(P4, "cograph", "completion").payloads() == expect


def test_dual_of_dual_is_identity():
    rnd = random.Random(9)
    for _ in range(15):
        g = random_graph(rnd, rnd.randint(2, 7))
        for cls in ("split", "threshold"):
            direct = api.enumerate_solutions(g, cls, "deletion").payloads()
            full = Graph.complete(g.n).edge_set()
            twice = {full - s for s in dual_enumerate(complement(g), cls, "completion").payloads()}
            assert direct == twice


def test_dual_rejects_other_classes():
    for cls in ("p3free", "tp"):
        with pytest.raises(CapabilityError):
            dual_enumerate(P4, cls, "completion")
    with pytest.raises(CapabilityError):
        dual_enumerate(P4, "cograph", "induced")
