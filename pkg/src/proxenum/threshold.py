"""Minimal threshold deletions.

Threshold graphs are sandwich-monotone, so plain recognition can gate the
greedy completion.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator

from proxenum._complete import greedy_until_stable
from proxenum.errors import ArgumentError
from proxenum.graph import Edge, EdgeSet, Graph, bits, edges_of_rows, subgraph_rows
from proxenum.proximity import EnumerationRun, Solution, proximity_search
from proxenum.recognition import in_class_rows


def _member(rows) -> bool:
    return in_class_rows(tuple(rows), "threshold")


def _complete_rows(g: Graph, rows) -> tuple[int, ...]:
    return greedy_until_stable(g, rows, _member)


def complete_threshold(g: Graph, e0: Iterable[Edge]) -> EdgeSet:
    rows = subgraph_rows(g, e0, "e0")
    if not _member(rows):
        raise ArgumentError("e0 is not a threshold graph")
    return edges_of_rows(_complete_rows(g, rows))


def _neighbor_rows(g: Graph, s_rows, x: int) -> tuple[int, ...]:
    # x becomes universal to N_G(x); everything outside N_G[x] is isolated
    nx = g.rows[x]
    rows = [s_rows[v] & nx if nx >> v & 1 else 0 for v in range(g.n)]
    rows[x] = nx
    for v in bits(nx):
        rows[v] |= 1 << x
    return _complete_rows(g, rows)


def neighbor_threshold(g: Graph, s: Iterable[Edge], x: int) -> EdgeSet:
    g._check(x)
    rows = subgraph_rows(g, s, "s")
    if not _member(rows) or _complete_rows(g, rows) != tuple(rows):
        raise ArgumentError("s is not a minimal threshold deletion of g")
    return edges_of_rows(_neighbor_rows(g, rows, x))


def enumerate_min_threshold_deletions(g: Graph) -> EnumerationRun:
    def neighbors(sol: Solution) -> Iterator[Solution]:
        rows = subgraph_rows(g, sol.payload)
        for x in range(g.n):
            yield Solution.of_edges(edges_of_rows(_neighbor_rows(g, rows, x)))

    start = Solution.of_edges(edges_of_rows(_complete_rows(g, [0] * g.n)))
    return proximity_search(start, neighbors, g)
