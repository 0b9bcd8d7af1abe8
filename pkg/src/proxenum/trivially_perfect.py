"""Minimal trivially perfect deletions.

The class is not sandwich-monotone (two edges may have to leave together), so
completion is gated by the sandwich test rather than by recognition.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator

from proxenum._complete import greedy_sandwich
from proxenum.errors import ArgumentError
from proxenum.graph import Edge, EdgeSet, Graph, bits, components_rows, edges_of_rows, norm, subgraph_rows, to_mask
from proxenum.proximity import EnumerationRun, Solution, proximity_search
from proxenum.recognition import in_class_rows


def _component_of(rows, mask: int, v: int) -> int:
    comp = frontier = 1 << v
    while frontier:
        low = frontier & -frontier
        frontier ^= low
        nb = rows[low.bit_length() - 1] & mask & ~comp
        comp |= nb
        frontier |= nb
    return comp


def sandwich_rows(r1, r2, order=None) -> bool:
    """Eliminate vertices universal in g2 to their g1-component until none are left."""
    remaining = (1 << len(r2)) - 1
    order = list(range(len(r2))) if order is None else list(order)
    while remaining:
        for v in order:
            if remaining >> v & 1:
                comp = _component_of(r1, remaining, v)
                if comp & ~r2[v] & ~(1 << v) == 0:
                    remaining &= ~(1 << v)
                    break
        else:
            return False
    return True


def tp_sandwich(g1_edges: Iterable[Edge], g2: Graph) -> bool:
    return sandwich_rows(subgraph_rows(g2, g1_edges, "g1_edges"), g2.rows)


def _complete_rows(g: Graph, rows) -> tuple[int, ...]:
    return greedy_sandwich(g, rows, lambda r: sandwich_rows(r, g.rows))


def complete_tp(g: Graph, e0: Iterable[Edge]) -> EdgeSet:
    rows = subgraph_rows(g, e0, "e0")
    if not sandwich_rows(rows, g.rows):
        raise ArgumentError("no trivially perfect graph lies between e0 and g")
    return edges_of_rows(_complete_rows(g, rows))


def _bundles(g: Graph, s_rows, c: int, x: int) -> dict[int, set[Edge]]:
    n = g.n
    ns_x, ng_x = s_rows[x], g.rows[x]
    cx = _component_of(s_rows, (1 << n) - 1, x)

    def star(v: int, mask: int) -> set[Edge]:
        return {norm(v, w) for w in bits(s_rows[v] & mask)}

    bundles = {x: {norm(x, w) for w in bits(ns_x | (c & ng_x))}}
    for v in bits(ns_x):
        bundles[v] = star(v, ns_x)
    for v in bits(cx & ~ns_x & ~(1 << x)):
        bundles[v] = star(v, ~ns_x)
    for v in bits(c & ng_x):
        bundles[v] = star(v, ng_x) | {norm(v, x)}
    for v in bits(c & ~ng_x):
        bundles[v] = star(v, ~ng_x)
    for v in range(n):
        if v not in bundles:
            bundles[v] = star(v, -1)
    return bundles


def _neighbor_rows(g: Graph, s_rows, c: int, x: int) -> tuple[int, ...]:
    rows = [0] * g.n
    for bundle in _bundles(g, s_rows, c, x).values():
        for u, v in bundle:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
    return _complete_rows(g, rows)


def neighbor_tp(g: Graph, s: Iterable[Edge], c: Iterable[int], x: int) -> EdgeSet:
    """Solution in which x becomes universal to its part of component c."""
    g._check(x)
    rows = subgraph_rows(g, s, "s")
    if not in_class_rows(tuple(rows), "tp"):
        raise ArgumentError("s is not trivially perfect")
    cmask = to_mask(c)
    if cmask not in components_rows(rows):
        raise ArgumentError("c is not a component of s")
    if cmask >> x & 1:
        raise ArgumentError("c must not be the component of x")
    return edges_of_rows(_neighbor_rows(g, rows, cmask, x))


def _universal_rows(g: Graph, s_rows, x: int, y: int) -> tuple[int, ...]:
    # g[Y] part of s joined to x, everything else keeps its s-edges away from Y and x
    rest = ((1 << g.n) - 1) & ~y & ~(1 << x)
    rows = [s_rows[v] & (y if y >> v & 1 else rest) for v in range(g.n)]
    rows[x] = y
    for v in bits(y):
        rows[v] |= 1 << x
    return _complete_rows(g, rows)


def neighbor_tp_universal(g: Graph, s: Iterable[Edge], x: int, y: Iterable[int]) -> EdgeSet:
    """Solution in which x is universal to y ⊆ N_G(x) and y is cut off from the rest of s."""
    g._check(x)
    rows = subgraph_rows(g, s, "s")
    if not in_class_rows(tuple(rows), "tp"):
        raise ArgumentError("s is not trivially perfect")
    ymask = to_mask(y)
    if ymask & ~g.rows[x]:
        raise ArgumentError("y must lie inside N_G(x)")
    return edges_of_rows(_universal_rows(g, rows, x, ymask))


def _subsets(mask: int) -> Iterator[int]:
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def tp_neighbors(g: Graph, s_rows) -> Iterator[tuple[int, ...]]:
    """Component neighbours for every (x, C), then the universal-to-Y family for every Y ⊆ N_G(x).

    The second family alone already reaches every target; its size is
    exponential in the maximum degree.
    """
    comps = components_rows(s_rows)
    for x in range(g.n):
        for c in comps:
            if not c >> x & 1:
                yield _neighbor_rows(g, s_rows, c, x)
    for x in range(g.n):
        for y in _subsets(g.rows[x]):
            yield _universal_rows(g, s_rows, x, y)


def enumerate_min_tp_deletions(g: Graph) -> EnumerationRun:
    def neighbors(sol: Solution) -> Iterator[Solution]:
        rows = subgraph_rows(g, sol.payload)
        for out in tp_neighbors(g, rows):
            yield Solution.of_edges(edges_of_rows(out))

    start = Solution.of_edges(edges_of_rows(_complete_rows(g, [0] * g.n)))
    return proximity_search(start, neighbors, g)
