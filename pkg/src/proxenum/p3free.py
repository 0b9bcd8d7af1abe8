"""P3-free graphs (disjoint unions of cliques): unique completion, sandwich, deletions."""

from __future__ import annotations

from collections.abc import Iterable, Iterator

from proxenum._complete import greedy_sandwich
from proxenum.errors import ArgumentError
from proxenum.graph import Edge, EdgeSet, Graph, bits, components_rows, edges_of_rows, norm, subgraph_rows, to_mask
from proxenum.proximity import EnumerationRun, Solution, proximity_search
from proxenum.recognition import in_class_rows


def unique_p3free_completion(g: Graph) -> EdgeSet:
    """Turn every connected component into a clique."""
    out = set()
    for comp in components_rows(g.rows):
        vs = bits(comp)
        out.update((u, v) for i, u in enumerate(vs) for v in vs[i + 1 :])
    return frozenset(out)


def sandwich_rows(r1, r2) -> bool:
    for comp in components_rows(r1):
        for v in bits(comp):
            if comp & ~r2[v] & ~(1 << v):
                return False
    return True


def p3_sandwich(g1_edges: Iterable[Edge], g2: Graph) -> bool:
    """Whether every component of (V, g1_edges) is a clique of g2."""
    return sandwich_rows(subgraph_rows(g2, g1_edges, "g1_edges"), g2.rows)


def _complete_rows(g: Graph, rows) -> tuple[int, ...]:
    return greedy_sandwich(g, rows, lambda r: sandwich_rows(r, g.rows))


def complete_p3free_deletion(g: Graph, e0: Iterable[Edge]) -> EdgeSet:
    rows = subgraph_rows(g, e0, "e0")
    if not sandwich_rows(rows, g.rows):
        raise ArgumentError("no P3-free graph lies between e0 and g")
    return edges_of_rows(_complete_rows(g, rows))


def _bundles(g: Graph, s_rows, x: int, y: int, joined: int | None = None) -> dict[int, set[Edge]]:
    ns_x, ns_y, ng_y = s_rows[x], s_rows[y], g.rows[y]
    if joined is None:
        joined = ns_x & ng_y
    left = ns_x & ~joined
    bundles = {
        x: {norm(x, w) for w in bits(joined)} | {norm(x, y)},
        y: {norm(y, w) for w in bits(joined)} | {norm(x, y)},
    }
    for v in bits(ns_y & ~(1 << x)):
        bundles[v] = {norm(v, w) for w in bits(ns_y & ~(1 << y) & ~(1 << v))}
    for v in bits(joined):
        bundles[v] = {norm(v, w) for w in bits(joined & ~(1 << v))} | {norm(v, y)}
    for v in bits(left):
        bundles[v] = {norm(v, w) for w in bits(left & ~(1 << v))}
    for v in range(g.n):
        if v not in bundles:
            bundles[v] = {norm(v, w) for w in bits(s_rows[v])}
    return bundles


def _neighbor_rows(g: Graph, s_rows, x: int, y: int, joined: int | None = None) -> tuple[int, ...]:
    rows = [0] * g.n
    for bundle in _bundles(g, s_rows, x, y, joined).values():
        for u, v in bundle:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
    return _complete_rows(g, rows)


def neighbor_p3(g: Graph, s: Iterable[Edge], x: int, y: int) -> EdgeSet:
    """Solution in which x and y share a clique: x's clique keeps only members adjacent to y in g."""
    rows = subgraph_rows(g, s, "s")
    g._check(x)
    g._check(y)
    if not g.rows[x] >> y & 1 or rows[x] >> y & 1:
        raise ArgumentError("xy must be an edge of g missing from s")
    if not in_class_rows(tuple(rows), "p3free"):
        raise ArgumentError("s is not P3-free")
    return edges_of_rows(_neighbor_rows(g, rows, x, y))


def neighbor_p3_join(g: Graph, s: Iterable[Edge], x: int, y: int, joined: Iterable[int]) -> EdgeSet:
    """Like :func:`neighbor_p3`, but only ``joined`` ⊆ N_S(x) ∩ N_G(y) follows x into y's new clique."""
    rows = subgraph_rows(g, s, "s")
    g._check(x)
    g._check(y)
    if not g.rows[x] >> y & 1 or rows[x] >> y & 1:
        raise ArgumentError("xy must be an edge of g missing from s")
    if not in_class_rows(tuple(rows), "p3free"):
        raise ArgumentError("s is not P3-free")
    mask = to_mask(joined)
    if mask & ~(rows[x] & g.rows[y]):
        raise ArgumentError("joined must lie inside N_S(x) ∩ N_G(y)")
    return edges_of_rows(_neighbor_rows(g, rows, x, y, mask))


def _subsets(mask: int) -> Iterator[int]:
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def p3_neighbors(g: Graph, s_rows) -> Iterator[tuple[int, ...]]:
    """For every ordered xy ∈ E(g) ∖ s and every J ⊆ N_S(x) ∩ N_G(y): the clique {x, y} ∪ J.

    J = N_S(x) ∩ N_G(y) comes first; the family is exponential in the clique size.
    """
    for x in range(g.n):
        for y in bits(g.rows[x] & ~s_rows[x]):
            for joined in _subsets(s_rows[x] & g.rows[y]):
                yield _neighbor_rows(g, s_rows, x, y, joined)


def enumerate_min_p3free_deletions(g: Graph) -> EnumerationRun:
    def neighbors(sol: Solution) -> Iterator[Solution]:
        rows = subgraph_rows(g, sol.payload)
        for out in p3_neighbors(g, rows):
            yield Solution.of_edges(edges_of_rows(out))

    start = Solution.of_edges(edges_of_rows(_complete_rows(g, [0] * g.n)))
    return proximity_search(start, neighbors, g)


def enumerate_min_p3free_completions(g: Graph) -> EnumerationRun:
    """The single minimal completion, as a one-element run."""

    def source(run: EnumerationRun) -> Iterator[Solution]:
        run.tick()
        yield Solution.of_edges(unique_p3free_completion(g) | g.edge_set())

    return EnumerationRun(g, source)
