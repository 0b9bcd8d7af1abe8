"""Maximal induced sub-cographs and minimal cograph deletions.

Both enumerators are Proximity Search instances. The deletion side relies on
a sandwich decision (is there a cograph between two nested edge sets?) to
drive its greedy completion.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from proxenum._complete import greedy_sandwich
from proxenum.errors import ArgumentError
from proxenum.graph import (
    Edge,
    EdgeSet,
    Graph,
    bits,
    components_rows,
    edges_of_rows,
    isolate,
    subgraph_rows,
    to_mask,
)
from proxenum.proximity import EnumerationRun, Solution, proximity_search
from proxenum.recognition import in_class_rows


@dataclass(frozen=True)
class NeighborEdit:
    """Pre-completion graph of a deletion neighbour, with the bundle that produced it."""

    x: int
    y: int
    isolated: int | None
    rows: tuple[int, ...]

    @property
    def edges(self) -> EdgeSet:
        return edges_of_rows(self.rows)


def _sandwich_rows(r1, r2, mask: int) -> bool:
    if mask & (mask - 1) == 0:
        return True
    parts = components_rows(r1, mask)
    if len(parts) > 1:
        return all(_sandwich_rows(r1, r2, p) for p in parts)
    # g1 connected on mask: some join must separate the co-components of g2
    co = [mask & ~r2[v] & ~(1 << v) for v in range(len(r2))]
    parts = components_rows(co, mask)
    if len(parts) > 1:
        return all(_sandwich_rows(r1, r2, p) for p in parts)
    return False


def sandwich_rows(r1, r2) -> bool:
    return _sandwich_rows(r1, r2, (1 << len(r2)) - 1)


def cograph_sandwich(g1_edges: Iterable[Edge], g2: Graph) -> bool:
    """Whether some cograph H has E(g1) ⊆ E(H) ⊆ E(g2)."""
    r1 = subgraph_rows(g2, g1_edges, "g1_edges")
    return sandwich_rows(r1, g2.rows)


def _complete_vertices(g: Graph, mask: int) -> int:
    for v in range(g.n):
        if mask >> v & 1:
            continue
        trial = mask | (1 << v)
        if in_class_rows(tuple(r & trial if trial >> u & 1 else 0 for u, r in enumerate(g.rows)), "cograph"):
            mask = trial
    return mask


def complete_induced_cograph(g: Graph, x: Iterable[int]) -> frozenset[int]:
    """Grow ``x`` by ascending vertices while the induced graph stays a cograph."""
    mask = to_mask(x)
    for v in bits(mask):
        g._check(v)
    if not in_class_rows(tuple(r & mask if mask >> u & 1 else 0 for u, r in enumerate(g.rows)), "cograph"):
        raise ArgumentError("g[x] is not a cograph")
    return frozenset(bits(_complete_vertices(g, mask)))


def _complete_rows(g: Graph, rows) -> tuple[int, ...]:
    return greedy_sandwich(g, rows, lambda r: sandwich_rows(r, g.rows))


def complete_cograph_deletion(g: Graph, e0: Iterable[Edge]) -> EdgeSet:
    """Add g-edges in ascending order whenever a cograph sandwich still exists."""
    rows = subgraph_rows(g, e0, "e0")
    if not sandwich_rows(rows, g.rows):
        raise ArgumentError("no cograph lies between e0 and g")
    return edges_of_rows(_complete_rows(g, rows))


def neighbor_induced(g: Graph, s: Iterable[int], x: int, y: int) -> frozenset[int]:
    """complete((S ∖ (N_G(x) △ N_S(y))) ∪ {x, y})."""
    smask = to_mask(s)
    g._check(x)
    g._check(y)
    if smask >> x & 1 or not smask >> y & 1:
        raise ArgumentError("need x outside s and y inside s")
    ns_y = g.rows[y] & smask
    base = (smask & ~(g.rows[x] ^ ns_y)) | (1 << x) | (1 << y)
    return frozenset(bits(_complete_vertices(g, base)))


def _twin_by_cut(g: Graph, rows: list[int], x: int, y: int) -> list[int]:
    """Make x a twin of y by cutting y and N(x) away from the y-neighbours x cannot see."""
    isolate(rows, x)
    a = rows[y] & g.rows[x]
    w = rows[y] & ~g.rows[x]
    for v in bits(w):
        rows[v] &= ~a & ~(1 << y)
    rows[y] &= ~w
    for v in bits(a):
        rows[v] &= ~w
    return _attach(g, rows, x, y, a)


def _twin_by_isolation(g: Graph, rows: list[int], x: int, y: int) -> list[int]:
    """Make x a twin of y by isolating the y-neighbours x cannot see."""
    w = rows[y] & ~g.rows[x] & ~(1 << x)
    isolate(rows, x)
    for v in bits(w):
        isolate(rows, v)
    return _attach(g, rows, x, y, rows[y] & g.rows[x])


def _attach(g: Graph, rows: list[int], x: int, y: int, nbrs: int) -> list[int]:
    if g.rows[x] >> y & 1:
        nbrs |= 1 << y
    rows[x] = nbrs
    for v in bits(nbrs):
        rows[v] |= 1 << x
    return rows


def neighbor_edit(g: Graph, s_rows, x: int, y: int, isolated: int | None = None) -> NeighborEdit:
    """Pre-completion graph in which x is a twin of y.

    With ``isolated`` set, that vertex first loses all its edges. The cut
    variant is tried first and the isolation variant is used when the cut
    does not leave a cograph.
    """
    rows = list(s_rows)
    if isolated is not None:
        isolate(rows, isolated)
    out = _twin_by_cut(g, list(rows), x, y)
    if not in_class_rows(tuple(out), "cograph"):
        out = _twin_by_isolation(g, list(rows), x, y)
    return NeighborEdit(x, y, isolated, tuple(out))


def _deletion_rows(g: Graph, s_rows, x: int, y: int, isolated: int | None):
    edit = neighbor_edit(g, s_rows, x, y, isolated)
    if not in_class_rows(edit.rows, "cograph"):
        return None
    return _complete_rows(g, edit.rows)


def _check_solution(g: Graph, s: Iterable[Edge]) -> list[int]:
    rows = subgraph_rows(g, s, "s")
    if not in_class_rows(tuple(rows), "cograph") or _complete_rows(g, rows) != tuple(rows):
        raise ArgumentError("s is not a minimal cograph deletion of g")
    return rows


def neighbor_deletion(g: Graph, s: Iterable[Edge], x: int, y: int, isolated: int | None = None) -> EdgeSet:
    """Minimal cograph deletion obtained by making x a twin of y inside s, then completing.

    Returns ``s`` unchanged when the edit leaves no cograph.
    """
    g._check(x)
    g._check(y)
    if x == y:
        raise ArgumentError("x and y must differ")
    if isolated is not None:
        g._check(isolated)
    rows = _check_solution(g, s)
    out = _deletion_rows(g, rows, x, y, isolated)
    return frozenset(s) if out is None else edges_of_rows(out)


def enumerate_max_induced_subcographs(g: Graph) -> EnumerationRun:
    def neighbors(sol: Solution) -> Iterator[Solution]:
        smask = to_mask(sol.payload)
        for x in range(g.n):
            if smask >> x & 1:
                continue
            for y in bits(smask):
                yield Solution.of_vertices(neighbor_induced(g, sol.payload, x, y))

    start = Solution.of_vertices(complete_induced_cograph(g, ()))
    return proximity_search(start, neighbors, g)


def deletion_neighbors(g: Graph, s_rows) -> Iterator[tuple[int, ...]]:
    """All deletion neighbours: every ordered (x, y), optionally after isolating one other vertex."""
    n = g.n
    for x in range(n):
        for y in range(n):
            if x == y:
                continue
            for w in (None, *range(n)):
                if w == x:
                    continue
                out = _deletion_rows(g, s_rows, x, y, w)
                if out is not None:
                    yield out


def enumerate_min_cograph_deletions(g: Graph) -> EnumerationRun:
    def neighbors(sol: Solution) -> Iterator[Solution]:
        rows = subgraph_rows(g, sol.payload)
        for out in deletion_neighbors(g, rows):
            yield Solution.of_edges(edges_of_rows(out))

    start = Solution.of_edges(edges_of_rows(_complete_rows(g, [0] * g.n)))
    return proximity_search(start, neighbors, g)
