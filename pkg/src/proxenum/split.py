"""Minimal split completions through maximal stable sets of an auxiliary graph.

Every minimal split completion is induced by a maximal stable set; after
pruning the marked vertices whose non-neighbourhood is stable, maximal
stable sets of what is left correspond one-to-one with minimal completions.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from proxenum.errors import ArgumentError
from proxenum.graph import Edge, EdgeSet, Graph, bits, complement, induced, to_mask
from proxenum.proximity import EnumerationRun, Solution


@dataclass(frozen=True)
class SplitCompletion:
    stable_set: frozenset[int]
    clique: frozenset[int]
    fill_edges: EdgeSet
    edges: EdgeSet


@dataclass(frozen=True)
class AuxiliaryGraph:
    graph: Graph
    survivors: tuple[int, ...]

    def to_host(self, vertices: Iterable[int]) -> frozenset[int]:
        return frozenset(self.survivors[v] for v in vertices)


def mark_candidates(g: Graph) -> frozenset[int]:
    """Mark y whenever an unmarked neighbour x has N[x] ⊆ N[y].

    Marks every redundant vertex and all but one of each true-twin class.
    """
    marked = 0
    closed = [r | (1 << v) for v, r in enumerate(g.rows)]
    for x in range(g.n):
        if marked >> x & 1:
            continue
        for y in bits(g.rows[x]):
            if not marked >> y & 1 and closed[x] & ~closed[y] == 0:
                marked |= 1 << y
    return frozenset(bits(marked))


def _is_stable(g: Graph, mask: int) -> bool:
    return all(g.rows[v] & mask == 0 for v in bits(mask))


def auxiliary_graph(g: Graph) -> AuxiliaryGraph:
    removed = 0
    for x in mark_candidates(g):
        if _is_stable(g, g.full_mask & ~(g.rows[x] | (1 << x))):
            removed |= 1 << x
    sub, labels = induced(g, bits(g.full_mask & ~removed))
    return AuxiliaryGraph(sub, labels)


def enumerate_mis(g: Graph, tick=None) -> Iterator[frozenset[int]]:
    """Maximal independent sets, vertex-sequential backtracking with unique parents.

    Level i holds the maximal stable sets of ``g[0..i-1]``; a set S spawns S
    itself (or S + i when S misses N(i)) and, when S is the greedy completion
    of S - N(i), the set (S - N(i)) + i if that is maximal. Depth-first, so
    space stays polynomial and every branch reaches a leaf.
    """
    n = g.n
    rows = g.rows
    if n == 0:
        yield frozenset()
        return

    def greedy(base: int, upto: int) -> int:
        s = base
        for u in range(upto):
            if not s >> u & 1 and rows[u] & s == 0:
                s |= 1 << u
        return s

    def maximal_in(s: int, upto: int) -> bool:
        for u in range(upto):
            if not s >> u & 1 and rows[u] & s == 0:
                return False
        return True

    stack = [(1, 1)]  # (stable set mask, number of processed vertices)
    while stack:
        s, i = stack.pop()
        if tick is not None:
            tick()
        if i == n:
            yield frozenset(bits(s))
            continue
        nb = rows[i]
        if s & nb == 0:
            stack.append((s | (1 << i), i + 1))
            continue
        kept = s & ~nb
        alt = kept | (1 << i)
        children = [(s, i + 1)]
        if greedy(kept, i) == s and maximal_in(alt, i + 1):
            children.append((alt, i + 1))
        stack.extend(reversed(children))


def completion_from_stable_set(g: Graph, s: Iterable[int]) -> SplitCompletion:
    smask = to_mask(s)
    if not _is_stable(g, smask):
        raise ArgumentError("stable set expected")
    clique = [v for v in range(g.n) if not smask >> v & 1]
    fill = frozenset((u, v) for i, u in enumerate(clique) for v in clique[i + 1 :] if not g.has_edge(u, v))
    return SplitCompletion(
        frozenset(bits(smask)),
        frozenset(clique),
        fill,
        frozenset(g.edges()) | fill,
    )


def enumerate_min_split_completions(g: Graph) -> EnumerationRun:
    def source(run: EnumerationRun) -> Iterator[Solution]:
        aux = auxiliary_graph(g)
        for stable in enumerate_mis(aux.graph, tick=run.tick):
            yield Solution.of_edges(completion_from_stable_set(g, aux.to_host(stable)).edges)

    return EnumerationRun(g, source)


def _complement_edges(n: int, edges: Iterable[Edge]) -> frozenset[Edge]:
    present = set(edges)
    return frozenset((u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in present)


def enumerate_max_split_deletions(g: Graph) -> EnumerationRun:
    co = complement(g)

    def source(run: EnumerationRun) -> Iterator[Solution]:
        inner = enumerate_min_split_completions(co)
        inner.tick = run.tick
        for sol in inner:
            yield Solution.of_edges(_complement_edges(g.n, sol.payload))

    return EnumerationRun(g, source)


def greedy_stable(g: Graph, mask: int) -> int:
    """Extend a stable set by ascending vertices."""
    for v in range(g.n):
        if not mask >> v & 1 and g.rows[v] & mask == 0:
            mask |= 1 << v
    return mask


def mis_neighbors(g: Graph, stable: Iterable[int]) -> list[frozenset[int]]:
    """greedy((I ∖ N(v)) ∪ {v}) for every v outside the maximal stable set I."""
    mask = to_mask(stable)
    out = []
    for v in range(g.n):
        if not mask >> v & 1:
            out.append(frozenset(bits(greedy_stable(g, (mask & ~g.rows[v]) | (1 << v)))))
    return out
