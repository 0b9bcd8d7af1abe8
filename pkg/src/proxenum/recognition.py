"""Class membership, cotrees and canonical construction orderings."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from functools import lru_cache

from proxenum.errors import ArgumentError, ClassMembershipError
from proxenum.graph import (
    Edge,
    Graph,
    bits,
    complement,
    components_rows,
    find_pattern_rows,
    norm,
    rows_from_edges,
)

CLASSES = ("split", "cograph", "p3free", "threshold", "tp")

FORBIDDEN = {
    "split": ("C4", "2K2", "C5"),
    "cograph": ("P4",),
    "p3free": ("P3",),
    "threshold": ("P4", "C4", "2K2"),
    "tp": ("P4", "C4"),
}

ORDERED_CLASSES = ("cograph", "p3free", "threshold", "tp")


def _check_class(cls: str, allowed=CLASSES) -> None:
    if cls not in allowed:
        raise ArgumentError(f"unknown or unsupported class {cls!r}; expected one of {allowed}")


def in_class_rows(rows: tuple[int, ...], cls: str) -> bool:
    return find_pattern_rows(tuple(rows), FORBIDDEN[cls]) is None


def recognize(g: Graph, cls: str) -> bool:
    """True iff ``g`` has no induced forbidden pattern of ``cls``."""
    _check_class(cls)
    return in_class_rows(g.rows, cls)


# ---------------------------------------------------------------------------
# cotrees
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Cotree:
    """Normalised cotree node: ``kind`` is ``leaf``, ``union`` or ``join``."""

    kind: str
    vertex: int | None = None
    children: tuple[Cotree, ...] = ()

    def leaves(self) -> list[int]:
        if self.kind == "leaf":
            return [self.vertex]
        return [v for c in self.children for v in c.leaves()]

    def realize(self, n: int) -> Graph:
        """Expand back into the graph it represents on ``n`` vertices."""
        rows = [0] * n

        def walk(node: Cotree) -> int:
            if node.kind == "leaf":
                return 1 << node.vertex
            masks = [walk(c) for c in node.children]
            if node.kind == "join":
                for i, a in enumerate(masks):
                    for b in masks[i + 1 :]:
                        for u in bits(a):
                            rows[u] |= b
                        for u in bits(b):
                            rows[u] |= a
            return sum(masks)

        walk(self)
        return Graph(n, tuple(rows))

    def __str__(self) -> str:
        if self.kind == "leaf":
            return str(self.vertex)
        return f"{self.kind}({', '.join(map(str, self.children))})"


def build_cotree(g: Graph) -> Cotree | None:
    """Cotree of ``g`` by alternating component / co-component splits; None if not a cograph."""
    if g.n == 0:
        return None
    co = complement(g).rows

    def build(mask: int) -> Cotree | None:
        if mask & (mask - 1) == 0:
            return Cotree("leaf", mask.bit_length() - 1)
        parts = components_rows(g.rows, mask)
        kind = "union"
        if len(parts) == 1:
            parts = components_rows(co, mask)
            kind = "join"
            if len(parts) == 1:
                return None
        children = []
        for p in parts:
            child = build(p)
            if child is None:
                return None
            children.append(child)
        return Cotree(kind, None, tuple(children))

    return build(g.full_mask)


# ---------------------------------------------------------------------------
# canonical orderings
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ConstructionOrdering:
    """Valid class-specific build sequence ``sequence`` with per-position witnesses.

    Witnesses: cograph / p3free -> position of the earliest twin (None at
    position 0); threshold -> ``"isolated"`` or ``"universal"``; tp -> None.
    """

    cls: str
    sequence: tuple[int, ...]
    witness: tuple

    def position(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.sequence)}


@dataclass(frozen=True)
class EdgeOrdering:
    edges: tuple[Edge, ...]

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self):
        return iter(self.edges)


def _has_twin(rows, prefix: int, v: int) -> bool:
    mask = prefix | (1 << v)
    nv = rows[v] & mask
    for u in bits(prefix):
        if nv & ~(1 << u) == rows[u] & mask & ~(1 << v):
            return True
    return False


def _isolated_or_universal(rows, prefix: int, v: int) -> bool:
    nv = rows[v] & prefix
    return nv == 0 or nv == prefix


def _universal_to_component(rows, prefix: int, v: int) -> bool:
    mask = prefix | (1 << v)
    comp = 1 << v
    frontier = comp
    while frontier:
        low = frontier & -frontier
        frontier ^= low
        nb = rows[low.bit_length() - 1] & mask & ~comp
        comp |= nb
        frontier |= nb
    return comp & ~(1 << v) & ~rows[v] == 0


_VALID = {
    "cograph": _has_twin,
    "threshold": _isolated_or_universal,
    "tp": _universal_to_component,
}


def valid_extension(rows, prefix: int, v: int, cls: str) -> bool:
    """Whether ``v`` may follow a prefix (given as a vertex mask) under ``cls``."""
    if prefix == 0:
        return True
    if cls == "p3free":
        return _has_twin(rows, prefix, v)
    return _VALID[cls](rows, prefix, v)


def _lex_smallest(rows: tuple[int, ...], vertex_mask: int, cls: str) -> tuple[int, ...]:
    """Lexicographically smallest valid ordering of ``vertex_mask`` (greedy + memoised lookahead)."""
    check = _VALID[cls]

    @lru_cache(maxsize=None)
    def feasible(prefix: int) -> bool:
        if prefix == vertex_mask:
            return True
        for v in bits(vertex_mask & ~prefix):
            if (prefix == 0 or check(rows, prefix, v)) and feasible(prefix | (1 << v)):
                return True
        return False

    order = []
    prefix = 0
    while prefix != vertex_mask:
        for v in bits(vertex_mask & ~prefix):
            if (prefix == 0 or check(rows, prefix, v)) and feasible(prefix | (1 << v)):
                order.append(v)
                prefix |= 1 << v
                break
        else:
            raise ClassMembershipError(f"graph admits no {cls} construction ordering")
    return tuple(order)


def _p3free_order(rows: tuple[int, ...], vertex_mask: int) -> tuple[int, ...]:
    comps = components_rows(rows, vertex_mask)
    for c in comps:
        for v in bits(c):
            if (rows[v] & vertex_mask) | (1 << v) != c:
                raise ClassMembershipError("graph is not a disjoint union of cliques")
    reps = [c & -c for c in comps]
    first = sorted(r.bit_length() - 1 for r in reps)
    rest = sorted(bits(vertex_mask & ~sum(reps)))
    return tuple(first + rest)


def _witnesses(rows, order, cls):
    out = []
    prefix = 0
    for pos, v in enumerate(order):
        if pos == 0:
            out.append(None)
        elif cls in ("cograph", "p3free"):
            mask = prefix | (1 << v)
            nv = rows[v] & mask
            out.append(
                next(i for i, u in enumerate(order[:pos]) if nv & ~(1 << u) == rows[u] & mask & ~(1 << v))
            )
        elif cls == "threshold":
            out.append("isolated" if rows[v] & prefix == 0 else "universal")
        else:
            out.append(None)
        prefix |= 1 << v
    return tuple(out)


def ordering_rows(rows: tuple[int, ...], vertex_mask: int, cls: str) -> tuple[int, ...]:
    """Canonical ordering of the vertices in ``vertex_mask`` (rows restricted to it)."""
    rows = tuple(r & vertex_mask for r in rows)
    if cls == "p3free":
        return _p3free_order(rows, vertex_mask)
    if find_pattern_rows(rows, FORBIDDEN[cls]) is not None:
        raise ClassMembershipError(f"graph is not {cls}")
    return _lex_smallest(rows, vertex_mask, cls)


def canonical_vertex_ordering(s: Graph, cls: str) -> ConstructionOrdering:
    """Lexicographically smallest valid construction ordering of ``s``."""
    _check_class(cls, ORDERED_CLASSES)
    order = ordering_rows(s.rows, s.full_mask, cls)
    return ConstructionOrdering(cls, order, _witnesses(s.rows, order, cls))


def edges_along(rows, order: Iterable[int]) -> tuple[Edge, ...]:
    """Edges ``v_j v_i`` (i < j) grouped by j, i ascending in ordering position."""
    out = []
    seen = []
    for v in order:
        for u in seen:
            if rows[v] >> u & 1:
                out.append(norm(u, v))
        seen.append(v)
    return tuple(out)


def canonical_edge_ordering(s_edges: Iterable[Edge], host_n: int, cls: str) -> EdgeOrdering:
    _check_class(cls, ORDERED_CLASSES)
    rows = tuple(rows_from_edges(host_n, s_edges))
    order = ordering_rows(rows, (1 << host_n) - 1, cls)
    return EdgeOrdering(edges_along(rows, order))


def is_valid_ordering(rows, order: Iterable[int], cls: str) -> bool:
    """Position-by-position validity check of a construction ordering."""
    prefix = 0
    for v in order:
        if prefix and not valid_extension(rows, prefix, v, cls):
            return False
        prefix |= 1 << v
    return True
