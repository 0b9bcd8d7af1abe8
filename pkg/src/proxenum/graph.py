"""Immutable simple graphs on vertices ``0..n-1`` stored as row bitsets."""

from __future__ import annotations

import enum
import os
from collections.abc import Iterable
from dataclasses import dataclass

from proxenum import _kernels
from proxenum.errors import ArgumentError, CapacityError, VertexRangeError

Edge = tuple[int, int]
EdgeSet = frozenset  # frozenset[Edge], every pair normalised to (min, max)

MAX_VERTICES = int(os.environ.get("PROXENUM_MAX_N", "64"))

PATTERNS = ("P3", "P4", "C4", "2K2", "C5", "K2+K1")


def norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def edge_set(pairs: Iterable[Iterable[int]], n: int | None = None) -> EdgeSet:
    """Normalise ``pairs`` into an EdgeSet, checking range when ``n`` is given."""
    out = set()
    for pair in pairs:
        u, v = pair
        if u == v:
            raise ArgumentError(f"self-loop {u}-{v}")
        if n is not None and not (0 <= u < n and 0 <= v < n):
            raise VertexRangeError(f"edge {u}-{v} out of range for n={n}")
        out.add(norm(u, v))
    return frozenset(out)


def bits(mask: int) -> list[int]:
    """Indices of set bits, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def symmetric_difference(x, y) -> frozenset:
    return frozenset(x) ^ frozenset(y)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; ``rows[v]`` is the neighbourhood bitset of ``v``."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise ArgumentError("negative vertex count")
        if self.n > MAX_VERTICES:
            raise CapacityError(f"n={self.n} exceeds vertex cap {MAX_VERTICES}")
        if len(self.rows) != self.n:
            raise ArgumentError("row count does not match n")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Iterable[int]] = ()) -> Graph:
        rows = [0] * n
        for u, v in edge_set(edges, n):
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> Graph:
        full = (1 << n) - 1
        return cls(n, tuple(full ^ (1 << v) for v in range(n)))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def edges(self) -> list[Edge]:
        """All edges as (min, max), ascending."""
        return [(u, v) for u in range(self.n) for v in bits(self.rows[u] >> (u + 1) << (u + 1))]

    def edge_set(self) -> EdgeSet:
        return frozenset(self.edges())

    def non_edges(self) -> list[Edge]:
        return [(u, v) for u in range(self.n) for v in range(u + 1, self.n) if not self.rows[u] >> v & 1]

    @property
    def m(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def with_edges(self, edges: Iterable[Edge]) -> Graph:
        """Graph on the same vertex set with exactly ``edges``."""
        return Graph.from_edges(self.n, edges)

    def _check(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise VertexRangeError(f"vertex {v} out of range for n={self.n}")

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def graph_from_rows(rows: Iterable[int]) -> Graph:
    rows = tuple(rows)
    return Graph(len(rows), rows)


def rows_from_edges(n: int, edges: Iterable[Edge]) -> list[int]:
    rows = [0] * n
    for u, v in edges:
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return rows


def neighborhood(g: Graph, v: int, closed: bool = False) -> frozenset[int]:
    """N(v), or N[v] when ``closed``."""
    g._check(v)
    row = g.rows[v] | (1 << v) if closed else g.rows[v]
    return frozenset(bits(row))


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.n, tuple(full & ~r & ~(1 << v) for v, r in enumerate(g.rows)))


def induced(g: Graph, x: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """``g[x]`` relabelled to ``0..|x|-1``; the tuple maps new ids to old ones."""
    labels = tuple(sorted(set(x)))
    for v in labels:
        g._check(v)
    index = {v: i for i, v in enumerate(labels)}
    rows = []
    for v in labels:
        rows.append(to_mask(index[w] for w in bits(g.rows[v]) if w in index))
    return Graph(len(labels), tuple(rows)), labels


def induced_mask(g: Graph, mask: int) -> tuple[int, ...]:
    """Rows of ``g[mask]`` kept on the original labels (outside vertices isolated)."""
    return tuple(r & mask if mask >> v & 1 else 0 for v, r in enumerate(g.rows))


class TwinKind(enum.Enum):
    TRUE = "true-twins"
    FALSE = "false-twins"
    NONE = "not-twins"


def twin_kind(g: Graph, restriction: Iterable[int] | None, u: int, v: int) -> TwinKind:
    """Twin relation of ``u`` and ``v`` inside ``g[restriction]``."""
    if u == v:
        raise ArgumentError("twin_kind needs two distinct vertices")
    g._check(u)
    g._check(v)
    mask = g.full_mask if restriction is None else to_mask(restriction)
    if not (mask >> u & 1 and mask >> v & 1):
        raise ArgumentError("u and v must lie in the restriction")
    return _twin_kind_rows(g.rows, mask, u, v)


def _twin_kind_rows(rows, mask: int, u: int, v: int) -> TwinKind:
    nu = rows[u] & mask & ~(1 << v)
    nv = rows[v] & mask & ~(1 << u)
    if nu != nv:
        return TwinKind.NONE
    return TwinKind.TRUE if rows[u] >> v & 1 else TwinKind.FALSE


_TABLE_CACHE: dict[frozenset, tuple] = {}


def tables_for(patterns: Iterable[str]) -> tuple:
    key = frozenset(patterns)
    if key not in _TABLE_CACHE:
        _TABLE_CACHE[key] = _kernels.pattern_tables(key)
    return _TABLE_CACHE[key]


def _arrange(pattern: str, combo: tuple[int, ...], rows) -> tuple[int, ...]:
    """Order the vertices of a matched combo along the pattern's shape."""
    adj = lambda a, b: bool(rows[a] >> b & 1)  # noqa: E731
    if pattern in ("P3", "P4"):
        ends = [v for v in combo if sum(adj(v, w) for w in combo if w != v) == 1]
        path = [min(ends)]
        while len(path) < len(combo):
            path.append(next(w for w in combo if w not in path and adj(path[-1], w)))
        return tuple(path)
    if pattern in ("C4", "C5"):
        cyc = [combo[0]]
        nxt = min(w for w in combo if adj(combo[0], w))
        cyc.append(nxt)
        while len(cyc) < len(combo):
            cyc.append(next(w for w in combo if w not in cyc and adj(cyc[-1], w)))
        return tuple(cyc)
    if pattern == "2K2":
        a = combo[0]
        b = next(w for w in combo if adj(a, w))
        rest = [w for w in combo if w not in (a, b)]
        return (a, b, *rest)
    if pattern == "K2+K1":
        lone = next(v for v in combo if not any(adj(v, w) for w in combo if w != v))
        a, b = [v for v in combo if v != lone]
        return (a, b, lone)
    return combo


def find_pattern_rows(rows: tuple[int, ...], patterns: Iterable[str]) -> tuple[int, ...] | None:
    """First induced occurrence (sorted tuple) of any of ``patterns`` in the row bitsets."""
    n = len(rows)
    if n < 3:
        return None
    if n > 64:
        return _kernels._first_match_py(rows, n, *tables_for(patterns))
    return _kernels.first_match(rows, n, tables_for(patterns))


def find_forbidden(g: Graph, pattern: str, subgraph_edges: Iterable[Edge] | None = None) -> tuple[int, ...] | None:
    """One induced occurrence of ``pattern`` in pattern order, or None.

    With ``subgraph_edges`` the search runs on ``(V(g), subgraph_edges)``.
    """
    if pattern not in PATTERNS:
        raise ArgumentError(f"unknown pattern {pattern!r}")
    rows = g.rows
    if subgraph_edges is not None:
        sub = edge_set(subgraph_edges, g.n)
        for u, v in sub:
            if not g.has_edge(u, v):
                raise ArgumentError(f"edge {u}-{v} not in the host graph")
        rows = tuple(rows_from_edges(g.n, sub))
    combo = find_pattern_rows(rows, (pattern,))
    if combo is None:
        return None
    return _arrange(pattern, combo, rows)


def components_rows(rows, mask: int | None = None) -> list[int]:
    """Connected components (as bitmasks) of the rows restricted to ``mask``."""
    n = len(rows)
    remaining = (1 << n) - 1 if mask is None else mask
    out = []
    while remaining:
        start = remaining & -remaining
        comp = start
        frontier = start
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            nb = rows[low.bit_length() - 1] & remaining & ~comp
            comp |= nb
            frontier |= nb
        out.append(comp)
        remaining &= ~comp
    return out


def connected_components(g: Graph, edge_restriction: Iterable[Edge] | None = None) -> list[frozenset[int]]:
    """Components sorted by smallest member; isolated vertices are singletons."""
    rows = g.rows
    if edge_restriction is not None:
        sub = edge_set(edge_restriction, g.n)
        for u, v in sub:
            if not g.has_edge(u, v):
                raise ArgumentError(f"edge {u}-{v} not in the host graph")
        rows = tuple(rows_from_edges(g.n, sub))
    return [frozenset(bits(c)) for c in components_rows(rows)]


def edges_of_rows(rows) -> EdgeSet:
    return frozenset((u, v) for u, r in enumerate(rows) for v in bits(r >> (u + 1) << (u + 1)))


def add_edge(rows: list[int], u: int, v: int) -> None:
    rows[u] |= 1 << v
    rows[v] |= 1 << u


def remove_edge(rows: list[int], u: int, v: int) -> None:
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)


def isolate(rows: list[int], w: int) -> None:
    for v in bits(rows[w]):
        rows[v] &= ~(1 << w)
    rows[w] = 0


def subgraph_rows(g: Graph, edges: Iterable[Edge], what: str = "edge set") -> list[int]:
    """Rows of ``(V(g), edges)``, checking ``edges ⊆ E(g)``."""
    rows = [0] * g.n
    for u, v in edges:
        if not (0 <= u < g.n and 0 <= v < g.n) or u == v or not g.rows[u] >> v & 1:
            raise ArgumentError(f"{what} contains {u}-{v}, which is not an edge of the host graph")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return rows
