"""Exponential-time ground truth: subset scans, brute sandwich, extension and Flashlight.

Nothing here shares code with the enumerators beyond the graph container and
the forbidden-pattern tables; the scans themselves live in ``_kernels``.
"""

from __future__ import annotations

import os
from collections.abc import Iterable
from dataclasses import dataclass, field

import numpy as np

from proxenum import _kernels
from proxenum.errors import ArgumentError, CapacityError
from proxenum.graph import Edge, Graph, bits, edge_set, tables_for
from proxenum.recognition import CLASSES, FORBIDDEN

MODES = ("induced", "deletion", "completion")


@dataclass
class OracleConfig:
    cap_n: int = field(default_factory=lambda: int(os.environ.get("ORACLE_CAP_N", "8")))
    cap_m: int = field(default_factory=lambda: int(os.environ.get("ORACLE_CAP_M", "14")))


CONFIG = OracleConfig()


def _tables(cls: str):
    if cls not in CLASSES:
        raise ArgumentError(f"unknown class {cls!r}")
    return tables_for(FORBIDDEN[cls])


def _need(value: int, cap: int, what: str) -> None:
    if value > cap:
        raise CapacityError(f"{what}={value} exceeds oracle cap {cap}")


# The families are cached per (graph, class): Flashlight calls the extension
# oracle once per branch.
_FAMILY_CACHE: dict[tuple, frozenset] = {}
_CACHE_LIMIT = 4096


def _cached(key, build):
    fam = _FAMILY_CACHE.get(key)
    if fam is None:
        fam = build()
        if len(_FAMILY_CACHE) >= _CACHE_LIMIT:
            _FAMILY_CACHE.clear()
        _FAMILY_CACHE[key] = fam
    return fam


def brute_max_induced(g: Graph, cls: str) -> frozenset[frozenset[int]]:
    """All inclusion-maximal X with g[X] in ``cls``."""
    tables = _tables(cls)
    _need(g.n, CONFIG.cap_n, "n")

    def build():
        ok = _kernels.scan_vertex_subsets(g.rows, g.n, tables)
        best = _kernels.maximal_masks(ok)
        return frozenset(frozenset(bits(int(m))) for m in np.flatnonzero(best))

    return _cached(("induced", g, cls), build)


def brute_max_edge_subgraphs(g: Graph, cls: str) -> frozenset[frozenset[Edge]]:
    """All inclusion-maximal F ⊆ E(g) with (V, F) in ``cls``."""
    tables = _tables(cls)
    edges = g.edges()
    _need(len(edges), CONFIG.cap_m, "m")

    def build():
        ok = _kernels.scan_edge_subsets(g.n, (), edges, tables)
        best = _kernels.maximal_masks(ok)
        return frozenset(frozenset(edges[i] for i in bits(int(m))) for m in np.flatnonzero(best))

    return _cached(("deletion", g, cls), build)


def brute_min_completions(g: Graph, cls: str) -> frozenset[frozenset[Edge]]:
    """All inclusion-minimal completions E(g) ∪ F in ``cls`` (F over non-edges)."""
    tables = _tables(cls)
    fill = g.non_edges()
    _need(len(fill), CONFIG.cap_m, "non-edges")
    base = g.edges()

    def build():
        ok = _kernels.scan_edge_subsets(g.n, base, fill, tables)
        best = _kernels.minimal_masks(ok)
        return frozenset(frozenset(base) | frozenset(fill[i] for i in bits(int(m))) for m in np.flatnonzero(best))

    return _cached(("completion", g, cls), build)


def brute_family(g: Graph, cls: str, mode: str) -> frozenset[frozenset]:
    if mode == "induced":
        return brute_max_induced(g, cls)
    if mode == "deletion":
        return brute_max_edge_subgraphs(g, cls)
    if mode == "completion":
        return brute_min_completions(g, cls)
    raise ArgumentError(f"unknown mode {mode!r}")


def brute_sandwich(g1_edges: Iterable[Edge], g2: Graph, cls: str) -> bool:
    """Exhaustive: is some graph in ``cls`` between g1 and g2?"""
    tables = _tables(cls)
    mandatory = edge_set(g1_edges, g2.n)
    for u, v in mandatory:
        if not g2.has_edge(u, v):
            raise ArgumentError(f"mandatory edge {u}-{v} missing from g2")
    optional = [e for e in g2.edges() if e not in mandatory]
    _need(len(optional), CONFIG.cap_m, "optional edges")
    ok = _kernels.scan_edge_subsets(g2.n, sorted(mandatory), optional, tables)
    return bool(ok.any())


@dataclass(frozen=True)
class ExtensionQuery:
    """Is there a maximal solution containing ``required`` and avoiding ``forbidden``?

    ``mode`` is ``induced`` (vertex sets), ``edge`` (maximal edge-subgraphs)
    or ``completion`` (minimal completions; members are fill edges).
    """

    host: Graph
    mode: str
    required: frozenset
    forbidden: frozenset
    cls: str

    def __post_init__(self):
        if self.required & self.forbidden:
            raise ArgumentError("required and forbidden sets intersect")
        if self.mode == "induced":
            for v in self.required | self.forbidden:
                if not 0 <= v < self.host.n:
                    raise ArgumentError(f"vertex {v} out of range")
        elif self.mode in ("edge", "completion"):
            pool = set(self.host.edges() if self.mode == "edge" else self.host.non_edges())
            for e in self.required | self.forbidden:
                if e not in pool:
                    raise ArgumentError(f"{e} is not a candidate element for mode {self.mode}")
        else:
            raise ArgumentError(f"unknown extension mode {self.mode!r}")


_EXT_MODE = {"induced": "induced", "edge": "deletion", "completion": "completion"}


def brute_extension(q: ExtensionQuery) -> bool:
    family = brute_family(q.host, q.cls, _EXT_MODE[q.mode])
    return any(q.required <= s and not (q.forbidden & s) for s in family)


def flashlight_enumerate(g: Graph, cls: str, mode: str) -> frozenset[frozenset]:
    """Binary partition over the ground set, pruned by the extension oracle."""
    if mode == "induced":
        ground: list = list(range(g.n))
        ext_mode = "induced"
    elif mode == "deletion":
        ground = g.edges()
        ext_mode = "edge"
    elif mode == "completion":
        ground = g.non_edges()
        ext_mode = "completion"
    else:
        raise ArgumentError(f"unknown mode {mode!r}")
    base = frozenset(g.edges()) if mode == "completion" else frozenset()
    out = set()
    stack = [(0, frozenset(), frozenset())]
    while stack:
        i, inside, outside = stack.pop()
        if not brute_extension(ExtensionQuery(g, ext_mode, inside, outside, cls)):
            continue
        if i == len(ground):
            out.add(base | inside)
            continue
        x = ground[i]
        stack.append((i + 1, inside, outside | {x}))
        stack.append((i + 1, inside | {x}, outside))
    return frozenset(out)


def maximal_matchings(g: Graph) -> frozenset[frozenset[Edge]]:
    """Brute-force maximal matchings (independent check for triangle-free P3-free deletions)."""
    edges = g.edges()
    _need(len(edges), CONFIG.cap_m, "m")
    matchings = []
    for mask in range(1 << len(edges)):
        used = 0
        ok = True
        for i in bits(mask):
            u, v = edges[i]
            if used >> u & 1 or used >> v & 1:
                ok = False
                break
            used |= 1 << u | 1 << v
        if ok:
            matchings.append((mask, used))
    out = set()
    for mask, used in matchings:
        if all(used >> u & 1 or used >> v & 1 for u, v in edges):
            out.add(frozenset(edges[i] for i in bits(mask)))
    return frozenset(out)
