"""Generic Proximity Search driver with alternating-parity output.

A class module supplies an initial maximal solution and a neighbour
function; :func:`proximity_search` walks the implicit solution digraph
depth-first and emits every solution reachable from the start exactly once.
"""

from __future__ import annotations

import time
from collections.abc import Callable, Iterable, Iterator
from dataclasses import dataclass, field

from proxenum.errors import ArgumentError
from proxenum.graph import Edge, Graph

VERTICES = "vertices"
EDGES = "edges"


@dataclass(frozen=True)
class Solution:
    """A vertex set (induced mode) or an edge set (deletion/completion modes)."""

    kind: str
    payload: frozenset

    @property
    def key(self) -> tuple:
        return tuple(sorted(self.payload))

    def __len__(self) -> int:
        return len(self.payload)

    @classmethod
    def of_vertices(cls, vertices: Iterable[int]) -> Solution:
        return cls(VERTICES, frozenset(vertices))

    @classmethod
    def of_edges(cls, edges: Iterable[Edge]) -> Solution:
        return cls(EDGES, frozenset(edges))

    def format(self) -> str:
        if self.kind == VERTICES:
            return " ".join(str(v) for v in self.key)
        return " ".join(f"{u}-{v}" for u, v in self.key)


@dataclass
class RunStats:
    solutions: int = 0
    neighbor_evaluations: int = 0
    max_evaluations_between: int = 0
    max_delay_us: float = 0.0
    total_delay_us: float = 0.0

    @property
    def mean_delay_us(self) -> float:
        return self.total_delay_us / self.solutions if self.solutions else 0.0


@dataclass
class EnumerationRun:
    """Streaming handle over the solutions of one enumeration.

    ``source`` receives the run itself so it can call :meth:`tick` for every
    neighbour evaluation (or the equivalent elementary step).
    """

    host: Graph
    source: Callable[[EnumerationRun], Iterator[Solution]]
    stats: RunStats = field(default_factory=RunStats)
    visited: set = field(default_factory=set)
    _since_last: int = 0
    _started: bool = False

    def tick(self, k: int = 1) -> None:
        self.stats.neighbor_evaluations += k
        self._since_last += k

    def __iter__(self) -> Iterator[Solution]:
        if self._started:
            raise RuntimeError("an EnumerationRun can only be consumed once")
        self._started = True
        last = time.perf_counter()
        for sol in self.source(self):
            now = time.perf_counter()
            delay = (now - last) * 1e6
            st = self.stats
            st.solutions += 1
            st.total_delay_us += delay
            st.max_delay_us = max(st.max_delay_us, delay)
            st.max_evaluations_between = max(st.max_evaluations_between, self._since_last)
            self._since_last = 0
            yield sol
            last = time.perf_counter()
        # trailing work after the last emission also counts toward the delay
        self.stats.max_evaluations_between = max(self.stats.max_evaluations_between, self._since_last)

    def solutions(self) -> list[Solution]:
        return list(self)

    def payloads(self) -> set[frozenset]:
        return {s.payload for s in self}


def proximity(s: Solution, target: Solution, ordering) -> int:
    """Length of the longest prefix of ``ordering`` (target's canonical order) inside ``s``."""
    if s.kind != target.kind:
        raise ArgumentError("proximity between solutions of different kinds")
    seq = getattr(ordering, "edges", None)
    if seq is None:
        seq = getattr(ordering, "sequence", ordering)
    count = 0
    for item in seq:
        if item not in s.payload:
            break
        count += 1
    return count


def proximity_search(
    initial: Solution,
    neighbors: Callable[[Solution], Iterable[Solution]],
    host: Graph | None = None,
) -> EnumerationRun:
    """Depth-first walk over the solution digraph, emitting at even depth on entry
    and at odd depth on exit, so that consecutive outputs are at most a few
    neighbour sweeps apart."""

    def walk(run: EnumerationRun) -> Iterator[Solution]:
        visited = run.visited

        def expand(sol: Solution) -> list[Solution]:
            found = list(neighbors(sol))
            run.tick(len(found))
            uniq = {nb.key: nb for nb in found}
            return [uniq[k] for k in sorted(uniq)]

        visited.add(initial.key)
        yield initial
        stack = [(initial, 0, iter(expand(initial)))]
        while stack:
            sol, depth, children = stack[-1]
            for child in children:
                if child.key not in visited:
                    visited.add(child.key)
                    if (depth + 1) % 2 == 0:
                        yield child
                    stack.append((child, depth + 1, iter(expand(child))))
                    break
            else:
                stack.pop()
                if depth % 2 == 1:
                    yield sol

    return EnumerationRun(host if host is not None else Graph.empty(0), walk)


def dual_enumerate(g: Graph, cls: str, mode: str) -> EnumerationRun:
    """Enumerate via the complement: deletions of g <-> completions of co-g."""
    from proxenum import api

    return api.dual_enumerate(g, cls, mode)
