"""Greedy edge completion shared by the sandwich-driven classes."""

from __future__ import annotations

from collections.abc import Callable

from proxenum.graph import Graph, add_edge, remove_edge


def greedy_sandwich(host: Graph, rows: list[int], feasible: Callable[[list[int]], bool]) -> tuple[int, ...]:
    """Add host edges in ascending (min, max) order while ``feasible`` stays true.

    ``feasible`` is a sandwich test against the host, so a rejected edge can
    never become acceptable later and one pass suffices.
    """
    rows = list(rows)
    for u, v in host.edges():
        if rows[u] >> v & 1:
            continue
        add_edge(rows, u, v)
        if not feasible(rows):
            remove_edge(rows, u, v)
    return tuple(rows)


def greedy_until_stable(host: Graph, rows: list[int], member: Callable[[list[int]], bool]) -> tuple[int, ...]:
    """Repeat ascending scans adding any edge that keeps ``member`` true until a scan adds nothing."""
    rows = list(rows)
    changed = True
    while changed:
        changed = False
        for u, v in host.edges():
            if rows[u] >> v & 1:
                continue
            add_edge(rows, u, v)
            if member(rows):
                changed = True
            else:
                remove_edge(rows, u, v)
    return tuple(rows)
