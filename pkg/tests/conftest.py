import random

import networkx as nx
import pytest

from proxenum import oracle
from proxenum.graph import Graph


def nx_to_graph(h) -> Graph:
    labels = {v: i for i, v in enumerate(sorted(h.nodes()))}
    return Graph.from_edges(len(labels), [(labels[u], labels[v]) for u, v in h.edges()])


def atlas(max_n: int, min_n: int = 1) -> list[Graph]:
    """One graph per isomorphism class, 1 <= n <= max_n (max_n <= 7)."""
    return [nx_to_graph(h) for h in nx.graph_atlas_g() if min_n <= h.number_of_nodes() <= max_n]


def random_graph(rnd: random.Random, n: int, p: float = 0.5) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rnd.random() < p])


def disjoint_triangles(k: int) -> Graph:
    return Graph.from_edges(3 * k, [(3 * i + a, 3 * i + b) for i in range(k) for a, b in ((0, 1), (0, 2), (1, 2))])


P3 = Graph.from_edges(3, [(0, 1), (1, 2)])
P4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
P5 = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
C4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
C5 = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
K3 = Graph.complete(3)
TWO_K2 = Graph.from_edges(4, [(0, 1), (2, 3)])


@pytest.fixture
def wide_oracle():
    """Raise the oracle edge cap so every graph on six vertices fits."""
    saved = oracle.CONFIG.cap_m
    oracle.CONFIG.cap_m = max(saved, 21)
    yield oracle.CONFIG
    oracle.CONFIG.cap_m = saved


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
