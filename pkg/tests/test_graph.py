import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import C4, C5, K3, P4, TWO_K2, disjoint_triangles
from proxenum.errors import ArgumentError, CapacityError, VertexRangeError
from proxenum.graph import (
    Graph,
    TwinKind,
    complement,
    connected_components,
    edge_set,
    find_forbidden,
    induced,
    neighborhood,
    symmetric_difference,
    twin_kind,
)


@st.composite
def graphs(draw, max_n=7):
    n = draw(st.integers(0, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, keep in zip(pairs, chosen) if keep])


def test_neighborhood_examples():
    assert neighborhood(P4, 1) == {0, 2}
    assert neighborhood(P4, 0, closed=True) == {0, 1}
    assert neighborhood(K3, 2, closed=True) == {0, 1, 2}


def test_neighborhood_out_of_range():
    with pytest.raises(VertexRangeError):
        neighborhood(P4, 4)


def test_edge_set_normalises_and_rejects_bad_pairs():
    assert edge_set([(3, 1), (1, 3), (0, 2)]) == {(1, 3), (0, 2)}
    with pytest.raises(ArgumentError):
        edge_set([(2, 2)])
    with pytest.raises(VertexRangeError):
        edge_set([(0, 5)], n=3)


def test_vertex_cap():
    with pytest.raises(CapacityError):
        Graph.empty(65)


def test_complement_examples():
    assert complement(K3).m == 0
    assert complement(C4).edge_set() == {(0, 2), (1, 3)}


@given(graphs())
def test_complement_involution(g):
    assert complement(complement(g)) == g
    co = complement(g)
    for u, v in itertools.combinations(range(g.n), 2):
        assert co.has_edge(u, v) != g.has_edge(u, v)


def test_induced_examples():
    sub, labels = induced(P4, {0, 1, 2})
    assert sub.edge_set() == {(0, 1), (1, 2)} and labels == (0, 1, 2)
    sub, labels = induced(P4, {0, 3})
    assert sub.m == 0 and labels == (0, 3)
    sub, _ = induced(C4, {0, 1, 2})
    assert sub.edge_set() == {(0, 1), (1, 2)}
    assert induced(P4, ())[0].n == 0


@given(graphs())
def test_induced_on_everything_is_identity(g):
    assert induced(g, range(g.n))[0] == g


def test_twin_kind_examples():
    assert twin_kind(Graph.complete(2), None, 0, 1) is TwinKind.TRUE
    assert twin_kind(Graph.empty(2), None, 0, 1) is TwinKind.FALSE
    assert twin_kind(P4, None, 0, 3) is TwinKind.NONE
    # restricted to {0, 2} both vertices are isolated
    assert twin_kind(P4, {0, 2}, 0, 2) is TwinKind.FALSE


def test_twin_kind_needs_distinct_vertices():
    with pytest.raises(ArgumentError):
        twin_kind(P4, None, 1, 1)


@given(graphs(6), st.data())
def test_twin_kind_symmetric(g, data):
    if g.n < 2:
        return
    u, v = data.draw(st.lists(st.integers(0, g.n - 1), min_size=2, max_size=2, unique=True))
    assert twin_kind(g, None, u, v) is twin_kind(g, None, v, u)


def test_find_forbidden_examples():
    assert find_forbidden(P4, "P4") == (0, 1, 2, 3)
    assert find_forbidden(C4, "P4") is None
    cyc = find_forbidden(C5, "C5")
    assert sorted(cyc) == [0, 1, 2, 3, 4]
    assert all(C5.has_edge(cyc[i], cyc[(i + 1) % 5]) for i in range(5))
    assert find_forbidden(C4, "P4", subgraph_edges=[(0, 1), (1, 2), (2, 3)]) == (0, 1, 2, 3)
    assert set(find_forbidden(TWO_K2, "2K2")) == {0, 1, 2, 3}


def test_find_forbidden_rejects_foreign_edges():
    with pytest.raises(ArgumentError):
        find_forbidden(P4, "P4", subgraph_edges=[(0, 3)])
    with pytest.raises(ArgumentError):
        find_forbidden(P4, "K5")


def _induced_p4_brute(g):
    for combo in itertools.permutations(range(g.n), 4):
        a, b, c, d = combo
        present = {(a, b), (b, c), (c, d)}
        ok = all(g.has_edge(u, v) == ((u, v) in present or (v, u) in present) for u, v in itertools.combinations(combo, 2))
        if ok:
            return True
    return False


@given(graphs(7))
def test_find_forbidden_p4_matches_brute_force(g):
    hit = find_forbidden(g, "P4")
    assert (hit is not None) == _induced_p4_brute(g)
    if hit is not None:
        a, b, c, d = hit
        assert g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(c, d)
        assert not (g.has_edge(a, c) or g.has_edge(b, d) or g.has_edge(a, d))


def test_connected_components_examples():
    assert connected_components(disjoint_triangles(2)) == [{0, 1, 2}, {3, 4, 5}]
    assert connected_components(P4, [(0, 1), (2, 3)]) == [{0, 1}, {2, 3}]
    assert connected_components(Graph.empty(3)) == [{0}, {1}, {2}]


def test_symmetric_difference():
    assert symmetric_difference({1, 2}, {2, 3}) == {1, 3}
