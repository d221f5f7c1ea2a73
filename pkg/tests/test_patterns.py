import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st
from networkx.algorithms.isomorphism import GraphMatcher

from conftest import graphs, to_nx
from disjoint_paths.graph import Graph
from disjoint_paths.patterns import (
    claw, complete, cycle, find_induced, linear_forest, parse_pattern, path, sp1_p4,
)

PATTERNS = [path(4), linear_forest(1, 1, 1), linear_forest(1, 3), linear_forest(2, 2), linear_forest(1, 1, 2),
            linear_forest(1, 4), cycle(4), cycle(5), claw(), complete(3), sp1_p4(2)]


def assert_induced_copy(g, h, phi):
    assert len(set(phi.values())) == h.n
    for a in range(h.n):
        for b in range(a + 1, h.n):
            assert h.has_edge(a, b) == g.has_edge(phi[a], phi[b])


@given(graphs(max_n=9), st.sampled_from(PATTERNS))
@settings(max_examples=300)
def test_find_induced_agrees_with_networkx(g, h):
    phi = find_induced(g, h)
    expected = GraphMatcher(to_nx(g), to_nx(h)).subgraph_is_isomorphic()
    assert (phi is not None) == expected
    if phi is not None:
        assert_induced_copy(g, h, phi)


def test_induced_not_just_subgraph():
    k4 = complete(4)
    assert find_induced(k4, path(3)) is None
    assert find_induced(cycle(5), path(4)) is not None
    assert find_induced(cycle(4), path(4)) is None


def test_pattern_too_large():
    with pytest.raises(ValueError):
        find_induced(complete(10), Graph.empty(9))


def test_smaller_graph_is_free():
    assert find_induced(path(3), path(4)) is None


@pytest.mark.parametrize("name, n, m", [
    ("P4", 4, 3), ("3P1", 3, 0), ("P1+P3", 4, 2), ("2P1+P2", 4, 1), ("3P1+P4", 7, 3), ("C5", 5, 5),
    ("K1,3", 4, 3), ("claw", 4, 3), ("K4", 4, 6), ("co-C5", 5, 5), ("co-P4", 4, 3), ("2P2", 4, 2),
])
def test_parse_pattern(name, n, m):
    h = parse_pattern(name)
    assert (h.n, h.m) == (n, m)


def test_parse_pattern_shapes():
    assert nx.is_isomorphic(to_nx(parse_pattern("co-P4")), to_nx(path(4)))
    assert nx.is_isomorphic(to_nx(parse_pattern("P1+P4")), to_nx(sp1_p4(1)))
    with pytest.raises(ValueError):
        parse_pattern("Q3")
