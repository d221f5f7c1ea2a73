import itertools

import networkx as nx
import pytest
from hypothesis import strategies as st

from disjoint_paths.graph import Graph
from disjoint_paths.instance import Instance


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


@st.composite
def graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, chosen) if keep])


@st.composite
def instances(draw, kind="dcs", min_n=2, max_n=8, max_k=3, max_set=3):
    g = draw(graphs(min_n, max_n))
    order = draw(st.permutations(range(g.n)))
    k = draw(st.integers(1, max_k))
    sets, at = [], 0
    for _ in range(k):
        size = 2 if kind == "dp" else draw(st.integers(1, max_set))
        if at + size > g.n:
            break
        sets.append(tuple(order[at:at + size]))
        at += size
    if not sets:
        sets = [tuple(order[:2])] if kind == "dp" and g.n >= 2 else [tuple(order[:1])]
    return Instance(kind, g, sets)


@pytest.fixture
def worked_example():
    """Seven vertices: z1 - a - z1 - b with b adjacent to three z2 vertices."""
    g = Graph.from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 4), (3, 5), (3, 6)])
    return Instance("dcs", g, [(0, 2), (4, 5, 6)])
