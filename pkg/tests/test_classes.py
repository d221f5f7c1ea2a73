import itertools

import networkx as nx
import pytest
from hypothesis import given, settings
from networkx.algorithms.isomorphism import GraphMatcher

from conftest import graphs, to_nx
from disjoint_paths.classes import (
    P4, THREE_P1, Outcome, PartKind, classify_forbidden, classify_graph, cobipartite_partition, is_cograph,
    is_h_free, join_decomposition, spanning_cbs_split, split_partition,
)
from disjoint_paths.errors import PreconditionError
from disjoint_paths.graph import Graph, complement, disjoint_union, join
from disjoint_paths.patterns import complete, cycle, linear_forest, parse_pattern, path, sp1_p4


def is_clique(g, vs):
    return all(g.has_edge(a, b) for a, b in itertools.combinations(vs, 2))


def is_independent(g, vs):
    return not any(g.has_edge(a, b) for a, b in itertools.combinations(vs, 2))


def brute_split(g):
    return any(is_clique(g, c) and is_independent(g, [v for v in range(g.n) if v not in c])
               for r in range(g.n + 1) for c in itertools.combinations(range(g.n), r))


def brute_cobipartite(g):
    return any(is_clique(g, a) and is_clique(g, [v for v in range(g.n) if v not in a])
               for r in range(g.n + 1) for a in itertools.combinations(range(g.n), r))


@given(graphs(max_n=8))
@settings(max_examples=300)
def test_split_partition_matches_brute_force(g):
    part = split_partition(g)
    assert (part is not None) == brute_split(g)
    if part:
        clique, indep = part
        assert clique | indep == set(range(g.n)) and is_clique(g, clique) and is_independent(g, indep)


@given(graphs(max_n=8))
@settings(max_examples=300)
def test_cobipartite_partition_matches_brute_force(g):
    part = cobipartite_partition(g)
    assert (part is not None) == brute_cobipartite(g)
    if part:
        assert is_clique(g, part[0]) and is_clique(g, part[1])


def cograph_by_definition(g):
    """Recursive: single vertex, or a disconnected graph / disconnected
    complement whose pieces are cographs."""
    h = to_nx(g)

    def rec(nodes):
        if len(nodes) == 1:
            return True
        sub = h.subgraph(nodes)
        comps = list(nx.connected_components(sub))
        if len(comps) == 1:
            comps = list(nx.connected_components(nx.complement(sub)))
            if len(comps) == 1:
                return False
        return all(rec(c) for c in comps)

    return rec(list(range(g.n)))


@given(graphs(max_n=9))
@settings(max_examples=300)
def test_cograph_recognition(g):
    assert is_cograph(g) == cograph_by_definition(g)


def test_spanning_cbs_split():
    g = join(Graph.empty(2), Graph.from_edges(3, [(0, 1)]))
    a, b = spanning_cbs_split(g)
    assert a and b and all(g.has_edge(x, y) for x in a for y in b)
    for bad in (Graph.empty(1), Graph.empty(3), path(4)):
        with pytest.raises(PreconditionError):
            spanning_cbs_split(bad)


def test_join_decomposition_merges_pure_parts():
    c5 = cycle(5)  # 3P1-free, not a union of cliques
    g = join(c5, c5, disjoint_union(complete(2), complete(1)))
    dec = join_decomposition(g)
    assert dec.merged
    assert len(dec.parts) == 2 and len(dec.parts[0]) == 10
    assert dec.kinds == (PartKind.THREE_P1_FREE, PartKind.UNION_OF_CLIQUES)
    assert len(dec.raw_parts) == 3


def test_join_decomposition_without_pure_part():
    # 3K1 is only a union of cliques; 2K2 and K1 are both kinds at once
    g = join(Graph.empty(3), disjoint_union(complete(2), complete(2)), Graph.empty(1))
    dec = join_decomposition(g)
    assert not dec.merged
    assert sorted(k.value for k in dec.kinds) == ["Both", "Both", "UnionOfCliques"]


def test_join_decomposition_rejects_p1p3():
    with pytest.raises(PreconditionError):
        join_decomposition(linear_forest(1, 3))


@given(graphs(max_n=8))
@settings(max_examples=200)
def test_join_decomposition_factors(g):
    try:
        dec = join_decomposition(g)
    except PreconditionError:
        assert not is_h_free(g, parse_pattern("P1+P3"))
        return
    assert is_h_free(g, parse_pattern("P1+P3"))
    where = dec.part_of()
    for u in range(g.n):
        for v in range(g.n):
            if u != v and where[u] != where[v]:
                assert g.has_edge(u, v)
    for part, kind in zip(dec.parts, dec.kinds):
        if kind is PartKind.THREE_P1_FREE:
            assert is_h_free(g.induced(sorted(part)), THREE_P1)


def test_classify_graph_labels():
    names = [str(l) for l in classify_graph(cycle(4))]
    assert "P4Free" in names and "Cobipartite" in names and "GirthAtLeast(4)" in names
    assert [str(l) for l in classify_graph(path(5))][0] == "SP1P4Free(s=1)"
    assert "Split" in [l.name for l in classify_graph(path(4))]
    assert [str(l) for l in classify_graph(cycle(7))] == ["SP1P4Free(s=2)", "GirthAtLeast(7)"]
    assert [l.name for l in classify_graph(cycle(20))] == ["GirthAtLeast"]


# -- the dichotomy, checked against its statement over all small patterns ----

OPEN = [parse_pattern(x) for x in ("3P1", "2P1+P2", "P1+P3")]


def induced_in(big, small):
    return GraphMatcher(to_nx(big), to_nx(small)).subgraph_is_isomorphic()


def expected(h, problem):
    if problem == "kdcs":
        for s in range(0, 6):
            if induced_in(sp1_p4(s), h):
                return Outcome.POLY_FIXED_K_SP1P4, s
        return Outcome.NP_HARD, None
    if induced_in(path(4), h):
        return Outcome.POLY_P4_SUB, None
    if any(nx.is_isomorphic(to_nx(h), to_nx(o)) for o in OPEN):
        return Outcome.OPEN, None
    return Outcome.NP_HARD, None


def small_patterns():
    for atlas in nx.graph_atlas_g()[1:]:
        if atlas.number_of_nodes() > 5:
            break
        yield Graph.from_edges(atlas.number_of_nodes(), atlas.edges())


@pytest.mark.parametrize("problem", ["kdcs", "dcs", "dp"])
def test_classify_forbidden_truth_table(problem):
    count = 0
    for h in small_patterns():
        decision = classify_forbidden(h, problem)
        outcome, s = expected(h, problem)
        assert decision.outcome is outcome, (h.edges(), h.n, decision)
        if s is not None:
            assert decision.s == s
        count += 1
    assert count == 52  # graphs on 1..5 vertices


@pytest.mark.parametrize("name, problem, text", [
    ("C3", "dp", "NPHard(cycle)"), ("claw", "dcs", "NPHard(claw)"), ("2P2", "kdcs", "NPHard(2P2)"),
    ("4P1", "dcs", "NPHard(4P1)"), ("P1+P4", "dp", "NPHard(P1+P4)"), ("P4", "dcs", "Poly_P4Sub"),
    ("3P1", "dp", "Open"), ("2P1+P3", "kdcs", "PolyFixedK_SP1P4(s=2)"), ("P1+P4", "kdcs", "PolyFixedK_SP1P4(s=1)"),
])
def test_classify_forbidden_named(name, problem, text):
    assert str(classify_forbidden(parse_pattern(name), problem)) == text


def test_classify_forbidden_rejects_bad_input():
    with pytest.raises(ValueError):
        classify_forbidden(path(2), "tsp")
    with pytest.raises(ValueError):
        classify_forbidden(Graph.empty(0), "dp")
