import networkx as nx
import pytest
from hypothesis import given, strategies as st

from disjoint_paths.matching import (
    Bigraph, MatchingCertificateError, check_certificate, has_matching_of_size, has_perfect_matching_on_left,
    konig_cover, max_matching, max_matching_general,
)


@st.composite
def bigraphs(draw):
    a, b = draw(st.integers(0, 8)), draw(st.integers(0, 8))
    cells = [(i, j) for i in range(a) for j in range(b)]
    keep = draw(st.lists(st.booleans(), min_size=len(cells), max_size=len(cells)))
    return Bigraph(a, b, [c for c, k in zip(cells, keep) if k])


def reference_size(b):
    g = nx.Graph()
    left = [("l", i) for i in range(b.n_left)]
    g.add_nodes_from(left)
    g.add_nodes_from(("r", j) for j in range(b.n_right))
    g.add_edges_from((("l", i), ("r", j)) for i, j in b.edges)
    return len(nx.bipartite.hopcroft_karp_matching(g, top_nodes=left)) // 2


@given(bigraphs())
def test_matching_size_matches_networkx(b):
    pairs = max_matching(b, certify=True)
    assert len(pairs) == reference_size(b)
    assert len({a for a, _ in pairs}) == len(pairs) == len({r for _, r in pairs})
    cover_l, cover_r = konig_cover(b, pairs)
    assert len(cover_l) + len(cover_r) == len(pairs)


def test_certificate_rejects_non_maximum():
    b = Bigraph(2, 2, [(0, 0), (0, 1), (1, 0)])
    with pytest.raises(MatchingCertificateError):
        check_certificate(b, [(0, 0)])
    with pytest.raises(MatchingCertificateError):
        check_certificate(b, [(1, 1)])
    with pytest.raises(MatchingCertificateError):
        check_certificate(b, [(0, 0), (1, 0)])
    check_certificate(b, [(0, 1), (1, 0)])


def test_helpers():
    b = Bigraph(2, 1, [(0, 0), (1, 0)])
    assert has_matching_of_size(b, 1) and not has_matching_of_size(b, 2)
    assert not has_perfect_matching_on_left(b)
    with pytest.raises(ValueError):
        Bigraph(1, 1, [(0, 3)])


def test_general_matching_handles_odd_cycles():
    triangle_plus = [("a", "b"), ("b", "c"), ("c", "a"), ("c", "d")]
    m = max_matching_general(triangle_plus)
    assert len(m) == 2
    assert set().union(*m) == {"a", "b", "c", "d"}
