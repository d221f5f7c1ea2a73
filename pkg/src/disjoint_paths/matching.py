"""Maximum bipartite matching (Hopcroft-Karp) with an optional Koenig certificate."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Hashable, Iterable

import networkx as nx

INF = float("inf")


@dataclass(frozen=True)
class Bigraph:
    n_left: int
    n_right: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(sorted(set(map(tuple, self.edges)))))
        for a, b in self.edges:
            if not (0 <= a < self.n_left and 0 <= b < self.n_right):
                raise ValueError(f"edge ({a}, {b}) out of range")

    def left_adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n_left)]
        for a, b in self.edges:
            adj[a].append(b)
        return adj


class MatchingCertificateError(AssertionError):
    pass


def max_matching(b: Bigraph, certify: bool = False) -> list[tuple[int, int]]:
    """A maximum matching as sorted ``(left, right)`` pairs.

    With ``certify=True`` a vertex cover of the same size is extracted and
    checked, which proves maximality.
    """
    adj = b.left_adjacency()
    match_l = [-1] * b.n_left
    match_r = [-1] * b.n_right
    dist = [INF] * b.n_left

    def bfs() -> bool:
        queue = deque()
        for a in range(b.n_left):
            if match_l[a] == -1:
                dist[a] = 0
                queue.append(a)
            else:
                dist[a] = INF
        found = False
        while queue:
            a = queue.popleft()
            for r in adj[a]:
                nxt = match_r[r]
                if nxt == -1:
                    found = True
                elif dist[nxt] == INF:
                    dist[nxt] = dist[a] + 1
                    queue.append(nxt)
        return found

    def dfs(a: int) -> bool:
        for r in adj[a]:
            nxt = match_r[r]
            if nxt == -1 or (dist[nxt] == dist[a] + 1 and dfs(nxt)):
                match_l[a], match_r[r] = r, a
                return True
        dist[a] = INF
        return False

    while bfs():
        for a in range(b.n_left):
            if match_l[a] == -1:
                dfs(a)

    pairs = [(a, r) for a, r in enumerate(match_l) if r != -1]
    if certify:
        check_certificate(b, pairs)
    return pairs


def konig_cover(b: Bigraph, pairs: Iterable[tuple[int, int]]) -> tuple[set[int], set[int]]:
    """Vertex cover ``(left, right)`` built from a maximum matching by
    alternating search from the unmatched left vertices."""
    adj = b.left_adjacency()
    match_l = dict(pairs)
    match_r = {r: a for a, r in match_l.items()}
    seen_l = {a for a in range(b.n_left) if a not in match_l}
    seen_r: set[int] = set()
    queue = deque(seen_l)
    while queue:
        a = queue.popleft()
        for r in adj[a]:
            if r in seen_r or match_l.get(a) == r:
                continue
            seen_r.add(r)
            nxt = match_r.get(r)
            if nxt is not None and nxt not in seen_l:
                seen_l.add(nxt)
                queue.append(nxt)
    return set(range(b.n_left)) - seen_l, seen_r


def check_certificate(b: Bigraph, pairs: list[tuple[int, int]]) -> None:
    lefts = [a for a, _ in pairs]
    rights = [r for _, r in pairs]
    if len(set(lefts)) != len(lefts) or len(set(rights)) != len(rights):
        raise MatchingCertificateError("pairs share an endpoint")
    if not set(pairs) <= set(b.edges):
        raise MatchingCertificateError("matched pair is not an edge")
    cover_l, cover_r = konig_cover(b, pairs)
    if any(a not in cover_l and r not in cover_r for a, r in b.edges):
        raise MatchingCertificateError("cover misses an edge: matching not maximum")
    if len(cover_l) + len(cover_r) != len(pairs):
        raise MatchingCertificateError("cover size differs from matching size")


def has_matching_of_size(b: Bigraph, k: int) -> bool:
    return len(max_matching(b)) >= k


def has_perfect_matching_on_left(b: Bigraph) -> bool:
    return len(max_matching(b)) == b.n_left


def max_matching_general(edges: Iterable[tuple[Hashable, Hashable]]) -> set[frozenset]:
    """Maximum cardinality matching in an arbitrary graph (blossom algorithm)."""
    g = nx.Graph()
    g.add_edges_from(edges)
    return {frozenset(e) for e in nx.max_weight_matching(g, maxcardinality=True)}
