"""Seeded random instances inside a requested graph class.

Every generator certifies its output with the recognizers from
:mod:`disjoint_paths.classes`; the same seed always gives the same instance.
"""

from __future__ import annotations

import random
from typing import Literal, Optional

from .classes import P1_P3, P1_P4, P4, THREE_P1, cobipartite_partition, is_h_free, join_decomposition, split_partition
from .errors import PreconditionError
from .graph import Graph, complement
from .instance import Instance, Kind

GraphClass = Literal["general", "cograph", "cobipartite", "split", "3p1free", "p1p3free", "p1p4free"]
GRAPH_CLASSES: tuple[str, ...] = ("general", "cograph", "cobipartite", "split", "3p1free", "p1p3free", "p1p4free")

_MAX_TRIES = 2000


def _relabel(rng: random.Random, g: Graph) -> Graph:
    perm = list(range(g.n))
    rng.shuffle(perm)
    return Graph.from_edges(g.n, ((perm[u], perm[v]) for u, v in g.edges()))


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p))


def random_cograph(rng: random.Random, n: int) -> Graph:
    """Recursive disjoint union / join of two random cographs."""

    def build(vertices: list[int]) -> list[tuple[int, int]]:
        if len(vertices) == 1:
            return []
        cut = rng.randint(1, len(vertices) - 1)
        left, right = vertices[:cut], vertices[cut:]
        edges = build(left) + build(right)
        if rng.random() < 0.5:
            edges += [(a, b) for a in left for b in right]
        return edges

    return _relabel(rng, Graph.from_edges(n, build(list(range(n)))))


def random_cobipartite(rng: random.Random, n: int, p: float = 0.4) -> Graph:
    """Complement of a random bipartite graph."""
    a = rng.randint(0, n)
    cross = [(u, v) for u in range(a) for v in range(a, n) if rng.random() < p]
    return _relabel(rng, complement(Graph.from_edges(n, cross)))


def random_split(rng: random.Random, clique: int, indep: int, p: float = 0.5) -> Graph:
    """Vertices ``0..clique-1`` form the clique, the rest are independent."""
    n = clique + indep
    edges = [(u, v) for u in range(clique) for v in range(u + 1, clique)]
    edges += [(u, v) for u in range(clique) for v in range(clique, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_triangle_free(rng: random.Random, n: int, tries: int) -> Graph:
    adj = [0] * n
    for _ in range(tries):
        u, v = rng.sample(range(n), 2) if n >= 2 else (0, 0)
        if u == v or adj[u] >> v & 1 or adj[u] & adj[v]:
            continue
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def random_3p1free(rng: random.Random, n: int) -> Graph:
    """Complement of a random triangle-free graph."""
    return complement(random_triangle_free(rng, n, rng.randint(0, 4 * n)))


def random_union_of_cliques(rng: random.Random, n: int) -> Graph:
    labels = [rng.randint(0, max(0, n // 2)) for _ in range(n)]
    return Graph.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n) if labels[u] == labels[v]))


def random_p1p3free(rng: random.Random, n: int) -> Graph:
    """Join of at most one 3P1-free factor with union-of-cliques factors."""
    sizes = []
    left = n
    if rng.random() < 0.5:
        sizes.append(rng.randint(max(1, n - 4), n))
        left -= sizes[0]
    while left:
        size = rng.randint(1, left)
        sizes.append(size)
        left -= size
    factors = []
    for i, size in enumerate(sizes):
        if i == 0 and rng.random() < 0.7:
            factors.append(random_3p1free(rng, size))
        else:
            factors.append(random_union_of_cliques(rng, size))
    edges, offset, blocks = [], 0, []
    for f in factors:
        edges += [(u + offset, v + offset) for u, v in f.edges()]
        blocks.append(range(offset, offset + f.n))
        offset += f.n
    for i, a in enumerate(blocks):
        for b in blocks[i + 1:]:
            edges += [(u, v) for u in a for v in b]
    return _relabel(rng, Graph.from_edges(n, edges))


def random_p1p4free(rng: random.Random, n: int) -> Graph:
    """Rejection sampling; P1+P4 is the complement of the gem, so the
    complements of sparse graphs are good proposals."""
    for _ in range(_MAX_TRIES):
        if rng.random() < 0.5:
            g = complement(random_graph(rng, n, rng.uniform(0.05, 0.35)))
        else:
            g = random_graph(rng, n, rng.uniform(0.5, 0.9))
        if is_h_free(g, P1_P4):
            return g
    raise PreconditionError(f"no (P1+P4)-free graph found on {n} vertices")


def _certify(cls: str, g: Graph) -> None:
    ok = {
        "general": lambda: True,
        "cograph": lambda: is_h_free(g, P4),
        "cobipartite": lambda: cobipartite_partition(g) is not None,
        "split": lambda: split_partition(g) is not None,
        "3p1free": lambda: is_h_free(g, THREE_P1),
        "p1p3free": lambda: is_h_free(g, P1_P3) and _decomposes(g),
        "p1p4free": lambda: is_h_free(g, P1_P4),
    }[cls]()
    if not ok:
        raise RuntimeError(f"generated graph failed the {cls} certificate")


def _decomposes(g: Graph) -> bool:
    try:
        join_decomposition(g)
    except PreconditionError:
        return False
    return True


def random_terminals(rng: random.Random, g: Graph, k: int, kind: Kind, max_set: int = 3,
                     independent: bool = False) -> tuple[tuple[int, ...], ...]:
    """``k`` disjoint terminal sets; with ``independent`` each set prefers
    vertices non-adjacent to its earlier members."""
    sizes = [2] * k if kind == "dp" else [rng.randint(1, max_set) for _ in range(k)]
    if sum(sizes) > g.n:
        raise PreconditionError(f"{k} terminal sets of sizes {sizes} do not fit in {g.n} vertices")
    pool = rng.sample(range(g.n), g.n)
    out = []
    for size in sizes:
        z = [pool.pop()]
        while len(z) < size:
            fits = [v for v in pool if not any(g.has_edge(v, u) for u in z)] if independent else pool
            if not fits:
                fits = pool
            v = fits[-1]
            pool.remove(v)
            z.append(v)
        out.append(tuple(z))
    return tuple(out)


def gen_random_instance(cls: str, n: int, k: int, seed: int, kind: Kind = "dcs", max_set: int = 3,
                        p: Optional[float] = None, independent: bool = False) -> Instance:
    """A random instance on a certified member of ``cls``.

    For ``split`` with ``kind="dp"`` the independent side is exactly the
    terminal set, as the split gadget requires.
    """
    if cls not in GRAPH_CLASSES:
        raise ValueError(f"unknown class {cls!r}; choose from {', '.join(GRAPH_CLASSES)}")
    if n < 1 or k < 0:
        raise PreconditionError("need n >= 1 and k >= 0")
    rng = random.Random(f"{cls}/{kind}/{n}/{k}/{seed}")
    if cls == "split" and kind == "dp":
        if 2 * k > n:
            raise PreconditionError(f"{k} pairs do not fit in {n} vertices")
        g = random_split(rng, n - 2 * k, 2 * k, p if p is not None else rng.uniform(0.2, 0.8))
        indep = list(range(n - 2 * k, n))
        rng.shuffle(indep)
        terminals = tuple((indep[2 * i], indep[2 * i + 1]) for i in range(k))
        return Instance(kind, g, terminals)

    if cls == "general":
        g = random_graph(rng, n, p if p is not None else rng.uniform(0.15, 0.6))
    elif cls == "cograph":
        g = random_cograph(rng, n)
    elif cls == "cobipartite":
        g = random_cobipartite(rng, n, p if p is not None else rng.uniform(0.1, 0.7))
    elif cls == "split":
        c = rng.randint(0, n)
        g = _relabel(rng, random_split(rng, c, n - c, p if p is not None else rng.uniform(0.2, 0.8)))
    elif cls == "3p1free":
        g = random_3p1free(rng, n)
    elif cls == "p1p3free":
        g = random_p1p3free(rng, n)
    else:
        g = random_p1p4free(rng, n)
    _certify(cls, g)
    return Instance(kind, g, random_terminals(rng, g, k, kind, max_set, independent))
