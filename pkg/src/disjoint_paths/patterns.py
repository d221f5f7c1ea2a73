"""Named forbidden patterns and induced-subgraph search for them."""

from __future__ import annotations

import re
from typing import Optional

from .graph import Graph, complement, disjoint_union, iter_bits

MAX_PATTERN_VERTICES = 8


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def claw() -> Graph:
    return complete_bipartite(1, 3)


def linear_forest(*path_sizes: int) -> Graph:
    """Disjoint union of paths, e.g. ``linear_forest(1, 1, 1, 4)`` is 3P1+P4."""
    return disjoint_union(*(path(k) for k in path_sizes))


def sp1_p4(s: int) -> Graph:
    return linear_forest(*([1] * s), 4)


_TERM = re.compile(r"^(\d*)(P|C|K)(\d+)(?:,(\d+))?$")


def parse_pattern(name: str) -> Graph:
    """Build a pattern from names such as ``P4``, ``C5``, ``3P1+P4``, ``2P2``,
    ``K1,3``, ``claw``, ``K4`` or ``co-C5`` (complement)."""
    name = name.replace(" ", "")
    if name.lower() == "claw":
        return claw()
    if name.startswith("co-"):
        return complement(parse_pattern(name[3:]))
    parts = []
    for term in name.split("+"):
        match = _TERM.match(term)
        if not match:
            raise ValueError(f"cannot parse pattern term {term!r}")
        mult = int(match.group(1) or 1)
        kind, a, b = match.group(2), int(match.group(3)), match.group(4)
        if kind == "P":
            piece = path(a)
        elif kind == "C":
            piece = cycle(a)
        elif b is not None:
            piece = complete_bipartite(a, int(b))
        else:
            piece = complete(a)
        parts += [piece] * mult
    return disjoint_union(*parts)


def _search_order(h: Graph) -> list[int]:
    """Pattern vertices so that each one, where possible, touches an earlier one.

    Components go largest first; inside a component we start at a maximum
    degree vertex and continue breadth first.
    """
    seen: set[int] = set()
    comps = []
    for v in sorted(range(h.n), key=lambda x: -h.degree(x)):
        if v in seen:
            continue
        comp, queue = [], [v]
        seen.add(v)
        while queue:
            x = queue.pop(0)
            comp.append(x)
            for y in sorted(iter_bits(h.adj[x]), key=lambda z: -h.degree(z)):
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        comps.append(comp)
    comps.sort(key=len, reverse=True)
    return [v for comp in comps for v in comp]


def find_induced(g: Graph, h: Graph) -> Optional[dict[int, int]]:
    """An injective map ``phi`` from ``V(h)`` to ``V(g)`` preserving both
    adjacency and non-adjacency, or ``None`` if ``g`` is ``h``-free."""
    if h.n > MAX_PATTERN_VERTICES:
        raise ValueError(f"pattern has {h.n} vertices, at most {MAX_PATTERN_VERTICES} supported")
    if h.n > g.n:
        return None
    order = _search_order(h)
    constraints = [[(order.index(y), h.has_edge(x, y)) for y in order[:i]] for i, x in enumerate(order)]
    min_degree = [h.degree(x) for x in order]
    image = [0] * h.n
    full = g.vertex_mask

    def extend(i: int, used: int) -> bool:
        if i == h.n:
            return True
        cand = full & ~used
        for j, adjacent in constraints[i]:
            cand &= g.adj[image[j]] if adjacent else ~g.adj[image[j]]
            if not cand:
                return False
        for v in iter_bits(cand):
            if g.degree(v) < min_degree[i]:
                continue
            image[i] = v
            if extend(i + 1, used | 1 << v):
                return True
        return False

    if not extend(0, 0):
        return None
    return {x: image[i] for i, x in enumerate(order)}
