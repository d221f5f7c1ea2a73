"""Simple undirected graphs over vertex ids ``0..n-1``.

Neighbourhoods are stored as Python ints used as bitsets, so ``g.adj[v]`` is
the neighbourhood mask of ``v``. The exponential solvers work directly on
these masks; everything else can use :meth:`Graph.neighbors`.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from .errors import ParseError, PreconditionError

# old vertex id -> new vertex id, or None when the vertex was deleted
VertexMap = tuple[Optional[int], ...]


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise ValueError(f"expected {self.n} adjacency masks, got {len(self.adj)}")
        full = (1 << self.n) - 1
        for v, nb in enumerate(self.adj):
            if nb & ~full:
                raise ValueError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if nb >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in iter_bits(nb):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric for edge {v}-{u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def m(self) -> int:
        return sum(nb.bit_count() for nb in self.adj) // 2

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Subgraph induced by ``vertices``; vertex ``vertices[i]`` becomes ``i``."""
        index = {v: i for i, v in enumerate(vertices)}
        edges = [(index[u], index[v]) for u in vertices for v in iter_bits(self.adj[u])
                 if v in index and index[u] < index[v]]
        return Graph.from_edges(len(vertices), edges)

    def delete_vertices(self, vertices: Iterable[int]) -> tuple["Graph", VertexMap]:
        gone = set(vertices)
        keep = [v for v in range(self.n) if v not in gone]
        new_id = {v: i for i, v in enumerate(keep)}
        return self.induced(keep), tuple(new_id.get(v) for v in range(self.n))

    def add_edges(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        return Graph.from_edges(self.n, list(self.edges()) + [tuple(e) for e in edges])


def disjoint_union(*graphs: Graph) -> Graph:
    edges, offset = [], 0
    for g in graphs:
        edges += [(u + offset, v + offset) for u, v in g.edges()]
        offset += g.n
    return Graph.from_edges(offset, edges)


def join(*graphs: Graph) -> Graph:
    """Disjoint union plus every edge between different factors."""
    edges, ranges, offset = [], [], 0
    for g in graphs:
        edges += [(u + offset, v + offset) for u, v in g.edges()]
        ranges.append(range(offset, offset + g.n))
        offset += g.n
    for i, a in enumerate(ranges):
        for b in ranges[i + 1:]:
            edges += [(u, v) for u in a for v in b]
    return Graph.from_edges(offset, edges)


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph(g.n, tuple(full & ~nb & ~(1 << v) for v, nb in enumerate(g.adj)))


def line_graph(g: Graph) -> tuple[Graph, dict[tuple[int, int], int]]:
    """Line graph of ``g`` plus the map from each edge ``(u, v)``, ``u < v``, to its vertex."""
    edges = g.edges()
    index = {e: i for i, e in enumerate(edges)}
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(edges):
        incident[u].append(i)
        incident[v].append(i)
    pairs = [(a, b) for inc in incident for x, a in enumerate(inc) for b in inc[x + 1:]]
    return Graph.from_edges(len(edges), pairs), index


def subdivide_all_edges(g: Graph, times: int) -> tuple[Graph, VertexMap]:
    """Replace every edge by a path with ``times`` new internal vertices.

    Original vertices keep their ids; new vertices are appended edge by edge.
    """
    if times < 1:
        raise ValueError("times must be at least 1")
    edges, nxt = [], g.n
    for u, v in g.edges():
        chain = [u] + list(range(nxt, nxt + times)) + [v]
        nxt += times
        edges += zip(chain, chain[1:])
    return Graph.from_edges(nxt, edges), tuple(range(g.n))


def contract_edge(g: Graph, u: int, v: int) -> tuple[Graph, VertexMap]:
    """Merge adjacent ``u`` and ``v`` into ``min(u, v)`` and renumber densely."""
    if not g.has_edge(u, v):
        raise PreconditionError(f"{u}-{v} is not an edge")
    keep, gone = min(u, v), max(u, v)
    vmap = tuple(keep if x == gone else (x if x < gone else x - 1) for x in range(g.n))
    edges = {tuple(sorted((vmap[a], vmap[b]))) for a, b in g.edges()}
    edges.discard((keep, keep))
    return Graph.from_edges(g.n - 1, edges), vmap


def girth(g: Graph) -> Optional[int]:
    """Length of a shortest cycle, or ``None`` for forests."""
    best = None
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            x = queue.popleft()
            if best is not None and 2 * dist[x] >= best:
                break
            for y in iter_bits(g.adj[x]):
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    length = dist[x] + dist[y] + 1
                    if best is None or length < best:
                        best = length
    return best


def component_mask(g: Graph, start: int, within: int) -> int:
    """Vertices reachable from ``start`` inside the vertex mask ``within``."""
    seen = frontier = 1 << start
    while frontier:
        nb = 0
        for v in iter_bits(frontier):
            nb |= g.adj[v]
        frontier = nb & within & ~seen
        seen |= frontier
    return seen


def is_connected_mask(g: Graph, mask: int) -> bool:
    if not mask:
        return False
    return component_mask(g, (mask & -mask).bit_length() - 1, mask) == mask


def is_connected_within(g: Graph, s: Iterable[int]) -> bool:
    """Whether ``G[s]`` is connected. The empty set is not connected."""
    mask = mask_of(s)
    if mask & ~g.vertex_mask:
        raise ValueError("vertex set not contained in the graph")
    return is_connected_mask(g, mask)


def connected_components(g: Graph, within: Optional[int] = None) -> list[set[int]]:
    remaining = g.vertex_mask if within is None else within
    comps = []
    while remaining:
        comp = component_mask(g, (remaining & -remaining).bit_length() - 1, remaining)
        comps.append(set(iter_bits(comp)))
        remaining &= ~comp
    return comps


def is_connected(g: Graph) -> bool:
    return g.n > 0 and is_connected_mask(g, g.vertex_mask)


def format_graph(g: Graph) -> str:
    lines = [f"graph {g.n}"] + [f"e {u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "graph":
            if n is not None:
                raise ParseError("duplicate graph header", lineno)
            n = _parse_int(parts, 1, lineno, expected=2)
        elif parts[0] == "e":
            if n is None:
                raise ParseError("edge before graph header", lineno)
            u = _parse_int(parts, 1, lineno, expected=3)
            v = _parse_int(parts, 2, lineno, expected=3)
            _check_vertex(u, n, lineno)
            _check_vertex(v, n, lineno)
            if u == v:
                raise ParseError(f"self-loop at {u}", lineno)
            edges.append((u, v))
        else:
            raise ParseError(f"unknown record {parts[0]!r}", lineno)
    if n is None:
        raise ParseError("missing graph header")
    return Graph.from_edges(n, edges)


def _parse_int(parts, i, lineno, expected=None):
    if expected is not None and len(parts) != expected:
        raise ParseError(f"expected {expected} fields, got {len(parts)}", lineno)
    try:
        value = int(parts[i])
    except (IndexError, ValueError):
        raise ParseError(f"expected an integer, got {' '.join(parts)!r}", lineno) from None
    if value < 0:
        raise ParseError(f"negative value {value}", lineno)
    return value


def _check_vertex(v, n, lineno):
    if v >= n:
        raise ParseError(f"vertex {v} out of range for {n} vertices", lineno)
