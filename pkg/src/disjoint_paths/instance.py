"""Problem instances, solutions, the solution checker and terminal contraction.

Two problem kinds share one representation:

* ``"dp"``: every terminal set is an ordered pair ``(s_i, t_i)`` and a
  solution is a list of vertex-disjoint ``s_i``-``t_i`` paths;
* ``"dcs"``: terminal sets ``Z_i`` of any size and a solution is a list of
  disjoint connected sets ``S_i`` with ``Z_i`` contained in ``S_i``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Literal, Mapping, Optional, Sequence

from .errors import ParseError
from .graph import Graph, VertexMap, contract_edge, is_connected_within, parse_graph

Kind = Literal["dp", "dcs"]


@dataclass(frozen=True)
class Instance:
    kind: Kind
    graph: Graph
    terminals: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "terminals", tuple(tuple(z) for z in self.terminals))
        if self.kind not in ("dp", "dcs"):
            raise ValueError(f"unknown problem kind {self.kind!r}")
        seen: set[int] = set()
        for i, z in enumerate(self.terminals, 1):
            if not z:
                raise ValueError(f"terminal set {i} is empty")
            if len(set(z)) != len(z):
                raise ValueError(f"terminal set {i} repeats a vertex")
            if self.kind == "dp" and len(z) != 2:
                raise ValueError(f"terminal pair {i} must have exactly two vertices")
            for v in z:
                if not 0 <= v < self.graph.n:
                    raise ValueError(f"terminal {v} out of range")
                if v in seen:
                    raise ValueError(f"terminal {v} appears in two sets")
                seen.add(v)

    @property
    def k(self) -> int:
        return len(self.terminals)

    @property
    def n(self) -> int:
        return self.graph.n

    def terminal_vertices(self) -> set[int]:
        return {v for z in self.terminals for v in z}

    def owner(self) -> dict[int, int]:
        """Terminal vertex -> index of its set."""
        return {v: i for i, z in enumerate(self.terminals) for v in z}

    def as_dcs(self) -> "Instance":
        return Instance("dcs", self.graph, self.terminals)


@dataclass(frozen=True)
class Solution:
    """``parts[i]`` is ``S_i`` (sorted) for ``dcs`` or the path ``P^i`` for ``dp``."""

    kind: Kind
    parts: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        parts = tuple(tuple(p) for p in self.parts)
        if self.kind == "dcs":
            parts = tuple(tuple(sorted(p)) for p in parts)
        object.__setattr__(self, "parts", parts)


def solution_errors(inst: Instance, sol: Solution) -> list[str]:
    """Everything wrong with ``sol`` as a solution of ``inst``; empty when valid."""
    g = inst.graph
    if sol.kind != inst.kind:
        return [f"solution kind {sol.kind} does not match instance kind {inst.kind}"]
    if len(sol.parts) != inst.k:
        return [f"expected {inst.k} parts, got {len(sol.parts)}"]
    errors = []
    used: dict[int, int] = {}
    for i, (part, z) in enumerate(zip(sol.parts, inst.terminals), 1):
        bad = [v for v in part if not 0 <= v < g.n]
        if bad:
            errors.append(f"part {i}: vertices {bad} out of range")
            continue
        if len(set(part)) != len(part):
            errors.append(f"part {i}: repeated vertex")
        for v in set(part):
            if v in used:
                errors.append(f"parts {used[v]} and {i} share vertex {v}")
            used[v] = i
        if inst.kind == "dcs":
            missing = set(z) - set(part)
            if missing:
                errors.append(f"part {i}: terminals {sorted(missing)} not covered")
            if part and not is_connected_within(g, part):
                errors.append(f"part {i}: not connected")
        else:
            if not part or part[0] != z[0] or part[-1] != z[1]:
                errors.append(f"path {i}: must run from {z[0]} to {z[1]}")
            for a, b in zip(part, part[1:]):
                if not g.has_edge(a, b):
                    errors.append(f"path {i}: {a}-{b} is not an edge")
    return errors


def verify_solution(inst: Instance, sol: Solution) -> bool:
    return not solution_errors(inst, sol)


def path_within(g: Graph, s: int, t: int, allowed: Iterable[int]) -> Optional[list[int]]:
    """A shortest ``s``-``t`` path using only ``allowed`` vertices (BFS)."""
    allowed = set(allowed)
    parent = {s: s}
    queue = deque([s])
    while queue:
        x = queue.popleft()
        if x == t:
            out = [t]
            while out[-1] != s:
                out.append(parent[out[-1]])
            return out[::-1]
        for y in g.neighbors(x):
            if y in allowed and y not in parent:
                parent[y] = x
                queue.append(y)
    return None


def paths_from_sets(inst: Instance, sets: Sequence[Iterable[int]]) -> Solution:
    """Turn disjoint connected sets for a ``dp`` instance into a path solution."""
    paths = []
    for (s, t), part in zip(inst.terminals, sets):
        p = path_within(inst.graph, s, t, part)
        if p is None:
            raise ValueError(f"set {sorted(part)} does not connect {s} and {t}")
        paths.append(tuple(p))
    return Solution("dp", tuple(paths))


@dataclass(frozen=True)
class Reduction:
    """An equivalent smaller instance plus what is needed to map answers back.

    ``vertex_map`` sends source vertices to target vertices (``None`` when
    deleted), ``set_map[j]`` is the source index of target set ``j`` and
    ``fixed[i]`` holds source vertices that always belong to part ``i``
    (a whole part when set ``i`` was dropped as trivially satisfied).
    """

    source: Instance
    target: Instance
    vertex_map: VertexMap
    set_map: tuple[int, ...]
    fixed: Mapping[int, tuple[int, ...]] = field(default_factory=dict)

    def preimage(self) -> dict[int, list[int]]:
        pre: dict[int, list[int]] = {}
        for v, w in enumerate(self.vertex_map):
            if w is not None:
                pre.setdefault(w, []).append(v)
        return pre

    def lift(self, sol: Solution) -> Solution:
        """Map a solution of ``target`` to a solution of ``source``."""
        pre = self.preimage()
        parts: list[Optional[list[int]]] = [None] * self.source.k
        for j, part in enumerate(sol.parts):
            i = self.set_map[j]
            if self.source.kind == "dp":
                parts[i] = [pre[w][0] for w in part]
            else:
                parts[i] = [v for w in part for v in pre[w]] + list(self.fixed.get(i, ()))
        for i, extra in self.fixed.items():
            if parts[i] is None:
                parts[i] = list(extra)
        return Solution(self.source.kind, tuple(tuple(p) for p in parts))

    def then(self, nxt: "Reduction") -> "Reduction":
        """Compose with a reduction whose source is this reduction's target."""
        vmap = tuple(None if w is None else nxt.vertex_map[w] for w in self.vertex_map)
        pre = self.preimage()
        fixed = {i: tuple(vs) for i, vs in self.fixed.items()}
        for j, vs in nxt.fixed.items():
            i = self.set_map[j]
            fixed[i] = fixed.get(i, ()) + tuple(v for w in vs for v in pre[w])
        return Reduction(self.source, nxt.target, vmap, tuple(self.set_map[j] for j in nxt.set_map), fixed)


def identity_reduction(inst: Instance) -> Reduction:
    return Reduction(inst, inst, tuple(range(inst.n)), tuple(range(inst.k)))


def delete_and_drop(inst: Instance, drop_sets: Iterable[int], extra_deleted: Mapping[int, Iterable[int]] = {},
                    kind: Optional[Kind] = None) -> Reduction:
    """Drop whole terminal sets and delete their vertices from the graph.

    ``extra_deleted[i]`` lists further vertices of set ``i`` to delete while
    keeping the rest of the set; they are recorded as fixed members of part
    ``i``. The resulting instance may change kind (``kind``).
    """
    drop = set(drop_sets)
    fixed = {i: tuple(inst.terminals[i]) for i in drop}
    for i, vs in extra_deleted.items():
        fixed[i] = fixed.get(i, ()) + tuple(vs)
    gone = {v for vs in fixed.values() for v in vs}
    g, vmap = inst.graph.delete_vertices(gone)
    keep = [i for i in range(inst.k) if i not in drop]
    terms = [tuple(vmap[v] for v in inst.terminals[i] if v not in gone) for i in keep]
    target = Instance(kind or inst.kind, g, terms)
    return Reduction(inst, target, vmap, tuple(keep), fixed)


def normalize(inst: Instance) -> Reduction:
    """Contract edges inside terminal sets until every set is independent.

    Contractions always take the lowest intra-terminal edge. For ``dp`` an
    adjacent pair is solved by its edge, so the pair is dropped and both its
    vertices are deleted.
    """
    if inst.kind == "dp":
        adjacent = [i for i, (s, t) in enumerate(inst.terminals) if inst.graph.has_edge(s, t)]
        return delete_and_drop(inst, adjacent)
    g = inst.graph
    terms = [list(z) for z in inst.terminals]
    vmap: list[Optional[int]] = list(range(g.n))
    while True:
        edge = min(((min(u, v), max(u, v)) for z in terms for u in z for v in z
                    if u < v and g.has_edge(u, v)), default=None)
        if edge is None:
            break
        g, step = contract_edge(g, *edge)
        vmap = [None if w is None else step[w] for w in vmap]
        terms = [sorted({step[v] for v in z}) for z in terms]
    target = Instance("dcs", g, terms)
    return Reduction(inst, target, tuple(vmap), tuple(range(inst.k)))


# -- text formats ------------------------------------------------------------

def format_instance(inst: Instance) -> str:
    lines = [f"problem {inst.kind}", f"graph {inst.n}"]
    lines += [f"e {u} {v}" for u, v in inst.graph.edges()]
    lines += [f"term {i} " + " ".join(map(str, z)) for i, z in enumerate(inst.terminals, 1)]
    return "\n".join(lines) + "\n"


def parse_instance(text: str) -> Instance:
    kind = None
    graph_lines = []
    terms: dict[int, tuple[int, ...]] = {}
    term_line: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            graph_lines.append("")
            continue
        parts = line.split()
        if parts[0] == "problem":
            if len(parts) != 2 or parts[1] not in ("dp", "dcs"):
                raise ParseError("expected 'problem dp' or 'problem dcs'", lineno)
            if kind is not None:
                raise ParseError("duplicate problem line", lineno)
            kind = parts[1]
            graph_lines.append("")
        elif parts[0] == "term":
            try:
                idx, vs = int(parts[1]), tuple(int(x) for x in parts[2:])
            except (IndexError, ValueError):
                raise ParseError(f"malformed terminal line {line!r}", lineno) from None
            if idx < 1 or idx in terms:
                raise ParseError(f"bad or duplicate terminal set index {idx}", lineno)
            if not vs:
                raise ParseError(f"terminal set {idx} is empty", lineno)
            terms[idx], term_line[idx] = vs, lineno
            graph_lines.append("")
        else:
            graph_lines.append(line)
    if kind is None:
        raise ParseError("missing problem line")
    graph = parse_graph("\n".join(graph_lines))
    if not terms:
        raise ParseError("no terminal sets")
    if sorted(terms) != list(range(1, len(terms) + 1)):
        raise ParseError(f"terminal set indices must be 1..{len(terms)}")
    for idx in sorted(terms):
        for v in terms[idx]:
            if v >= graph.n:
                raise ParseError(f"terminal {v} out of range", term_line[idx])
    try:
        return Instance(kind, graph, [terms[i] for i in sorted(terms)])
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def format_solution(sol: Solution) -> str:
    tag = "path" if sol.kind == "dp" else "set"
    lines = [f"solution {sol.kind}"]
    lines += [f"{tag} {i} " + " ".join(map(str, p)) for i, p in enumerate(sol.parts, 1)]
    return "\n".join(lines) + "\n"


def parse_solution(text: str) -> Solution:
    kind = None
    parts: dict[int, tuple[int, ...]] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if fields[0] == "solution":
            if len(fields) != 2 or fields[1] not in ("dp", "dcs"):
                raise ParseError("expected 'solution dp' or 'solution dcs'", lineno)
            kind = fields[1]
        elif fields[0] in ("path", "set"):
            try:
                idx, vs = int(fields[1]), tuple(int(x) for x in fields[2:])
            except (IndexError, ValueError):
                raise ParseError(f"malformed line {line!r}", lineno) from None
            if idx in parts:
                raise ParseError(f"duplicate part {idx}", lineno)
            parts[idx] = vs
        else:
            raise ParseError(f"unknown record {fields[0]!r}", lineno)
    if kind is None:
        raise ParseError("missing solution line")
    if sorted(parts) != list(range(1, len(parts) + 1)):
        raise ParseError("part indices must be 1..k")
    return Solution(kind, tuple(parts[i] for i in sorted(parts)))
