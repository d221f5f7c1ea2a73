"""Instance generators from the hardness constructions.

* :func:`gen_line_2dcs`: 3-SAT formula to a 2-DCS instance on a line graph
  with ``|Z_1| = 2``.
* :func:`gen_girth_dp`: uniform edge subdivision, raising the girth of a
  Disjoint Paths instance without changing its answer.
* :func:`gen_4p1_p1p4`: split-graph Disjoint Paths instance whose independent
  side is exactly the terminal set, made (4P1, P1+P4)-free.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import ceil
from typing import Iterable, Sequence

from .classes import FOUR_P1, P1_P4, is_h_free
from .errors import ParseError, PreconditionError
from .graph import Graph, girth, line_graph, mask_of, subdivide_all_edges
from .instance import Instance


@dataclass(frozen=True)
class CnfFormula:
    """Variables ``1..n``; a literal is ``+v`` or ``-v`` as in DIMACS."""

    n: int
    clauses: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "clauses", tuple(tuple(c) for c in self.clauses))
        if self.n < 1:
            raise ValueError("need at least one variable")
        for j, clause in enumerate(self.clauses, 1):
            if not clause:
                raise ValueError(f"clause {j} is empty")
            if len(set(clause)) > 3:
                raise ValueError(f"clause {j} has more than 3 literals")
            for lit in clause:
                if lit == 0 or abs(lit) > self.n:
                    raise ValueError(f"clause {j}: literal {lit} out of range")

    def satisfied_by(self, assignment: Sequence[bool]) -> bool:
        """``assignment[v - 1]`` is the value of variable ``v``."""
        return all(any(assignment[abs(l) - 1] == (l > 0) for l in c) for c in self.clauses)

    def is_satisfiable(self) -> bool:
        return any(self.satisfied_by(a) for a in itertools.product((False, True), repeat=self.n))


def parse_dimacs(text: str) -> CnfFormula:
    n = m = None
    clauses, current = [], []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ParseError("expected 'p cnf <vars> <clauses>'", lineno)
            try:
                n, m = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError("non-integer header field", lineno) from None
            continue
        if n is None:
            raise ParseError("clause before header", lineno)
        for tok in line.split():
            try:
                lit = int(tok)
            except ValueError:
                raise ParseError(f"bad literal {tok!r}", lineno) from None
            if lit == 0:
                if not current:
                    raise ParseError("empty clause", lineno)
                clauses.append(tuple(current))
                current = []
            else:
                current.append(lit)
    if n is None:
        raise ParseError("missing header")
    if current:
        clauses.append(tuple(current))
    if m is not None and len(clauses) != m:
        raise ParseError(f"header announces {m} clauses, found {len(clauses)}")
    try:
        return CnfFormula(n, clauses)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def format_dimacs(phi: CnfFormula) -> str:
    lines = [f"p cnf {phi.n} {len(phi.clauses)}"]
    lines += [" ".join(map(str, c)) + " 0" for c in phi.clauses]
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class LineGadgetOutput:
    graph: Graph                   # the graph before taking the line graph
    labels: tuple[str, ...]        # vertex labels of ``graph``
    e: tuple[int, int]
    f: tuple[int, int]
    line: Graph
    edge_index: dict[tuple[int, int], int]
    instance: Instance             # (line, Z_1 = {e, f}, Z_2 = clause-incident edges)


def _occurrences(phi: CnfFormula) -> dict[int, list[int]]:
    """Literal -> indices (1-based) of the clauses containing it, without repeats."""
    occ: dict[int, list[int]] = {}
    for j, clause in enumerate(phi.clauses, 1):
        for lit in dict.fromkeys(clause):
            occ.setdefault(lit, []).append(j)
    return occ


def line_gadget_census(phi: CnfFormula) -> tuple[int, int]:
    """``(|V(G)|, |E(G)|)`` of the pre-line-graph construction.

    With ``R`` literal occurrences: ``4n + R + m`` vertices, and
    ``(2n + R)`` segment edges, ``2(n-1)`` connectors, ``2(n-1)`` crossings,
    ``e``, ``f`` and ``R`` clause edges, i.e. ``6n - 2 + 2R`` edges.
    """
    r = sum(len(js) for js in _occurrences(phi).values())
    return 4 * phi.n + r + len(phi.clauses), 6 * phi.n - 2 + 2 * r


def gen_line_2dcs(phi: CnfFormula) -> LineGadgetOutput:
    """Two parallel paths of variable segments, crossing between segments,
    with one vertex per literal occurrence and one vertex per clause.

    A literal without occurrences leaves its segment as the single edge
    ``p_i q_i``.
    """
    labels: list[str] = []
    edges: list[tuple[int, int]] = []

    def vertex(label: str) -> int:
        labels.append(label)
        return len(labels) - 1

    occ = _occurrences(phi)
    occ_vertex: dict[tuple[int, int], int] = {}
    ends = {}
    for i in range(1, phi.n + 1):
        for lit, bar in ((i, ""), (-i, "~")):
            p = vertex(f"{bar}p{i}")
            chain = [p]
            for j in occ.get(lit, []):
                occ_vertex[lit, j] = vertex(f"{bar}x{i}^{j}")
                chain.append(occ_vertex[lit, j])
            q = vertex(f"{bar}q{i}")
            chain.append(q)
            edges += zip(chain, chain[1:])
            ends[lit] = (p, q)
    for i in range(1, phi.n):
        edges.append((ends[i][1], ends[i + 1][0]))        # q_i p_{i+1}
        edges.append((ends[-i][1], ends[-i - 1][0]))      # ~q_i ~p_{i+1}
        edges.append((ends[i][1], ends[-i - 1][0]))       # q_i ~p_{i+1}
        edges.append((ends[-i][1], ends[i + 1][0]))       # ~q_i p_{i+1}
    e = (ends[1][0], ends[-1][0])
    f = (ends[phi.n][1], ends[-phi.n][1])
    edges += [e, f]
    clause_edges = []
    for j, clause in enumerate(phi.clauses, 1):
        c = vertex(f"C{j}")
        clause_edges += [(c, occ_vertex[lit, j]) for lit in dict.fromkeys(clause)]
    edges += clause_edges

    g = Graph.from_edges(len(labels), edges)
    line, index = line_graph(g)
    key = lambda uv: (min(uv), max(uv))
    z1 = (index[key(e)], index[key(f)])
    z2 = tuple(sorted(index[key(ce)] for ce in clause_edges))
    inst = Instance("dcs", line, (z1, z2))
    return LineGadgetOutput(g, tuple(labels), key(e), key(f), line, index, inst)


def gen_girth_dp(inst: Instance, g: int) -> Instance:
    """Subdivide every edge ``t`` times, with ``t`` the least positive value
    making ``(t + 1) * girth >= g``; terminals keep their ids."""
    if g < 3:
        raise ValueError("target girth must be at least 3")
    current = girth(inst.graph)
    times = 1 if current is None else max(1, ceil(g / current) - 1)
    graph, _ = subdivide_all_edges(inst.graph, times)
    return Instance(inst.kind, graph, inst.terminals)


def gen_4p1_p1p4(inst: Instance, split_witness: tuple[Iterable[int], Iterable[int]]) -> Instance:
    """Add every edge between terminals of different pairs.

    ``split_witness = (C, I)`` must split the graph into a clique ``C`` and an
    independent set ``I`` equal to the terminal set. The result is certified
    4P1-free and (P1+P4)-free.
    """
    if inst.kind != "dp":
        raise ValueError("gen_4p1_p1p4 needs a 'dp' instance")
    clique, indep = set(split_witness[0]), set(split_witness[1])
    g = inst.graph
    if clique & indep or clique | indep != set(range(g.n)):
        raise PreconditionError("witness does not partition the vertex set")
    cmask, imask = mask_of(clique), mask_of(indep)
    if any((g.adj[v] | 1 << v) & cmask != cmask for v in clique):
        raise PreconditionError("witness clique is not a clique")
    if any(g.adj[v] & imask for v in indep):
        raise PreconditionError("witness independent set has an edge")
    if indep != inst.terminal_vertices():
        raise PreconditionError("independent side must be exactly the terminal set")
    owner = inst.owner()
    extra = [(a, b) for a in sorted(indep) for b in sorted(indep) if a < b and owner[a] != owner[b]]
    out = Instance("dp", g.add_edges(extra), inst.terminals)
    if not is_h_free(out.graph, FOUR_P1) or not is_h_free(out.graph, P1_P4):
        raise RuntimeError("output is not (4P1, P1+P4)-free")
    return out


def terminal_split_witness(inst: Instance) -> tuple[set[int], set[int]]:
    """``(non-terminals, terminals)``; valid when the instance is a split
    graph with the terminals as its independent side."""
    terms = inst.terminal_vertices()
    return set(range(inst.n)) - terms, terms
