"""Polynomial-time solvers for restricted graph classes and the reductions
between the open cases."""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from math import comb
from typing import Callable, Literal, Optional

from .classes import (
    P4,
    THREE_P1,
    JoinDecomposition,
    PartKind,
    cobipartite_partition,
    is_h_free,
    join_decomposition,
)
from .errors import PreconditionError, ResourceLimitError
from .exact import dp_paths
from .graph import Graph, is_connected_mask, iter_bits, mask_of
from .instance import Instance, Reduction, Solution, delete_and_drop, normalize
from .matching import Bigraph, max_matching, max_matching_general
from .patterns import MAX_PATTERN_VERTICES, sp1_p4

log = logging.getLogger(__name__)

DEFAULT_SP1P4_BUDGET = 20_000_000


def _require_dcs(inst: Instance, who: str) -> None:
    if inst.kind != "dcs":
        raise ValueError(f"{who} needs a 'dcs' instance")


def solve_dcs_p4free(inst: Instance) -> Optional[Solution]:
    """Disjoint Connected Subgraphs on cographs via bipartite matching.

    After contraction every terminal set is independent, and a solution
    exists iff the sets of size at least two can be given distinct
    non-terminal vertices each adjacent to the whole set.
    """
    _require_dcs(inst, "solve_dcs_p4free")
    if not is_h_free(inst.graph, P4):
        raise PreconditionError("graph is not P4-free")
    red = normalize(inst)
    t = red.target
    g = t.graph
    nonterminals = [v for v in range(g.n) if v not in t.terminal_vertices()]
    needy = [i for i, z in enumerate(t.terminals) if len(z) > 1]
    edges = []
    for a, i in enumerate(needy):
        zmask = mask_of(t.terminals[i])
        edges += [(a, b) for b, y in enumerate(nonterminals) if g.adj[y] & zmask == zmask]
    pairs = max_matching(Bigraph(len(needy), len(nonterminals), edges))
    if len(pairs) < len(needy):
        return None
    parts = [list(z) for z in t.terminals]
    for a, b in pairs:
        parts[needy[a]].append(nonterminals[b])
    return red.lift(Solution("dcs", tuple(tuple(p) for p in parts)))


def solve_kdcs_sp1p4(inst: Instance, s: int, budget: int = DEFAULT_SP1P4_BUDGET) -> Optional[Solution]:
    """k-Disjoint Connected Subgraphs on (sP1+P4)-free graphs.

    Each minimal part is its terminal set plus a connected dominating set of
    at most ``3s + 1`` vertices, so trying every choice of at most that many
    extra vertices per set is exhaustive. Choices are made set by set in
    lexicographic order, keeping only connected and pairwise disjoint parts.
    """
    _require_dcs(inst, "solve_kdcs_sp1p4")
    if s < 0:
        raise ValueError("s must be non-negative")
    if s + 4 <= MAX_PATTERN_VERTICES:
        if not is_h_free(inst.graph, sp1_p4(s)):
            raise PreconditionError(f"graph is not ({s}P1+P4)-free")
    else:
        log.warning("(%dP1+P4)-freeness not checked for s > %d", s, MAX_PATTERN_VERTICES - 4)
    red = normalize(inst)
    t = red.target
    g = t.graph
    size = 3 * s + 1
    free = [v for v in range(g.n) if v not in t.terminal_vertices()]
    per_set = sum(comb(len(free), j) for j in range(min(size, len(free)) + 1))
    if per_set ** t.k > budget:
        raise ResourceLimitError(f"{per_set}^{t.k} dominator choices exceed budget {budget}")

    options = []
    for z in t.terminals:
        zmask = mask_of(z)
        opts = []
        for j in range(min(size, len(free)) + 1):
            for extra in itertools.combinations(free, j):
                part = zmask | mask_of(extra)
                if is_connected_mask(g, part):
                    opts.append(part)
        options.append(opts)

    chosen: list[int] = []

    def pick(i: int, used: int) -> bool:
        if i == t.k:
            return True
        for part in options[i]:
            if part & used:
                continue
            chosen.append(part)
            if pick(i + 1, used | part):
                return True
            chosen.pop()
        return False

    if not pick(0, 0):
        return None
    return red.lift(Solution("dcs", tuple(tuple(iter_bits(p)) for p in chosen)))


def solve_dp_cobipartite(inst: Instance) -> Optional[Solution]:
    """Disjoint Paths on cobipartite graphs; every path has at most 3 edges.

    Adjacent pairs take their edge. For the rest, the graph keeps only
    non-terminal edges across the two cliques, and each pair becomes one
    vertex adjacent to the non-terminals that extend it to a path of length
    two. A solution exists iff that graph has a matching covering as many
    edges as there are pairs: a matched pair vertex names a middle vertex,
    and any other matched edge is the middle of a length-3 path for any pair.
    """
    if inst.kind != "dp":
        raise ValueError("solve_dp_cobipartite needs a 'dp' instance")
    split = cobipartite_partition(inst.graph)
    if split is None:
        raise PreconditionError("graph is not cobipartite")
    g = inst.graph
    side = {v: 0 for v in split[0]} | {v: 1 for v in split[1]}
    terminals = inst.terminal_vertices()
    paths: list[Optional[tuple[int, ...]]] = [None] * inst.k
    rest = []
    for i, (s, t) in enumerate(inst.terminals):
        if g.has_edge(s, t):
            paths[i] = (s, t)
        else:
            rest.append(i)
    inner = [v for v in range(g.n) if v not in terminals]
    edges = [(("v", u), ("v", w)) for u in inner for w in inner
             if u < w and side[u] != side[w] and g.has_edge(u, w)]
    for i in rest:
        s, t = inst.terminals[i]
        edges += [(("x", i), ("v", u)) for u in inner
                  if (g.has_edge(s, u) and side[u] != side[s]) or (g.has_edge(t, u) and side[u] != side[t])]
    matching = max_matching_general(edges)
    if len(matching) < len(rest):
        return None
    spare = []
    for e in sorted(tuple(sorted(e)) for e in matching):
        (ka, a), (kb, b) = e
        if ka == "x":
            s, t = inst.terminals[a]
            paths[a] = (s, b, t)
        elif kb == "x":
            s, t = inst.terminals[b]
            paths[b] = (s, a, t)
        else:
            spare.append((a, b))
    for i in rest:
        if paths[i] is None:
            u, w = spare.pop(0)
            s, t = inst.terminals[i]
            if side[u] != side[s]:
                u, w = w, u
            paths[i] = (s, u, w, t)
    return Solution("dp", tuple(paths))


def reduce_dcs_to_dp_3p1free(inst: Instance) -> Reduction:
    """Turn a DCS instance on a 3P1-free graph into an equivalent DP instance.

    Independent sets have at most two vertices, so after contraction every
    terminal set is a pair or a single vertex; single vertices are satisfied
    on their own and leave the graph.
    """
    _require_dcs(inst, "reduce_dcs_to_dp_3p1free")
    if not is_h_free(inst.graph, THREE_P1):
        raise PreconditionError("graph is not 3P1-free")
    red = normalize(inst)
    big = [z for z in red.target.terminals if len(z) > 2]
    if big:
        raise PreconditionError(f"independent terminal set {big[0]} of size > 2: graph is not 3P1-free")
    singles = [i for i, z in enumerate(red.target.terminals) if len(z) == 1]
    return red.then(delete_and_drop(red.target, singles, kind="dp"))


# -- (P1+P3)-free graphs -------------------------------------------------------

@dataclass
class ReductionArtifacts:
    decomposition: Optional[JoinDecomposition] = None
    pairs: Optional[Instance] = None
    type1: Optional[Bigraph] = None
    g_star: Optional[Graph] = None
    added: list[tuple[int, int]] = field(default_factory=list)
    deleted: list[tuple[int, int]] = field(default_factory=list)
    dp_instance: Optional[Instance] = None


@dataclass
class P1P3Result:
    verdict: bool
    stage: Literal["trivial", "type1", "type2", "no-type1"]
    solution: Optional[Solution]
    artifacts: ReductionArtifacts
    reduction: Optional[Reduction] = None

    def __bool__(self):
        return self.verdict


def solve_p1p3(inst: Instance, backend: Callable[[Instance], Optional[Solution]] = dp_paths) -> P1P3Result:
    """Disjoint Connected Subgraphs on (P1+P3)-free graphs, given a solver for
    Disjoint Paths on 3P1-free graphs.

    Terminal sets are shrunk to pairs, then solutions whose paths all have
    length two are found by a perfect matching. Failing that, a modified
    3P1-free graph with the same answer is built and handed to ``backend``.
    """
    _require_dcs(inst, "solve_p1p3")
    art = ReductionArtifacts()
    try:
        join_decomposition(inst.graph)
    except PreconditionError:
        raise PreconditionError("graph is not (P1+P3)-free") from None
    red = normalize(inst)
    singles = [i for i, z in enumerate(red.target.terminals) if len(z) == 1]
    red = red.then(delete_and_drop(red.target, singles))
    dec = join_decomposition(red.target.graph)

    where = dec.part_of()
    extras = {}
    for i, z in enumerate(red.target.terminals):
        if len(z) > 2:
            part = where[z[0]]
            if not dec.kinds[part].cliques:
                raise PreconditionError("independent set of size > 2 in a 3P1-free factor")
            keep = sorted(z)[:2]
            extras[i] = [v for v in z if v not in keep]
    red = red.then(delete_and_drop(red.target, [], extras, kind="dp"))
    pairs = red.target
    art.pairs = pairs
    if pairs.k == 0:
        return P1P3Result(True, "trivial", red.lift(Solution("dp", ())), art, red)

    g = pairs.graph
    dec = join_decomposition(g)
    art.decomposition = dec
    where = dec.part_of()
    terminals = pairs.terminal_vertices()
    inner = [v for v in range(g.n) if v not in terminals]
    edges = []
    for i, (s, t) in enumerate(pairs.terminals):
        h = where[s]
        for b, u in enumerate(inner):
            if where[u] != h:
                edges.append((i, b))
            elif dec.merged and h == 0 and g.has_edge(u, s) and g.has_edge(u, t):
                edges.append((i, b))
    art.type1 = Bigraph(pairs.k, len(inner), edges)
    matched = max_matching(art.type1)
    if len(matched) == pairs.k:
        paths = [None] * pairs.k
        for i, b in matched:
            s, t = pairs.terminals[i]
            paths[i] = (s, inner[b], t)
        return P1P3Result(True, "type1", red.lift(Solution("dp", tuple(paths))), art, red)
    if not dec.merged:
        return P1P3Result(False, "no-type1", None, art, red)

    d1 = dec.parts[0]
    b1 = [v for v in terminals if v not in d1]
    b2 = [v for v in inner if v not in d1]
    pair_of = pairs.owner()
    add, delete = set(), set()
    for s, t in pairs.terminals:
        if s in d1:
            continue
        add |= {(min(s, u), max(s, u)) for u in b2}
        delete |= {(min(t, u), max(t, u)) for u in b2}
    add |= {(min(a, b), max(a, b)) for a in b1 for b in b1 if pair_of[a] != pair_of[b]}
    add |= {(min(a, b), max(a, b)) for a in b2 for b in b2 if a != b}
    old = set(g.edges())
    new_edges = (old | add) - delete
    g_star = Graph.from_edges(g.n, new_edges)
    art.g_star = g_star
    art.added = sorted(new_edges - old)
    art.deleted = sorted(old - new_edges)
    if not is_h_free(g_star, THREE_P1):
        raise RuntimeError("modified graph is not 3P1-free")
    art.dp_instance = Instance("dp", g_star, pairs.terminals)
    verdict = backend(art.dp_instance) is not None
    return P1P3Result(verdict, "type2", None, art, red)
