"""Graph class recognition, structural decompositions and the H-free dichotomy."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Literal, Optional

from .errors import PreconditionError
from .graph import Graph, complement, connected_components, girth, is_connected, iter_bits, mask_of
from .patterns import complete_bipartite, find_induced, linear_forest, path, sp1_p4

P4 = path(4)
THREE_P1 = linear_forest(1, 1, 1)
P1_P3 = linear_forest(1, 3)
P1_P4 = linear_forest(1, 4)
TWO_P2 = linear_forest(2, 2)
FOUR_P1 = linear_forest(1, 1, 1, 1)
TWO_P1_P2 = linear_forest(1, 1, 2)
CLAW = complete_bipartite(1, 3)


def is_h_free(g: Graph, h: Graph) -> bool:
    return find_induced(g, h) is None


def is_cograph(g: Graph) -> bool:
    return is_h_free(g, P4)


# -- class labels --------------------------------------------------------------

@dataclass(frozen=True)
class ClassLabel:
    """One class membership of a graph, with its certificate when there is one."""

    name: Literal["P4Free", "SP1P4Free", "Split", "Cobipartite", "LineGraphKnown", "GirthAtLeast", "Unrestricted"]
    s: Optional[int] = None
    parts: Optional[tuple[tuple[int, ...], tuple[int, ...]]] = None
    girth: Optional[int] = None

    def __str__(self):
        if self.name == "SP1P4Free":
            return f"SP1P4Free(s={self.s})"
        if self.name == "GirthAtLeast":
            return f"GirthAtLeast({self.girth})"
        return self.name


def split_partition(g: Graph) -> Optional[tuple[set[int], set[int]]]:
    """``(clique, independent set)`` partitioning ``V`` or ``None``.

    Degree-sequence test: with degrees sorted decreasingly and ``m`` the
    largest index where ``d_m >= m - 1``, the top ``m`` vertices form the
    clique candidate.
    """
    order = sorted(range(g.n), key=lambda v: -g.degree(v))
    m = 0
    for i, v in enumerate(order, 1):
        if g.degree(v) >= i - 1:
            m = i
    clique, rest = set(order[:m]), set(order[m:])
    cmask, rmask = mask_of(clique), mask_of(rest)
    if all((g.adj[v] | 1 << v) & cmask == cmask for v in clique) and all(not g.adj[v] & rmask for v in rest):
        return clique, rest
    return None


def cobipartite_partition(g: Graph) -> Optional[tuple[set[int], set[int]]]:
    """Two cliques covering ``V`` (a 2-colouring of the complement) or ``None``."""
    co = complement(g)
    colour: dict[int, int] = {}
    for root in range(g.n):
        if root in colour:
            continue
        colour[root] = 0
        stack = [root]
        while stack:
            x = stack.pop()
            for y in iter_bits(co.adj[x]):
                if y not in colour:
                    colour[y] = 1 - colour[x]
                    stack.append(y)
                elif colour[y] == colour[x]:
                    return None
    a = {v for v, c in colour.items() if c == 0}
    return a, set(range(g.n)) - a


def classify_graph(g: Graph, max_s: int = 4) -> list[ClassLabel]:
    """All labels that apply to ``g``, most specific first."""
    labels = []
    if is_cograph(g):
        labels.append(ClassLabel("P4Free"))
    else:
        for s in range(1, max_s + 1):
            if is_h_free(g, sp1_p4(s)):
                labels.append(ClassLabel("SP1P4Free", s=s))
                break
    split = split_partition(g)
    if split is not None:
        labels.append(ClassLabel("Split", parts=(tuple(sorted(split[0])), tuple(sorted(split[1])))))
    cob = cobipartite_partition(g)
    if cob is not None:
        labels.append(ClassLabel("Cobipartite", parts=(tuple(sorted(cob[0])), tuple(sorted(cob[1])))))
    gi = girth(g)
    if gi is not None and gi > 3:
        labels.append(ClassLabel("GirthAtLeast", girth=gi))
    if not labels:
        labels.append(ClassLabel("Unrestricted"))
    return labels


# -- decompositions ------------------------------------------------------------

def spanning_cbs_split(g: Graph) -> tuple[set[int], set[int]]:
    """Split a connected cograph on at least two vertices into non-empty
    ``A``, ``B`` with every ``A``-``B`` edge present."""
    if g.n < 2:
        raise PreconditionError("need at least two vertices")
    if not is_connected(g):
        raise PreconditionError("graph is not connected")
    if not is_cograph(g):
        raise PreconditionError("graph is not P4-free")
    comps = connected_components(complement(g))
    a = comps[0]
    return a, set(range(g.n)) - a


class PartKind(enum.Enum):
    THREE_P1_FREE = "ThreeP1Free"
    UNION_OF_CLIQUES = "UnionOfCliques"
    BOTH = "Both"

    @property
    def cliques(self) -> bool:
        return self is not PartKind.THREE_P1_FREE


@dataclass(frozen=True)
class JoinDecomposition:
    """Parts ``D_1..D_p`` that are pairwise complete to each other.

    When some part is 3P1-free but not a union of cliques, all such parts are
    merged into ``parts[0]``; every other part is then a union of cliques.
    """

    parts: tuple[frozenset[int], ...]
    kinds: tuple[PartKind, ...]
    raw_parts: tuple[frozenset[int], ...] = field(default=(), compare=False)

    @property
    def merged(self) -> bool:
        return bool(self.kinds) and self.kinds[0] is PartKind.THREE_P1_FREE

    def part_of(self) -> dict[int, int]:
        return {v: i for i, part in enumerate(self.parts) for v in part}


def _is_union_of_cliques(g: Graph, part: set[int]) -> bool:
    pmask = mask_of(part)
    for comp in connected_components(g, pmask):
        cmask = mask_of(comp)
        if any((g.adj[v] | 1 << v) & cmask != cmask for v in comp):
            return False
    return True


def join_decomposition(g: Graph) -> JoinDecomposition:
    """Join factors of a (P1+P3)-free graph with their certified kinds."""
    raw = [frozenset(c) for c in connected_components(complement(g))]
    kinds = []
    for part in raw:
        order = sorted(part)
        three_free = is_h_free(g.induced(order), THREE_P1)
        cliques = _is_union_of_cliques(g, set(part))
        if three_free and cliques:
            kinds.append(PartKind.BOTH)
        elif three_free:
            kinds.append(PartKind.THREE_P1_FREE)
        elif cliques:
            kinds.append(PartKind.UNION_OF_CLIQUES)
        else:
            raise PreconditionError("input not (P1+P3)-free: a join factor is neither 3P1-free nor a union of cliques")
    pure = [p for p, kd in zip(raw, kinds) if kd is PartKind.THREE_P1_FREE]
    if not pure:
        return JoinDecomposition(tuple(raw), tuple(kinds), tuple(raw))
    merged = frozenset().union(*pure)
    rest = [p for p, kd in zip(raw, kinds) if kd is not PartKind.THREE_P1_FREE]
    return JoinDecomposition((merged, *rest),
                             (PartKind.THREE_P1_FREE,) + (PartKind.UNION_OF_CLIQUES,) * len(rest),
                             tuple(raw))


# -- dichotomy -----------------------------------------------------------------

class Outcome(enum.Enum):
    POLY_FIXED_K_SP1P4 = "PolyFixedK_SP1P4"
    POLY_P4_SUB = "Poly_P4Sub"
    OPEN = "Open"
    NP_HARD = "NPHard"


@dataclass(frozen=True)
class DispatchDecision:
    outcome: Outcome
    reason: Optional[str] = None
    s: Optional[int] = None

    def __str__(self):
        if self.outcome is Outcome.NP_HARD:
            return f"NPHard({self.reason})"
        if self.outcome is Outcome.POLY_FIXED_K_SP1P4:
            return f"PolyFixedK_SP1P4(s={self.s})"
        return self.outcome.value


Problem = Literal["kdcs", "dcs", "dp"]


def _has_cycle(h: Graph) -> bool:
    return h.m > h.n - len(connected_components(h))


def _component_sizes(h: Graph) -> list[int]:
    return sorted((len(c) for c in connected_components(h)), reverse=True)


def _min_s(h: Graph) -> int:
    """Smallest ``s`` with ``h`` an induced subgraph of sP1+P4, for a linear
    forest with at most one non-trivial component of at most 4 vertices."""
    sizes = _component_sizes(h)
    big = sizes[0] if sizes else 0
    isolated = sum(1 for c in sizes if c == 1)
    if big >= 3:
        return isolated
    if big == 2:
        return max(0, isolated - 1)
    return max(0, isolated - 2)


def classify_forbidden(h: Graph, problem: Problem) -> DispatchDecision:
    """Complexity of the problem on ``h``-free graphs.

    ``kdcs`` is k-Disjoint Connected Subgraphs for fixed k; ``dcs`` and
    ``dp`` have k in the input and share one classification.
    """
    if problem not in ("kdcs", "dcs", "dp"):
        raise ValueError(f"unknown problem {problem!r}")
    if h.n == 0:
        raise ValueError("empty pattern")
    if _has_cycle(h):
        return DispatchDecision(Outcome.NP_HARD, "cycle")
    if any(h.degree(v) >= 3 for v in range(h.n)):
        return DispatchDecision(Outcome.NP_HARD, "claw")
    if find_induced(h, TWO_P2) is not None:
        return DispatchDecision(Outcome.NP_HARD, "2P2")
    if problem == "kdcs":
        return DispatchDecision(Outcome.POLY_FIXED_K_SP1P4, s=_min_s(h))
    if find_induced(h, FOUR_P1) is not None:
        return DispatchDecision(Outcome.NP_HARD, "4P1")
    if find_induced(h, P1_P4) is not None:
        return DispatchDecision(Outcome.NP_HARD, "P1+P4")
    if find_induced(P4, h) is not None:
        return DispatchDecision(Outcome.POLY_P4_SUB)
    return DispatchDecision(Outcome.OPEN)
