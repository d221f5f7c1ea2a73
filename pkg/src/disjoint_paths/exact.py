"""Exact exponential solvers and brute-force oracles.

``dp_paths`` is a Held-Karp style table ``D[S, v, i]`` over vertex subsets:
``S`` splits into ``s_j``-``t_j`` paths for ``j < i`` plus a path from ``s_i``
ending in ``v``. ``dp_dcs`` tables ``D[S, i]``: ``S`` splits into connected
``S_1..S_i`` with ``Z_j`` inside ``S_j``. The oracles share no code with the
tables and exist to cross-check them.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

import numpy as np

from .errors import ResourceLimitError
from .graph import Graph, is_connected_mask, iter_bits, mask_of
from .instance import Instance, Solution

DEFAULT_DP_CAP = 24
DEFAULT_DCS_CAP = 18
NAIVE_DCS_CAP = 12
NAIVE_DP_CAP = 14
ORACLE_2DCS_CAP = 26


@dataclass
class DpStats:
    """Work counters filled in by the exact solvers.

    ``states`` counts evaluated ``(S, v, i)`` entries for ``dp_paths`` and
    stored ``(S, i)`` entries for ``dp_dcs``; ``true_states`` counts the
    entries that came out true; ``submask_iterations`` counts inner-loop
    iterations of the DCS subset enumeration.
    """

    states: int = 0
    true_states: int = 0
    submask_iterations: int = 0
    layers: int = 0
    elapsed: float = 0.0


def _check_deadline(deadline: Optional[float], layer: int) -> None:
    if deadline is not None and time.perf_counter() > deadline:
        raise ResourceLimitError(f"time limit hit after layer {layer}")


# -- Disjoint Paths ----------------------------------------------------------

@lru_cache(maxsize=None)
def _masks_by_popcount(n: int) -> list[np.ndarray]:
    masks = np.arange(1 << n, dtype=np.int64)
    counts = np.zeros(1 << n, dtype=np.int64)
    for v in range(n):
        counts += (masks >> v) & 1
    order = np.argsort(counts, kind="stable")
    bounds = np.searchsorted(counts[order], np.arange(n + 2))
    return [order[bounds[c]:bounds[c + 1]] for c in range(n + 1)]


def _paths_layer(n, adj, levels, start, seed, stats):
    """Endpoint masks ``E[S]`` of one layer: bit ``v`` set iff ``D[S, v, i]``.

    ``seed`` holds the entries for ``v = start`` (``D[S, s_i, i]``); every
    other entry follows from ``D[S - v, w, i]`` for a neighbour ``w`` of ``v``,
    so sets are processed by increasing size.
    """
    table = seed
    for c in range(2, n + 1):
        level = levels[c]
        for v in range(n):
            if v == start:
                continue
            bit = 1 << v
            members = level[(level & bit) != 0]
            stats.states += len(members)
            hit = (table[members ^ bit] & adj[v]) != 0
            table[members[hit]] |= bit
    return table


def dp_paths(inst: Instance, cap: int = DEFAULT_DP_CAP, stats: Optional[DpStats] = None,
             time_limit: Optional[float] = None) -> Optional[Solution]:
    """Solve Disjoint Paths exactly in ``O(2^n n^2 k)`` time.

    Returns a path solution or ``None`` for a no-instance. The accepting
    state is walked back through the recurrence to recover the paths.
    """
    if inst.kind != "dp":
        raise ValueError("dp_paths needs a 'dp' instance")
    n = inst.n
    if n > cap:
        raise ResourceLimitError(f"dp_paths: n={n} exceeds cap {cap}")
    stats = stats if stats is not None else DpStats()
    if inst.k == 0:
        return Solution("dp", ())
    began = time.perf_counter()
    deadline = None if time_limit is None else began + time_limit
    adj = np.array(inst.graph.adj, dtype=np.int64)
    levels = _masks_by_popcount(n)
    pairs = inst.terminals
    layers = []
    for i, (s, _) in enumerate(pairs):
        seed = np.zeros(1 << n, dtype=np.int64)
        sbit = 1 << s
        if i == 0:
            seed[sbit] = sbit
        else:
            prev_t = pairs[i - 1][1]
            with_s = np.arange(1 << n, dtype=np.int64)
            with_s = with_s[(with_s & sbit) != 0]
            ok = (layers[-1][with_s ^ sbit] >> prev_t) & 1
            seed[with_s[ok != 0]] = sbit
        stats.states += 1 << max(n - 1, 0)
        layers.append(_paths_layer(n, adj, levels, s, seed, stats))
        stats.layers += 1
        _check_deadline(deadline, i + 1)
    for table in layers:
        stats.true_states += int(sum(int(np.count_nonzero((table >> v) & 1)) for v in range(n)))
    stats.elapsed += time.perf_counter() - began

    t_last = pairs[-1][1]
    accepting = np.nonzero((layers[-1] >> t_last) & 1)[0]
    if len(accepting) == 0:
        return None
    return _walk_paths(inst, layers, int(accepting[0]))


def _walk_paths(inst: Instance, layers, mask: int) -> Solution:
    adj = inst.graph.adj
    paths: list[list[int]] = []
    i = inst.k - 1
    v = inst.terminals[i][1]
    current = [v]
    while True:
        s = inst.terminals[i][0]
        if v == s:
            paths.append(current[::-1])
            mask ^= 1 << s
            if i == 0:
                break
            i -= 1
            v = inst.terminals[i][1]
            current = [v]
            continue
        rest = mask ^ (1 << v)
        table = layers[i]
        w = next(w for w in iter_bits(adj[v] & rest) if table[rest] >> w & 1)
        mask, v = rest, w
        current.append(w)
    return Solution("dp", tuple(tuple(p) for p in paths[::-1]))


# -- Disjoint Connected Subgraphs --------------------------------------------

def dp_dcs(inst: Instance, cap: int = DEFAULT_DCS_CAP, stats: Optional[DpStats] = None,
           time_limit: Optional[float] = None) -> Optional[Solution]:
    """Solve Disjoint Connected Subgraphs exactly in ``O(3^n k m)`` time.

    Layer ``i`` is built from the true entries of layer ``i - 1``: for each
    such ``S`` every connected ``S'`` containing ``Z_i`` inside the remaining
    vertices gives a true ``D[S + S', i]``. Candidate ``S'`` never contain
    terminals of other sets, since those must end up in their own parts.
    """
    if inst.kind != "dcs":
        raise ValueError("dp_dcs needs a 'dcs' instance")
    n = inst.n
    if n > cap:
        raise ResourceLimitError(f"dp_dcs: n={n} exceeds cap {cap}")
    stats = stats if stats is not None else DpStats()
    if inst.k == 0:
        return Solution("dcs", ())
    began = time.perf_counter()
    deadline = None if time_limit is None else began + time_limit
    g = inst.graph
    zmasks = [mask_of(z) for z in inst.terminals]
    free = g.vertex_mask & ~mask_of(inst.terminal_vertices())
    connected: dict[int, bool] = {}

    def is_conn(mask: int) -> bool:
        hit = connected.get(mask)
        if hit is None:
            hit = connected[mask] = is_connected_mask(g, mask)
        return hit

    # table[i][S] = the part S_i chosen for S (parent pointer)
    tables: list[dict[int, int]] = []
    prev = {0: 0}
    for i, z in enumerate(zmasks):
        layer: dict[int, int] = {}
        for used in prev:
            avail = free & ~used
            sub = avail
            while True:
                stats.submask_iterations += 1
                part = sub | z
                if is_conn(part):
                    layer.setdefault(used | part, part)
                if not sub:
                    break
                sub = (sub - 1) & avail
        stats.states += len(layer)
        stats.true_states += len(layer)
        stats.layers += 1
        tables.append(layer)
        prev = layer
        _check_deadline(deadline, i + 1)
        if not layer:
            break
    stats.elapsed += time.perf_counter() - began
    if len(tables) < inst.k or not tables[-1]:
        return None
    mask = min(tables[-1])
    parts = []
    for table in reversed(tables):
        part = table[mask]
        parts.append(tuple(iter_bits(part)))
        mask ^= part
    return Solution("dcs", tuple(parts[::-1]))


# -- oracles -----------------------------------------------------------------

def _connected_set(g: Graph, vertices: set[int]) -> bool:
    if not vertices:
        return False
    start = next(iter(vertices))
    seen, stack = {start}, [start]
    while stack:
        x = stack.pop()
        for y in g.neighbors(x):
            if y in vertices and y not in seen:
                seen.add(y)
                stack.append(y)
    return seen == vertices


def naive_oracle(inst: Instance) -> bool:
    """Brute force. For ``dcs`` every non-terminal vertex is assigned to one
    of the ``k`` parts or left unused; for ``dp`` simple paths are
    enumerated pair by pair with a used-vertex set."""
    if inst.kind == "dcs":
        if inst.n > NAIVE_DCS_CAP:
            raise ResourceLimitError(f"naive_oracle: n={inst.n} exceeds {NAIVE_DCS_CAP}")
        return _naive_dcs(inst)
    if inst.n > NAIVE_DP_CAP:
        raise ResourceLimitError(f"naive_oracle: n={inst.n} exceeds {NAIVE_DP_CAP}")
    return _naive_dp(inst)


def _naive_dcs(inst: Instance) -> bool:
    g, k = inst.graph, inst.k
    owner = inst.owner()
    others = [v for v in range(g.n) if v not in owner]
    for choice in itertools.product(range(k + 1), repeat=len(others)):
        parts = [set(z) for z in inst.terminals]
        for v, c in zip(others, choice):
            if c < k:
                parts[c].add(v)
        if all(_connected_set(g, p) for p in parts):
            return True
    return False


def _naive_dp(inst: Instance) -> bool:
    g = inst.graph
    terminals = inst.terminal_vertices()
    failed: set[tuple[int, frozenset]] = set()

    def solve(i: int, used: frozenset) -> bool:
        if i == inst.k:
            return True
        if (i, used) in failed:
            return False
        s, t = inst.terminals[i]
        blocked = used | (terminals - {s, t})

        def walk(x: int, on_path: set[int]) -> bool:
            if x == t:
                return solve(i + 1, used | on_path)
            for y in g.neighbors(x):
                if y not in on_path and y not in blocked:
                    on_path.add(y)
                    if walk(y, on_path):
                        return True
                    on_path.remove(y)
            return False

        if walk(s, {s}):
            return True
        failed.add((i, used))
        return False

    return solve(0, frozenset())


def _connected_sets_containing(g: Graph, root: int, allowed: set[int]):
    """Every connected vertex set containing ``root`` inside ``allowed``,
    each produced once (grow by frontier vertices, excluding rejected ones)."""

    def grow(current: frozenset, frontier: frozenset, banned: frozenset):
        yield current
        banned = set(banned)
        for v in sorted(frontier):
            banned.add(v)
            new_frontier = (frontier | {y for y in g.neighbors(v) if y in allowed}) - current - banned
            yield from grow(current | {v}, frozenset(new_frontier - {v}), frozenset(banned))

    start = frozenset([root])
    frontier = frozenset(y for y in g.neighbors(root) if y in allowed)
    yield from grow(start, frontier, start)


def oracle_2dcs(inst: Instance) -> bool:
    """Enumerate connected ``S_1`` containing ``Z_1`` and avoiding ``Z_2``;
    accept when ``Z_2`` lies in one component of the rest."""
    if inst.kind != "dcs" or inst.k != 2:
        raise ValueError("oracle_2dcs needs a 'dcs' instance with k = 2")
    if inst.n > ORACLE_2DCS_CAP:
        raise ResourceLimitError(f"oracle_2dcs: n={inst.n} exceeds {ORACLE_2DCS_CAP}")
    g = inst.graph
    z1, z2 = set(inst.terminals[0]), set(inst.terminals[1])
    allowed = set(range(g.n)) - z2
    root = min(z1)
    for s1 in _connected_sets_containing(g, root, allowed):
        if z1 <= s1 and _reach_all(g, set(range(g.n)) - s1, z2):
            return True
    return False


def _reach_all(g: Graph, within: set[int], targets: set[int]) -> bool:
    start = next(iter(targets))
    seen, stack = {start}, [start]
    while stack:
        x = stack.pop()
        for y in g.neighbors(x):
            if y in within and y not in seen:
                seen.add(y)
                stack.append(y)
    return targets <= seen
