import itertools
import time

import pytest
from hypothesis import given, settings

from conftest import instances
from disjoint_paths.errors import ResourceLimitError
from disjoint_paths.exact import (
    DpStats, _connected_sets_containing, dp_dcs, dp_paths, naive_oracle, oracle_2dcs,
)
from disjoint_paths.graph import Graph, is_connected_within
from disjoint_paths.instance import Instance, verify_solution
from disjoint_paths.patterns import complete, cycle, path


@given(instances("dp", min_n=2, max_n=9))
@settings(max_examples=300, deadline=None)
def test_dp_paths_matches_naive(inst):
    sol = dp_paths(inst)
    assert (sol is not None) == naive_oracle(inst)
    if sol is not None:
        assert verify_solution(inst, sol)


@given(instances("dcs", max_n=8))
@settings(max_examples=300, deadline=None)
def test_dp_dcs_matches_naive(inst):
    sol = dp_dcs(inst)
    assert (sol is not None) == naive_oracle(inst)
    if sol is not None:
        assert verify_solution(inst, sol)


def test_dp_paths_simple_cases():
    # two pairs crossing on a 4-cycle cannot both be routed
    assert dp_paths(Instance("dp", cycle(4), [(0, 2), (1, 3)])) is None
    sol = dp_paths(Instance("dp", cycle(6), [(0, 2), (3, 5)]))
    assert sol.parts == ((0, 1, 2), (3, 4, 5))
    assert dp_paths(Instance("dp", complete(4), [(0, 1)])).parts == ((0, 1),)


def test_dp_paths_blocks_other_terminals():
    # the only 0-2 route passes through terminal 1 of the other pair
    inst = Instance("dp", path(4), [(0, 2), (1, 3)])
    assert dp_paths(inst) is None
    assert not naive_oracle(inst)


def test_k_zero():
    assert dp_paths(Instance("dp", path(3), [])).parts == ()
    assert dp_dcs(Instance("dcs", path(3), [])).parts == ()


def test_worked_example_exact(worked_example):
    sol = dp_dcs(worked_example)
    assert verify_solution(worked_example, sol)
    assert naive_oracle(worked_example) and oracle_2dcs(worked_example)


def test_caps_and_kinds():
    with pytest.raises(ResourceLimitError):
        dp_paths(Instance("dp", path(6), [(0, 5)]), cap=5)
    with pytest.raises(ResourceLimitError):
        dp_dcs(Instance("dcs", path(6), [(0, 5)]), cap=5)
    with pytest.raises(ResourceLimitError):
        naive_oracle(Instance("dcs", path(13), [(0, 5)]))
    with pytest.raises(ValueError):
        dp_dcs(Instance("dp", path(3), [(0, 2)]))
    with pytest.raises(ValueError):
        dp_paths(Instance("dcs", path(3), [(0, 2)]))


def test_time_limit_is_checked_between_layers():
    inst = Instance("dp", cycle(12), [(0, 6), (1, 7), (2, 8)])
    with pytest.raises(ResourceLimitError):
        dp_paths(inst, time_limit=0.0)


def test_stats_envelopes():
    for n in (6, 8, 10):
        inst = Instance("dp", cycle(n), [(0, n // 2), (1, n - 1)])
        stats = DpStats()
        dp_paths(inst, stats=stats)
        assert stats.states <= 2 ** n * n * inst.k
        assert stats.layers == 2
        dstats = DpStats()
        dp_dcs(inst.as_dcs(), stats=dstats)
        assert dstats.submask_iterations <= 3 ** n * inst.k


def test_dp_paths_state_count_doubles():
    counts = []
    for n in (10, 11):
        stats = DpStats()
        dp_paths(Instance("dp", cycle(n), [(0, 3), (5, 7)]), stats=stats)
        counts.append(stats.states)
    assert 1.9 < counts[1] / counts[0] < 2.4


def brute_connected_sets(g, root, allowed):
    others = sorted(allowed - {root})
    out = set()
    for r in range(len(others) + 1):
        for extra in itertools.combinations(others, r):
            s = {root, *extra}
            if is_connected_within(g, s):
                out.add(frozenset(s))
    return out


@given(instances("dcs", max_n=8, max_k=1, max_set=1))
@settings(max_examples=150)
def test_connected_set_enumeration(inst):
    g = inst.graph
    root = inst.terminals[0][0]
    allowed = set(range(0, g.n, 2)) | {root}
    produced = list(_connected_sets_containing(g, root, allowed))
    assert len(produced) == len(set(produced))
    assert set(produced) == brute_connected_sets(g, root, allowed)


@given(instances("dcs", max_n=8, max_k=2))
@settings(max_examples=200, deadline=None)
def test_oracle_2dcs_matches_dp(inst):
    if inst.k != 2:
        return
    assert oracle_2dcs(inst) == (dp_dcs(inst) is not None)


def test_oracle_2dcs_requires_two_sets():
    with pytest.raises(ValueError):
        oracle_2dcs(Instance("dcs", path(3), [(0,)]))
