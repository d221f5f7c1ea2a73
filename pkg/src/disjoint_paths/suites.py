"""Randomized agreement suites: every fast or structural routine against an
independent exact answer, on seeded instances.

A suite never stops at the first disagreement; each failing instance is kept
in the instance text format so it can be replayed with ``solve``.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterator, Optional

from .classes import FOUR_P1, P1_P4, THREE_P1, is_h_free
from .exact import dp_dcs, dp_paths, naive_oracle, oracle_2dcs
from .gadgets import CnfFormula, gen_4p1_p1p4, gen_girth_dp, gen_line_2dcs, terminal_split_witness
from .generators import gen_random_instance
from .graph import girth
from .instance import Instance, format_instance, verify_solution
from .poly import reduce_dcs_to_dp_3p1free, solve_dcs_p4free, solve_dp_cobipartite, solve_kdcs_sp1p4, solve_p1p3


@dataclass
class Failure:
    instance_id: str
    reason: str
    text: str


@dataclass
class SuiteResult:
    name: str
    total: int = 0
    passed: int = 0
    failures: list[Failure] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return self.total > 0 and self.passed == self.total

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{self.name}\t{status}\t{self.passed}/{self.total}\t{self.elapsed:.2f}s"


# A case yields (instance id, instance to serialize on failure, check); the
# check returns None on agreement and a reason otherwise.
Case = tuple[str, Instance, Callable[[], Optional[str]]]


def _rng(name: str, seed: int, i: int) -> random.Random:
    return random.Random(f"{name}/{seed}/{i}")


def _yes_needs_solution(inst: Instance, sol) -> Optional[str]:
    if sol is not None and not verify_solution(inst, sol):
        return "returned solution fails verification"
    return None


def _verdicts(name: str, fast: bool, exact: bool) -> Optional[str]:
    return None if fast == exact else f"{name} says {fast}, exact answer is {exact}"


def _cases_exact_dcs(seed: int, count: int) -> Iterator[Case]:
    for i in range(count):
        rng = _rng("exact-dcs", seed, i)
        n, k = rng.randint(4, 10), rng.randint(1, 3)
        inst = gen_random_instance("general", n, k, rng.randrange(1 << 30), "dcs", max_set=min(3, n // k))

        def check(inst=inst):
            sol = dp_dcs(inst)
            return _verdicts("dp_dcs", sol is not None, naive_oracle(inst)) or _yes_needs_solution(inst, sol)

        yield f"exact-dcs/{i}", inst, check


def _cases_exact_dp(seed: int, count: int) -> Iterator[Case]:
    for i in range(count):
        rng = _rng("exact-dp", seed, i)
        n = rng.randint(4, 12)
        k = rng.randint(1, min(3, n // 2))
        inst = gen_random_instance("general", n, k, rng.randrange(1 << 30), "dp")

        def check(inst=inst):
            sol = dp_paths(inst)
            return _verdicts("dp_paths", sol is not None, naive_oracle(inst)) or _yes_needs_solution(inst, sol)

        yield f"exact-dp/{i}", inst, check


def _cases_p4free(seed: int, count: int) -> Iterator[Case]:
    for i in range(count):
        rng = _rng("p4free", seed, i)
        n = rng.randint(2, 12)
        k = rng.randint(1, min(3, n))
        inst = gen_random_instance("cograph", n, k, rng.randrange(1 << 30), "dcs", max_set=min(3, n // k))

        def check(inst=inst):
            sol = solve_dcs_p4free(inst)
            exact = dp_dcs(inst) is not None
            return _verdicts("solve_dcs_p4free", sol is not None, exact) or _yes_needs_solution(inst, sol)

        yield f"p4free/{i}", inst, check


def _cases_cobipartite(seed: int, count: int) -> Iterator[Case]:
    for i in range(count):
        rng = _rng("cobipartite", seed, i)
        n = rng.randint(4, 16)
        k = rng.randint(1, min(4, n // 2))
        inst = gen_random_instance("cobipartite", n, k, rng.randrange(1 << 30), "dp", p=rng.uniform(0.05, 0.5),
                                   independent=True)

        def check(inst=inst):
            sol = solve_dp_cobipartite(inst)
            exact = dp_paths(inst) is not None
            bad = _verdicts("solve_dp_cobipartite", sol is not None, exact) or _yes_needs_solution(inst, sol)
            if bad is None and sol is not None and any(len(p) > 4 for p in sol.parts):
                bad = "a path has more than 3 edges"
            return bad

        yield f"cobipartite/{i}", inst, check


def _cases_sp1p4(seed: int, count: int) -> Iterator[Case]:
    for i in range(count):
        rng = _rng("sp1p4", seed, i)
        n = rng.randint(4, 9)
        inst = gen_random_instance("p1p4free", n, 2, rng.randrange(1 << 30), "dcs", max_set=min(3, n // 2))

        def check(inst=inst):
            sol = solve_kdcs_sp1p4(inst, 1)
            exact = dp_dcs(inst) is not None
            return _verdicts("solve_kdcs_sp1p4", sol is not None, exact) or _yes_needs_solution(inst, sol)

        yield f"sp1p4/{i}", inst, check


def all_clauses(variables: int) -> list[tuple[int, ...]]:
    """Every clause of 1 to 3 distinct literals over ``variables`` variables."""
    lits = [l for v in range(1, variables + 1) for l in (v, -v)]
    return [c for size in (1, 2, 3) for c in itertools.combinations(lits, size)]


def line_gadget_formulas() -> list[CnfFormula]:
    """All 2-variable formulas with 1 or 2 distinct clauses, then all
    1-clause 3-variable formulas."""
    two = all_clauses(2)
    out = [CnfFormula(2, [c]) for c in two]
    out += [CnfFormula(2, [a, b]) for a, b in itertools.combinations(two, 2)]
    out += [CnfFormula(3, [c]) for c in all_clauses(3)]
    return out


def _cases_line2dcs(seed: int, count: int) -> Iterator[Case]:
    formulas = line_gadget_formulas()
    for i, phi in enumerate(formulas[:count]):
        gadget = gen_line_2dcs(phi)

        def check(phi=phi, inst=gadget.instance):
            return _verdicts("oracle_2dcs(gadget)", oracle_2dcs(inst), phi.is_satisfiable())

        yield f"line2dcs/{i}", gadget.instance, check


def _cases_girth(seed: int, count: int) -> Iterator[Case]:
    for i in range(count):
        rng = _rng("girth", seed, i)
        g = (5, 7)[i % 2]
        for attempt in itertools.count():
            n = rng.randint(4, 9)
            k = rng.randint(1, min(3, n // 2))
            inst = gen_random_instance("general", n, k, rng.randrange(1 << 30), "dp", p=rng.uniform(0.1, 0.45))
            out = gen_girth_dp(inst, g)
            if out.n <= 16:
                break

        def check(inst=inst, out=out, g=g):
            before = girth(inst.graph)
            after = girth(out.graph)
            if before is not None and (after is None or after < g):
                return f"girth {after} below target {g}"
            return _verdicts("dp_paths(subdivided)", dp_paths(out) is not None, dp_paths(inst) is not None)

        yield f"girth/{i}", inst, check


def _cases_split4p1(seed: int, count: int) -> Iterator[Case]:
    for i in range(count):
        rng = _rng("split4p1", seed, i)
        n = rng.randint(4, 14)
        k = rng.randint(1, min(3, n // 2))
        inst = gen_random_instance("split", n, k, rng.randrange(1 << 30), "dp")

        def check(inst=inst):
            out = gen_4p1_p1p4(inst, terminal_split_witness(inst))
            if not is_h_free(out.graph, FOUR_P1) or not is_h_free(out.graph, P1_P4):
                return "output contains 4P1 or P1+P4"
            return _verdicts("dp_paths(output)", dp_paths(out) is not None, dp_paths(inst) is not None)

        yield f"split4p1/{i}", inst, check


def _cases_3p1free(seed: int, count: int) -> Iterator[Case]:
    for i in range(count):
        rng = _rng("3p1free", seed, i)
        n = rng.randint(3, 12)
        k = rng.randint(1, min(4, n))
        inst = gen_random_instance("3p1free", n, k, rng.randrange(1 << 30), "dcs", max_set=min(3, n // k),
                                   independent=True)

        def check(inst=inst):
            red = reduce_dcs_to_dp_3p1free(inst)
            if not is_h_free(red.target.graph, THREE_P1):
                return "reduced graph is not 3P1-free"
            inner = dp_paths(red.target)
            sol = None if inner is None else red.lift(inner)
            exact = dp_dcs(inst) is not None
            return _verdicts("3P1-free reduction", sol is not None, exact) or _yes_needs_solution(inst, sol)

        yield f"3p1free/{i}", inst, check


def _cases_p1p3free(seed: int, count: int) -> Iterator[Case]:
    for i in range(count):
        rng = _rng("p1p3free", seed, i)
        n = rng.randint(4, 12)
        k = rng.randint(1, min(4, n // 2))
        inst = gen_random_instance("p1p3free", n, k, rng.randrange(1 << 30), "dcs", max_set=min(3, n // k),
                                   independent=True)

        def check(inst=inst):
            result = solve_p1p3(inst)
            dp_inst = result.artifacts.dp_instance
            if dp_inst is not None and not is_h_free(dp_inst.graph, THREE_P1):
                return "emitted DP instance is not 3P1-free"
            exact = dp_dcs(inst) is not None
            return _verdicts(f"solve_p1p3[{result.stage}]", result.verdict, exact) or \
                _yes_needs_solution(inst, result.solution)

        yield f"p1p3free/{i}", inst, check


SUITES: dict[str, tuple[Callable[[int, int], Iterator[Case]], int]] = {
    "exact-dcs": (_cases_exact_dcs, 1000),
    "exact-dp": (_cases_exact_dp, 1000),
    "p4free": (_cases_p4free, 500),
    "cobipartite": (_cases_cobipartite, 500),
    "sp1p4": (_cases_sp1p4, 200),
    "line2dcs": (_cases_line2dcs, len(line_gadget_formulas())),
    "girth": (_cases_girth, 200),
    "split4p1": (_cases_split4p1, 200),
    "3p1free": (_cases_3p1free, 200),
    "p1p3free": (_cases_p1p3free, 200),
}


def run_suite(name: str, seed: int = 0, count: Optional[int] = None, scale: float = 1.0) -> SuiteResult:
    make, default = SUITES[name]
    if count is None:
        count = max(1, round(default * scale))
    result = SuiteResult(name)
    began = time.perf_counter()
    for iid, inst, check in make(seed, count):
        result.total += 1
        try:
            reason = check()
        except Exception as exc:  # a crash is a disagreement too
            reason = f"{type(exc).__name__}: {exc}"
        if reason is None:
            result.passed += 1
        else:
            result.failures.append(Failure(iid, reason, format_instance(inst)))
    result.elapsed = time.perf_counter() - began
    return result


def write_failures(result: SuiteResult, directory: Path) -> list[Path]:
    directory.mkdir(parents=True, exist_ok=True)
    paths = []
    for f in result.failures:
        path = directory / (f.instance_id.replace("/", "-") + ".inst")
        path.write_text(f"# {f.reason}\n" + f.text)
        paths.append(path)
    return paths
