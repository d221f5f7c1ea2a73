"""Solver selection and run reports."""

from __future__ import annotations

import logging
import os
import time
from dataclasses import dataclass, field
from typing import Optional

from .classes import P4, THREE_P1, cobipartite_partition, is_h_free, join_decomposition
from .errors import PreconditionError
from .exact import DEFAULT_DCS_CAP, DEFAULT_DP_CAP, DpStats, dp_dcs, dp_paths
from .instance import Instance, Solution, paths_from_sets, solution_errors
from .poly import reduce_dcs_to_dp_3p1free, solve_dcs_p4free, solve_dp_cobipartite, solve_kdcs_sp1p4, solve_p1p3

log = logging.getLogger(__name__)

ALGORITHMS = ("auto", "dp-exact", "dcs-exact", "p4free", "sp1p4", "cobipartite", "p1p3", "3p1-reduce")
ENV_DP_CAP = "DISJOINT_PATHS_DP_CAP"
ENV_DCS_CAP = "DISJOINT_PATHS_DCS_CAP"


def _env_cap(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from None


@dataclass
class RunConfig:
    algo: str = "auto"
    dp_cap: int = field(default_factory=lambda: _env_cap(ENV_DP_CAP, DEFAULT_DP_CAP))
    dcs_cap: int = field(default_factory=lambda: _env_cap(ENV_DCS_CAP, DEFAULT_DCS_CAP))
    seed: int = 0
    suite_scale: float = 1.0
    fmt: str = "human"
    s: int = 1
    time_limit: Optional[float] = None

    def __post_init__(self):
        if self.algo not in ALGORITHMS:
            raise ValueError(f"unknown algorithm {self.algo!r}")
        if self.dp_cap < 1 or self.dcs_cap < 1:
            raise ValueError("caps must be at least 1")
        if self.fmt not in ("human", "tsv"):
            raise ValueError(f"unknown output format {self.fmt!r}")


@dataclass
class SolveReport:
    instance_id: str
    algorithm: str
    verdict: bool
    solution: Optional[Solution]
    elapsed: float
    stats: DpStats = field(default_factory=DpStats)
    certificates: list[str] = field(default_factory=list)
    note: str = ""


def _pick_auto(inst: Instance) -> tuple[str, list[str]]:
    g = inst.graph
    if inst.kind == "dp":
        split = cobipartite_partition(g)
        if split is not None:
            return "cobipartite", [f"Cobipartite({sorted(split[0])}|{sorted(split[1])})"]
        if is_h_free(g, P4):
            return "p4free", ["P4Free"]
        log.info("no polynomial route for this DP instance; using exact DP")
        return "dp-exact", []
    if is_h_free(g, P4):
        return "p4free", ["P4Free"]
    if is_h_free(g, THREE_P1):
        return "3p1-reduce", ["3P1Free"]
    try:
        dec = join_decomposition(g)
    except PreconditionError:
        log.info("no polynomial route for this DCS instance; using exact DP")
        return "dcs-exact", []
    return "p1p3", [f"P1P3Free(parts={len(dec.parts)})"]


def _as_kind(inst: Instance, sol: Optional[Solution]) -> Optional[Solution]:
    """Convert a set solution into paths when the instance asks for paths."""
    if sol is None or sol.kind == inst.kind:
        return sol
    return paths_from_sets(inst, sol.parts)


def run_solver(inst: Instance, config: RunConfig, instance_id: str = "-") -> SolveReport:
    algo, certs = (_pick_auto(inst) if config.algo == "auto" else (config.algo, []))
    stats = DpStats()
    note = "no polynomial route, exact DP" if config.algo == "auto" and algo.endswith("-exact") else ""
    began = time.perf_counter()
    dcs = inst.as_dcs()
    if algo == "dp-exact":
        if inst.kind != "dp":
            raise PreconditionError("dp-exact needs a 'dp' instance")
        sol = dp_paths(inst, config.dp_cap, stats, config.time_limit)
    elif algo == "dcs-exact":
        sol = _as_kind(inst, dp_dcs(dcs, config.dcs_cap, stats, config.time_limit))
    elif algo == "p4free":
        sol = _as_kind(inst, solve_dcs_p4free(dcs))
    elif algo == "sp1p4":
        sol = _as_kind(inst, solve_kdcs_sp1p4(dcs, config.s))
    elif algo == "cobipartite":
        if inst.kind != "dp":
            raise PreconditionError("cobipartite needs a 'dp' instance")
        sol = solve_dp_cobipartite(inst)
    elif algo == "3p1-reduce":
        red = reduce_dcs_to_dp_3p1free(dcs)
        inner = dp_paths(red.target, config.dp_cap, stats, config.time_limit)
        sol = None if inner is None else _as_kind(inst, red.lift(inner))
    elif algo == "p1p3":
        result = solve_p1p3(dcs, lambda d: dp_paths(d, config.dp_cap, stats, config.time_limit))
        note = f"stage={result.stage}"
        if result.verdict and result.solution is None:
            elapsed = time.perf_counter() - began
            return SolveReport(instance_id, algo, True, None, elapsed, stats, certs,
                               note + "; verdict from the reduced 3P1-free instance, no solution")
        sol = _as_kind(inst, result.solution) if result.verdict else None
    else:
        raise ValueError(f"unknown algorithm {algo!r}")
    elapsed = time.perf_counter() - began
    if sol is not None:
        errors = solution_errors(inst, sol)
        if errors:
            raise RuntimeError(f"{algo} returned an invalid solution: {errors[0]}")
    return SolveReport(instance_id, algo, sol is not None, sol, elapsed, stats, certs, note)
