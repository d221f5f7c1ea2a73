"""State-count benchmark for the exact solvers.

Each row records the counters of one run next to its envelope:
``2^n * n * k`` evaluated states for ``dp_paths`` and ``3^n * k`` submask
iterations for ``dp_dcs``.
"""

from __future__ import annotations

import csv
import io
import random
from dataclasses import asdict, dataclass, fields

from .exact import DpStats, dp_dcs, dp_paths
from .generators import random_graph, random_terminals
from .instance import Instance

BENCH_FIELDS = ("solver", "n", "k", "seed", "verdict", "states", "true_states", "submask_iterations",
                "envelope", "within", "seconds")


@dataclass(frozen=True)
class BenchRow:
    solver: str
    n: int
    k: int
    seed: int
    verdict: bool
    states: int
    true_states: int
    submask_iterations: int
    envelope: int
    within: bool
    seconds: float


def _instance(kind: str, n: int, k: int, seed: int) -> Instance:
    rng = random.Random(f"bench/{kind}/{n}/{k}/{seed}")
    g = random_graph(rng, n, 0.3)
    return Instance(kind, g, random_terminals(rng, g, k, kind, max_set=2))


def bench_one(solver: str, n: int, k: int, seed: int) -> BenchRow:
    stats = DpStats()
    if solver == "dp_paths":
        inst = _instance("dp", n, k, seed)
        sol = dp_paths(inst, cap=max(n, 1), stats=stats)
        measured, envelope = stats.states, (1 << n) * n * k
    elif solver == "dp_dcs":
        inst = _instance("dcs", n, k, seed)
        sol = dp_dcs(inst, cap=max(n, 1), stats=stats)
        measured, envelope = stats.submask_iterations, 3 ** n * k
    else:
        raise ValueError(f"unknown solver {solver!r}")
    return BenchRow(solver, n, k, seed, sol is not None, stats.states, stats.true_states,
                    stats.submask_iterations, envelope, measured <= envelope, round(stats.elapsed, 6))


def run_bench(ns=range(10, 17), k: int = 2, seed: int = 0, solvers=("dp_paths", "dp_dcs")) -> list[BenchRow]:
    return [bench_one(solver, n, k, seed) for solver in solvers for n in ns]


def format_tsv(rows: list[BenchRow], timings: bool = True) -> str:
    """Tab-separated table; ``timings=False`` blanks the wall-clock column
    so the output is identical across reruns."""
    out = io.StringIO()
    writer = csv.writer(out, delimiter="\t", lineterminator="\n")
    writer.writerow(BENCH_FIELDS)
    for row in rows:
        values = asdict(row)
        if not timings:
            values["seconds"] = ""
        writer.writerow([int(v) if isinstance(v, bool) else v for v in (values[f] for f in BENCH_FIELDS)])
    return out.getvalue()


def parse_tsv(text: str) -> list[BenchRow]:
    reader = csv.reader(io.StringIO(text), delimiter="\t")
    header = next(reader)
    if tuple(header) != BENCH_FIELDS:
        raise ValueError(f"unexpected header {header}")
    types = {f.name: f.type for f in fields(BenchRow)}
    rows = []
    for record in reader:
        values = {}
        for name, raw in zip(header, record):
            kind = types[name]
            if kind == "bool":
                values[name] = raw == "1"
            elif kind == "int":
                values[name] = int(raw)
            elif kind == "float":
                values[name] = float(raw) if raw else 0.0
            else:
                values[name] = raw
        rows.append(BenchRow(**values))
    return rows


def format_human(rows: list[BenchRow]) -> str:
    lines = [f"{'solver':<9} {'n':>3} {'k':>2} {'verdict':>7} {'measured':>12} {'envelope':>14} {'ok':>3} {'sec':>8}"]
    for r in rows:
        measured = r.states if r.solver == "dp_paths" else r.submask_iterations
        lines.append(f"{r.solver:<9} {r.n:>3} {r.k:>2} {('yes' if r.verdict else 'no'):>7} {measured:>12} "
                     f"{r.envelope:>14} {('ok' if r.within else 'BAD'):>3} {r.seconds:>8.3f}")
    return "\n".join(lines)
