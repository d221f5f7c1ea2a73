"""Command-line interface.

Exit codes: 0 solved or passed, 2 parse or input error, 3 resource cap hit,
4 suite disagreement, envelope violation or a rejected solution.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import bench as bench_mod
from .classes import classify_forbidden, classify_graph
from .dispatch import ALGORITHMS, ENV_DCS_CAP, ENV_DP_CAP, RunConfig, SolveReport, run_solver
from .errors import ParseError, PreconditionError, ResourceLimitError
from .gadgets import gen_4p1_p1p4, gen_girth_dp, gen_line_2dcs, parse_dimacs, terminal_split_witness
from .generators import GRAPH_CLASSES, gen_random_instance
from .graph import parse_graph
from .instance import format_instance, format_solution, parse_instance, parse_solution, solution_errors
from .patterns import parse_pattern
from .suites import SUITES, run_suite, write_failures

EXIT_OK, EXIT_PARSE, EXIT_RESOURCE, EXIT_DISAGREE = 0, 2, 3, 4

log = logging.getLogger("disjoint_paths")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _config(args) -> RunConfig:
    kw = dict(algo=getattr(args, "algo", "auto"), seed=getattr(args, "seed", 0),
              fmt=getattr(args, "format", "human"), s=getattr(args, "s", 1),
              time_limit=getattr(args, "time_limit", None))
    if getattr(args, "dp_cap", None) is not None:
        kw["dp_cap"] = args.dp_cap
    if getattr(args, "dcs_cap", None) is not None:
        kw["dcs_cap"] = args.dcs_cap
    return RunConfig(**kw)


def _report_text(report: SolveReport, fmt: str) -> str:
    verdict = "yes" if report.verdict else "no"
    if fmt == "tsv":
        parts = "|".join(",".join(map(str, p)) for p in report.solution.parts) if report.solution else ""
        return "\t".join([report.instance_id, report.algorithm, verdict, str(report.stats.states),
                          str(report.stats.submask_iterations), parts]) + "\n"
    lines = [f"instance: {report.instance_id}", f"algorithm: {report.algorithm}", f"verdict: {verdict}"]
    if report.certificates:
        lines.append("certificates: " + "; ".join(report.certificates))
    if report.note:
        lines.append(f"note: {report.note}")
    if report.stats.layers:
        lines.append(f"dp states: {report.stats.states} (true {report.stats.true_states}), "
                     f"submask iterations: {report.stats.submask_iterations}")
    lines.append(f"elapsed: {report.elapsed:.4f}s")
    text = "\n".join(lines) + "\n"
    if report.solution is not None:
        text += format_solution(report.solution)
    return text


def cmd_solve(args) -> int:
    inst = parse_instance(_read(args.file))
    report = run_solver(inst, _config(args), instance_id=args.file)
    sys.stdout.write(_report_text(report, args.format))
    return EXIT_OK


def cmd_classify(args) -> int:
    if args.pattern:
        decision = classify_forbidden(parse_pattern(args.pattern), args.problem)
        print(decision)
        return EXIT_OK
    if not args.file:
        raise ParseError("classify needs a graph/instance file or --pattern")
    text = _read(args.file)
    graph = parse_instance(text).graph if "problem" in text.split() else parse_graph(text)
    for label in classify_graph(graph, max_s=args.max_s):
        line = str(label)
        if label.parts is not None:
            line += f" {list(label.parts[0])} | {list(label.parts[1])}"
        print(line)
    return EXIT_OK


def cmd_generate(args) -> int:
    if args.gadget == "line2dcs":
        if not args.cnf:
            raise ParseError("--gadget line2dcs needs --cnf FILE")
        out = gen_line_2dcs(parse_dimacs(_read(args.cnf)))
        text = format_instance(out.instance)
        if args.labels:
            text = "".join(f"# {v}: {label}\n" for v, label in enumerate(out.labels)) + text
    elif args.gadget in ("girth", "split4p1"):
        if not args.input:
            raise ParseError(f"--gadget {args.gadget} needs --input FILE")
        inst = parse_instance(_read(args.input))
        if args.gadget == "girth":
            res = gen_girth_dp(inst, args.girth)
        else:
            res = gen_4p1_p1p4(inst, terminal_split_witness(inst))
        text = format_instance(res)
    else:
        inst = gen_random_instance(args.graph_class, args.n, args.k, args.seed, args.kind, max_set=args.max_set)
        text = format_instance(inst)
    _emit(text, args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    inst = parse_instance(_read(args.instance))
    sol = parse_solution(_read(args.solution))
    errors = solution_errors(inst, sol)
    if errors:
        for e in errors:
            print(f"invalid: {e}")
        return EXIT_DISAGREE
    print("valid")
    return EXIT_OK


def cmd_oracle_suite(args) -> int:
    names = args.only or list(SUITES)
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise ParseError(f"unknown suite(s): {', '.join(unknown)}")
    failed = False
    for name in names:
        result = run_suite(name, seed=args.seed, scale=args.scale)
        line = result.summary()
        if args.format == "tsv":
            line = line.rsplit("\t", 1)[0]
        print(line, flush=True)
        if not result.ok:
            failed = True
            for f in result.failures[:5]:
                print(f"  {f.instance_id}: {f.reason}")
            if args.failures_dir:
                for path in write_failures(result, Path(args.failures_dir)):
                    print(f"  wrote {path}")
    return EXIT_DISAGREE if failed else EXIT_OK


def cmd_bench(args) -> int:
    rows = bench_mod.run_bench(range(args.n_min, args.n_max + 1), k=args.k, seed=args.seed)
    if args.format == "tsv":
        text = bench_mod.format_tsv(rows, timings=not args.no_timings)
    else:
        text = bench_mod.format_human(rows) + "\n"
    _emit(text, args.output)
    bad = [r for r in rows if not r.within]
    for r in bad:
        print(f"envelope exceeded: {r.solver} n={r.n}", file=sys.stderr)
    return EXIT_DISAGREE if bad else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="disjoint-paths",
        description="Exact and class-restricted solvers for Disjoint Paths and Disjoint Connected Subgraphs.",
        epilog=f"Default exact-solver caps can be set with {ENV_DP_CAP} and {ENV_DCS_CAP}.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log routing decisions")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve an instance file")
    p.add_argument("file", help="instance file, or - for stdin")
    p.add_argument("--algo", choices=ALGORITHMS, default="auto")
    p.add_argument("--s", type=int, default=1, help="s for --algo sp1p4 (graph is (sP1+P4)-free)")
    p.add_argument("--format", choices=("human", "tsv"), default="human")
    p.add_argument("--dp-cap", type=int, help="largest n for the exact path DP")
    p.add_argument("--dcs-cap", type=int, help="largest n for the exact subset DP")
    p.add_argument("--time-limit", type=float, help="soft limit in seconds, checked between DP layers")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("classify", help="graph classes of a file, or the complexity for a forbidden pattern")
    p.add_argument("file", nargs="?", help="graph or instance file")
    p.add_argument("--pattern", help="forbidden pattern such as P4, 3P1, P1+P3, 2P1+P2, C5, claw")
    p.add_argument("--problem", choices=("kdcs", "dcs", "dp"), default="dp")
    p.add_argument("--max-s", type=int, default=4, help="largest s tried for (sP1+P4)-freeness")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("generate", help="emit an instance from a gadget or a random class")
    p.add_argument("--gadget", choices=("line2dcs", "girth", "split4p1", "random"), required=True)
    p.add_argument("--cnf", help="DIMACS file for line2dcs")
    p.add_argument("--labels", action="store_true", help="line2dcs: prefix vertex labels of the pre-line graph")
    p.add_argument("--input", help="DP instance for girth / split4p1")
    p.add_argument("--girth", type=int, default=5, help="target girth for --gadget girth")
    p.add_argument("--class", dest="graph_class", choices=GRAPH_CLASSES, default="general")
    p.add_argument("--n", type=int, default=8)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--kind", choices=("dp", "dcs"), default="dcs")
    p.add_argument("--max-set", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify", help="check a solution file against an instance file")
    p.add_argument("instance")
    p.add_argument("solution")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle-suite", help="run the randomized agreement suites")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--scale", type=float, default=1.0, help="fraction of the default suite sizes")
    p.add_argument("--only", nargs="+", metavar="SUITE", help=f"subset of: {', '.join(SUITES)}")
    p.add_argument("--failures-dir", help="write failing instances here")
    p.add_argument("--format", choices=("human", "tsv"), default="human")
    p.set_defaults(func=cmd_oracle_suite)

    p = sub.add_parser("bench", help="state counts of the exact solvers against their envelopes")
    p.add_argument("--n-min", type=int, default=10)
    p.add_argument("--n-max", type=int, default=16)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("human", "tsv"), default="human")
    p.add_argument("--no-timings", action="store_true", help="tsv: leave the seconds column empty")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (PreconditionError, ValueError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
