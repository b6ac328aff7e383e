"""Command-line entry point: ``sudoku-chroma <gen|chi|sn|extend|verify|dot>``.

Exit codes: 0 success, 1 at least one theorem instance mismatched,
2 usage, input or budget error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .coloring import (
    PartialColoring,
    chromatic_number,
    count_extensions,
    parse_coloring,
    serialize_coloring,
    unique_extension,
)
from .errors import InvalidSpecError, SudokuChromaError
from .families import TheoremId, build_instance, thm21_upper_family
from .graph import Graph, parse_family, parse_graph, serialize_graph
from .report import Match, reports_to_csv, reports_to_json, verify_instance
from .search import DEFAULT_MAX_ORDER, forced_sets, greedy_sudoku_coloring, sudoku_number

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2

PALETTE = [
    "#e41a1c", "#377eb8", "#4daf4a", "#984ea3",
    "#ff7f00", "#ffff33", "#a65628", "#f781bf",
]


def render_dot(g: Graph, coloring: PartialColoring | None = None) -> str:
    """DOT text with one node per vertex in id order; colored vertices are filled."""
    lines = ["graph G {", "  node [shape=circle];"]
    for v in range(g.order):
        if coloring is not None and v in coloring:
            c = coloring[v]
            fill = PALETTE[(c - 1) % len(PALETTE)]
            lines.append(f'  {v} [label="{v}:{c}", style=filled, fillcolor="{fill}"];')
        else:
            lines.append(f'  {v} [label="{v}"];')
    lines.extend(f"  {u} -- {v};" for u, v in g.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"


def parse_range(text: str) -> list[int]:
    """``"3..8"`` -> 3..8 inclusive; ``"3,5,7"`` and ``"4"`` also accepted."""
    values: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            lo, hi = part.split("..", 1)
            values.extend(range(int(lo), int(hi) + 1))
        elif part:
            values.append(int(part))
    return values


def _read_graph(path: str) -> Graph:
    return parse_graph(Path(path).read_text())


def _workers() -> int:
    return max(1, int(os.environ.get("SUDOKU_CHROMA_THREADS", "1") or 1))


def cmd_gen(args) -> int:
    g = parse_family(args.expression)
    text = serialize_graph(g)
    summary = f"order {g.order} size {g.size}"
    if args.output:
        Path(args.output).write_text(text)
        print(summary)
    else:
        sys.stdout.write(text)
        print(summary, file=sys.stderr)
    return EXIT_OK


def cmd_chi(args) -> int:
    print(chromatic_number(_read_graph(args.graph)))
    return EXIT_OK


def cmd_sn(args) -> int:
    g = _read_graph(args.graph)
    witness_path = Path(args.witness or f"{args.graph}.witness.col")
    if args.bounds_only:
        k = chromatic_number(g)
        clue = greedy_sudoku_coloring(g)
        report = {
            "mode": "bounds",
            "order": g.order,
            "chi": k,
            "lower_bound": forced_sets(g, k).lower_bound,
            "upper_bound": len(clue),
        }
    else:
        w = sudoku_number(g, max_order=args.cap, budget=args.budget)
        clue = w.clue_coloring
        report = {
            "mode": "exact",
            "order": g.order,
            "sn": w.sn,
            "clue_set": list(w.clue_set),
            "certificate": w.certificate.as_dict(timing=not args.no_timing),
        }
    witness_path.write_text(serialize_coloring(clue))
    report["witness_file"] = str(witness_path)
    print(json.dumps(report, indent=2, sort_keys=True))
    return EXIT_OK


def cmd_extend(args) -> int:
    g = _read_graph(args.graph)
    text = Path(args.coloring).read_text()
    k = args.k
    if k is None and not any(line.split()[:1] == ["k"] for line in text.splitlines()):
        k = chromatic_number(g)
    c0 = parse_coloring(text, k)
    result = count_extensions(g, c0, cap=args.count_cap)
    print(f"count: {result}")
    print(f"extendable: {'yes' if result.extendable else 'no'}")
    unique = result.count == 1 and args.count_cap != 1
    print(f"unique: {'yes' if unique else 'no'}")
    if unique:
        full = unique_extension(g, c0)
        if args.output:
            Path(args.output).write_text(serialize_coloring(full))
        else:
            sys.stdout.write(serialize_coloring(full))
    return EXIT_OK


def _build_instances(args):
    theorem = TheoremId(args.theorem)
    instances = []
    if theorem is TheoremId.T21_UpperFamily:
        for expr in args.g or ["complete:4"]:
            try:
                instances.append(thm21_upper_family(parse_family(expr), expr))
            except InvalidSpecError as exc:
                print(f"warning: skipping {expr}: {exc}", file=sys.stderr)
        return instances
    ns = parse_range(args.n) if args.n else []
    ms = parse_range(args.m) if args.m else [None]
    if theorem in (TheoremId.T25_KnKm, TheoremId.T26_CnPm) and ms == [None]:
        raise InvalidSpecError(f"{theorem.value} needs --m")
    for n in ns:
        for m in ms:
            try:
                instances.append(build_instance(theorem, n, m))
            except InvalidSpecError as exc:
                print(f"warning: skipping n={n} m={m}: {exc}", file=sys.stderr)
    return instances


def _verify_one(job):
    instance, exact, cap, budget = job
    return verify_instance(instance, exact=exact, max_order=cap, budget=budget)


def cmd_verify(args) -> int:
    instances = _build_instances(args)
    jobs = [(inst, not args.upper_only, args.cap, args.budget) for inst in instances]
    if _workers() > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=_workers()) as pool:
            reports = list(pool.map(_verify_one, jobs))
    else:
        reports = [_verify_one(job) for job in jobs]
    timing = not args.no_timing
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    stem = f"verify_{args.theorem}"
    (out / f"{stem}.json").write_text(reports_to_json(reports, timing))
    (out / f"{stem}.csv").write_text(reports_to_csv(reports, timing))
    for r in reports:
        params = " ".join(f"{k}={v}" for k, v in r.params.items())
        exact = "-" if r.exact_sn is None else r.exact_sn
        print(
            f"{r.theorem:5} {params:22} formula={r.formula_sn:<4} exact={exact!s:<4} "
            f"lb={r.forced_lower_bound:<4} upper={'ok' if r.verified_upper else 'FAIL':4} {r.match.value}"
        )
    return EXIT_MISMATCH if any(r.match is Match.MISMATCH for r in reports) else EXIT_OK


def cmd_dot(args) -> int:
    g = _read_graph(args.graph)
    coloring = None
    if args.coloring:
        coloring = parse_coloring(Path(args.coloring).read_text(), args.k or chromatic_number(g))
        unknown = [v for v in coloring.assignments if v >= g.order]
        if unknown:
            raise InvalidSpecError(f"coloring references unknown vertices {unknown}")
    sys.stdout.write(render_dot(g, coloring))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sudoku-chroma", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a graph file from a family expression")
    p.add_argument("expression")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("chi", help="print the chromatic number")
    p.add_argument("graph")
    p.set_defaults(func=cmd_chi)

    p = sub.add_parser("sn", help="Sudoku number with witness")
    p.add_argument("graph")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", help="exact search (default)")
    mode.add_argument("--bounds-only", action="store_true")
    p.add_argument("--cap", type=int, default=DEFAULT_MAX_ORDER, help="largest order searched exactly")
    p.add_argument("--budget", type=float, default=300.0, help="wall-clock seconds")
    p.add_argument("--witness", help="witness coloring path (default <graph>.witness.col)")
    p.add_argument("--no-timing", action="store_true")
    p.set_defaults(func=cmd_sn)

    p = sub.add_parser("extend", help="count extensions of a partial coloring")
    p.add_argument("graph")
    p.add_argument("coloring")
    p.add_argument("--k", type=int)
    p.add_argument("--count-cap", type=int, default=1000)
    p.add_argument("-o", "--output", help="write the unique extension here")
    p.set_defaults(func=cmd_extend)

    p = sub.add_parser("verify", help="check closed-form Sudoku numbers of a family")
    p.add_argument("--theorem", required=True, choices=[t.value for t in TheoremId])
    p.add_argument("--n", help="range such as 3..8")
    p.add_argument("--m", help="range such as 1..3")
    p.add_argument("--g", action="append", help="base graph expression (T21U)")
    p.add_argument("--out", default="reports")
    p.add_argument("--cap", type=int, default=DEFAULT_MAX_ORDER)
    p.add_argument("--budget", type=float, default=300.0)
    p.add_argument("--upper-only", action="store_true", help="skip exact search")
    p.add_argument("--no-timing", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("dot", help="render a graph (and coloring) as DOT")
    p.add_argument("graph")
    p.add_argument("coloring", nargs="?")
    p.add_argument("--k", type=int)
    p.set_defaults(func=cmd_dot)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (SudokuChromaError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
