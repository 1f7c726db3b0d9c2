"""Command-line front end.

Exit status: 0 success, 1 a verification check failed, 2 bad input.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path
from typing import List, Optional, Sequence

from .arith import BudgetExceeded
from .divisor import EmptyOrTrivial, build_B, build_delta, build_gamma, make_integer_set, set_to_json
from .graph import components, diameter, girth, girth_gt4, label_str, to_dot
from .patterns import diagnose_k4, diagnose_triangles
from .realize import LARGE_REALIZATION, BipartitionedGraph, IsolatedVertex, dualize, realize
from .verify import FuzzConfig, fuzz, roundtrip_realize, verify_all


class InputError(ValueError):
    pass


def parse_set(tokens: Sequence[str]):
    """Parse X from comma/whitespace separated integers, or ``@file``."""
    text = " ".join(tokens)
    if text.startswith("@"):
        path = Path(text[1:])
        try:
            text = path.read_text()
        except OSError as exc:
            raise InputError(f"cannot read {path}: {exc.strerror}") from None
    values = []
    for tok in re.split(r"[,\s]+", text.strip()):
        if not tok:
            continue
        if not re.fullmatch(r"\+?\d+", tok) or int(tok) < 1:
            raise InputError(f"not a positive integer: {tok!r}")
        values.append(int(tok))
    return make_integer_set(values)


def parse_graph(text: str) -> BipartitionedGraph:
    """Read a bipartitioned graph from the text format or from ``build`` JSON.

    Text format: a ``parts: v1 v2 | u1 u2`` header, then one ``v u`` edge per
    line. ``#`` starts a comment. For ``build`` JSON the primes of B become
    the first part and the numbers the second.
    """
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            data = json.loads(text)
            b = data["B"]
            part1 = [v["id"] for v in b["vertices"] if v.get("tag") == "prime"]
            part2 = [v["id"] for v in b["vertices"] if v.get("tag") == "number"]
            edges = [tuple(e) for e in b["edges"]]
        except (ValueError, KeyError, TypeError) as exc:
            raise InputError(f"malformed graph JSON: {exc}") from None
        return _bipartitioned(part1, part2, edges)

    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines or not lines[0].startswith("parts:"):
        raise InputError("graph file must start with 'parts: v1 ... | u1 ...'")
    header = lines[0][len("parts:"):]
    if header.count("|") != 1:
        raise InputError(f"expected exactly one '|' in parts line: {lines[0]!r}")
    left, right = header.split("|")
    part1, part2 = left.split(), right.split()
    edges = []
    for ln in lines[1:]:
        toks = ln.split()
        if len(toks) != 2:
            raise InputError(f"edge line must have two labels: {ln!r}")
        edges.append((toks[0], toks[1]))
    return _bipartitioned(part1, part2, edges)


def _bipartitioned(part1, part2, edges) -> BipartitionedGraph:
    known = set(part1) | set(part2)
    for a, b in edges:
        for v in (a, b):
            if v not in known:
                raise InputError(f"edge uses unknown vertex {v!r}")
        if (a in part1) == (b in part1):
            raise InputError(f"edge ({a}, {b}) lies inside one part")
    try:
        return BipartitionedGraph.from_edges(part1, part2, edges)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2))


def _analysis(x) -> dict:
    graphs = {"B": build_B(x).graph, "Delta": build_delta(x), "Gamma": build_gamma(x)}
    out = {
        "X": list(x.elements),
        "n": {k: len(components(g)) for k, g in graphs.items()},
        "diam": {k: diameter(g) for k, g in graphs.items()},
        "girth": {k: girth(g) or "Acyclic" for k, g in graphs.items()},
        "girth_gt4_B": girth_gt4(graphs["B"]),
    }
    return out


def cmd_build(args) -> int:
    x = parse_set(args.X)
    _emit(set_to_json(x))
    if args.dot:
        g = {"B": build_B(x).graph, "Delta": build_delta(x), "Gamma": build_gamma(x)}[args.dot]
        path = Path(args.dot_file or f"{args.dot}.dot")
        path.write_text(to_dot(g, args.dot))
        print(f"wrote {path}", file=sys.stderr)
    return 0


def cmd_realize(args) -> int:
    try:
        text = Path(args.graph).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {args.graph}: {exc.strerror}") from None
    g = parse_graph(text)
    if len(g.part1) * len(g.part2) > LARGE_REALIZATION:
        print(f"warning: {len(g.part1)}x{len(g.part2)} parts give very large integers", file=sys.stderr)
    res = realize(g)
    _emit({
        "X": list(res.x.elements),
        "prime_of": {str(k): v for k, v in res.prime_of.items()},
        "number_of": {str(k): v for k, v in res.number_of.items()},
    })
    return 0


def cmd_dualize(args) -> int:
    x = parse_set(args.X)
    res = dualize(x)
    _emit({
        "X": list(x.elements),
        "Y": list(res.x.elements),
        "prime_of": {label_str(k): v for k, v in res.prime_of.items()},
        "number_of": {label_str(k): v for k, v in res.number_of.items()},
    })
    return 0


def cmd_analyze(args) -> int:
    _emit(_analysis(parse_set(args.X)))
    return 0


def cmd_patterns(args) -> int:
    x = parse_set(args.X)
    _emit({"X": list(x.elements), "triangles": diagnose_triangles(x).to_json(), "k4": diagnose_k4(x).to_json()})
    return 0


def _ells(text: str) -> tuple:
    try:
        ells = tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise InputError(f"--ell expects comma-separated integers, got {text!r}") from None
    bad = [e for e in ells if e < 2]
    if bad:
        raise InputError(f"--ell values must be at least 2, got {bad[0]}")
    return ells


def cmd_verify(args) -> int:
    x = parse_set(args.X)
    reports = verify_all(x, _ells(args.ell))
    for r in reports:
        print(r.to_line())
    return 0 if all(r.passed for r in reports) else 1


def cmd_fuzz(args) -> int:
    cfg = FuzzConfig(
        trials=args.trials,
        max_set_size=args.max_set_size,
        max_element=args.max_element,
        seed=args.seed,
        ell_values=_ells(args.ell),
        workers=args.workers,
    )
    reports = fuzz(cfg)
    failed = [r for r in reports if not r.passed]
    for r in reports if args.all else failed:
        print(r.to_line())
    summary = {"trials": cfg.trials, "seed": cfg.seed, "reports": len(reports), "failed": len(failed)}
    print(json.dumps({"summary": summary}, sort_keys=True))
    return 0 if not failed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="divgraph", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="print rho(X), X*, and B/Delta/Gamma as JSON")
    p.add_argument("X", nargs="+", help="integers, comma or space separated, or @file")
    p.add_argument("--dot", choices=["B", "Delta", "Gamma"], help="also write this graph as DOT")
    p.add_argument("--dot-file", help="DOT output path (default: <graph>.dot)")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("realize", help="find X whose B(X) is the given bipartite graph")
    p.add_argument("--graph", required=True, help="graph file (text format or build JSON)")
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("dualize", help="find Y with Delta and Gamma swapped")
    p.add_argument("X", nargs="+")
    p.set_defaults(func=cmd_dualize)

    p = sub.add_parser("analyze", help="components, diameters and girths of B, Delta, Gamma")
    p.add_argument("X", nargs="+")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("patterns", help="triangle and K4 diagnoses")
    p.add_argument("X", nargs="+")
    p.set_defaults(func=cmd_patterns)

    p = sub.add_parser("verify", help="run every structural check on X (JSON lines)")
    p.add_argument("X", nargs="+")
    p.add_argument("--ell", default="3,4", help="clique sizes for the incidence-graph check")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("fuzz", help="run the checks on seeded random sets and graphs")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-set-size", type=int, default=7)
    p.add_argument("--max-element", type=int, default=10**4)
    p.add_argument("--ell", default="3,4")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--all", action="store_true", help="print passing reports too")
    p.set_defaults(func=cmd_fuzz)
    return parser


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    if args.command == "fuzz":
        if args.trials < 0 or args.max_set_size < 1 or args.max_element < 2 or args.workers < 1:
            print("error: fuzz options out of range", file=sys.stderr)
            return 2
    try:
        return args.func(args)
    except (InputError, EmptyOrTrivial, BudgetExceeded, IsolatedVertex, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
