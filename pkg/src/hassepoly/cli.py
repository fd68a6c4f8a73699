"""Command line: gen, analyze, walk, export-dot, report-diff.

Exit codes: 0 ok, 1 an ``--expect`` assertion (or report-diff) failed,
2 input error.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import io, paths
from .exact import parse_rational, parse_vector
from .generators import GeneratorSpec, default_cost
from .orientation import NonGenericCostError, from_arcs, is_hasse, orient
from .pipeline import CHECKS, analyze, expectation_met

EXPECTABLE = CHECKS + ("conjecture-pass",)


class InputError(Exception):
    pass


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load(path: str):
    try:
        doc = io.read_json(path)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    if not isinstance(doc, dict):
        raise InputError(f"{path}: expected a JSON object")
    try:
        p = io.doc_to_polytope(doc)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    return doc, p


def _cost(args, doc, p):
    if args.cost is None:
        return default_cost(p, doc.get("family"))
    try:
        c = parse_vector(args.cost)
    except ValueError as exc:
        raise InputError(f"bad --cost: {exc}") from exc
    if len(c) != p.ambient_dim:
        raise InputError(f"--cost has {len(c)} entries, polytope lives in dimension {p.ambient_dim}")
    return c


def _ids(s: str | None) -> list[int]:
    if not s:
        return []
    try:
        return [int(x) for x in s.split(",")]
    except ValueError as exc:
        raise InputError(f"bad vertex list {s!r}") from exc


def cmd_gen(args) -> int:
    gens = []
    if args.gens:
        try:
            gens = [parse_vector(g) for g in args.gens.split(";")]
        except ValueError as exc:
            raise InputError(f"bad --gens: {exc}") from exc
    try:
        eps = parse_rational(args.eps)
        p = GeneratorSpec(args.family, d=args.d, n=args.n, eps=eps, generators=gens).build()
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    doc = io.polytope_to_doc(p, family=args.family.replace("-", "_"))
    io.doc_to_polytope(doc)  # round-trip validation
    _emit(io.dumps(doc), args.output)
    print(f"{p.name}: {p.n_vertices} vertices, {p.n_facets} facets, dim {p.dim}",
          file=sys.stderr if not args.output else sys.stdout)
    return 0


def cmd_analyze(args) -> int:
    for exp in args.expect or []:
        if exp.replace("-", "_") not in CHECKS + ("conjecture_pass", "conjecture"):
            raise InputError(f"unknown --expect check {exp!r}")
    doc, p = _load(args.document)
    arcs = cost = None
    if args.orientation:
        try:
            arcs = io.read_arcs(args.orientation)
        except (OSError, json.JSONDecodeError, KeyError, ValueError) as exc:
            raise InputError(f"bad orientation file: {exc}") from exc
        if args.cost:
            raise InputError("--cost and --orientation are mutually exclusive")
    else:
        cost = _cost(args, doc, p)
    try:
        report = analyze(p, cost=cost, arcs=arcs, scope=args.scope.replace("-", "_"),
                         max_interval=args.max_interval, timings=not args.no_timings)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    _emit(io.dumps(report), args.output)
    status = 0
    for exp in args.expect or []:
        if not expectation_met(report, exp):
            key = exp.replace("-", "_")
            entry = report["conjecture"] if key.startswith("conjecture") else report["checks"][key]
            print(f"expectation failed: {exp}: {json.dumps(entry, sort_keys=True, default=str)}",
                  file=sys.stderr)
            status = 1
    return status


def cmd_walk(args) -> int:
    doc, p = _load(args.document)
    try:
        o = orient(p, _cost(args, doc, p))
        trace = paths.pivot_walk(o, args.rule, seed=args.seed, start=args.start)
    except (NonGenericCostError, ValueError, IndexError) as exc:
        raise InputError(str(exc)) from exc
    d = trace.as_dict()
    d["vertices"] = [[str(x) for x in p.vertices[v]] for v in trace.path]
    print(f"{trace.rule}: {trace.steps} steps: " + " -> ".join(map(str, trace.path)),
          file=sys.stderr if not args.output else sys.stdout)
    if args.output or args.json:
        _emit(io.dumps(d), args.output)
    return 0


def cmd_export_dot(args) -> int:
    doc, p = _load(args.document)
    try:
        if args.orientation:
            g = from_arcs(p, io.read_arcs(args.orientation))
        else:
            g = orient(p, _cost(args, doc, p))
    except (NonGenericCostError, OSError, json.JSONDecodeError, ValueError) as exc:
        raise InputError(str(exc)) from exc
    nodes = set(_ids(args.highlight_face))
    path = _ids(args.highlight_path)
    hl_arcs = list(zip(path, path[1:]))
    if args.highlight_witness:
        w = is_hasse(g).witness
        if w:
            hl_arcs.append(tuple(w["arc"]))
            nodes.update(w["path"])
    nodes.update(path)
    _emit(io.to_dot(g, p, nodes, hl_arcs), args.output)
    return 0


def _strip_timings(obj):
    if isinstance(obj, dict):
        return {k: _strip_timings(v) for k, v in obj.items() if k != "timings"}
    if isinstance(obj, list):
        return [_strip_timings(v) for v in obj]
    return obj


def _diff(a, b, where="$"):
    if isinstance(a, dict) and isinstance(b, dict):
        for k in sorted(set(a) | set(b)):
            if k not in a or k not in b:
                yield f"{where}.{k}: only in {'second' if k not in a else 'first'}"
            else:
                yield from _diff(a[k], b[k], f"{where}.{k}")
    elif isinstance(a, list) and isinstance(b, list) and len(a) == len(b):
        for i, (x, y) in enumerate(zip(a, b)):
            yield from _diff(x, y, f"{where}[{i}]")
    elif a != b:
        yield f"{where}: {json.dumps(a, default=str)} != {json.dumps(b, default=str)}"


def cmd_report_diff(args) -> int:
    try:
        a = _strip_timings(io.read_json(args.first))
        b = _strip_timings(io.read_json(args.second))
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(str(exc)) from exc
    diffs = list(_diff(a, b))
    for line in diffs:
        print(line)
    if not diffs:
        print("reports identical (timings ignored)")
    return 1 if diffs else 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hassepoly", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a polytope document")
    g.add_argument("family", help="cube, simplex, klee-minty, permutahedron, associahedron, zonotope")
    g.add_argument("--d", type=int)
    g.add_argument("--n", type=int)
    g.add_argument("--eps", default="1/4")
    g.add_argument("--gens", help="generators as 'a,b;c,d;...'")
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)

    a = sub.add_parser("analyze", help="run the gated check pipeline")
    a.add_argument("document")
    a.add_argument("--cost")
    a.add_argument("--orientation", help="JSON arc list for an explicit orientation")
    a.add_argument("--scope", choices=("facets", "all-faces"), default="all-faces")
    a.add_argument("--max-interval", type=int, default=64)
    a.add_argument("--expect", action="append", metavar="CHECK",
                   help="one of: " + ", ".join(EXPECTABLE))
    a.add_argument("--no-timings", action="store_true")
    a.add_argument("-o", "--output")
    a.set_defaults(func=cmd_analyze)

    w = sub.add_parser("walk", help="follow a pivot rule from the source")
    w.add_argument("document")
    w.add_argument("--cost")
    w.add_argument("--rule", choices=paths.RULES, default="greatest_improvement")
    w.add_argument("--seed", type=int)
    w.add_argument("--start", type=int)
    w.add_argument("--json", action="store_true", help="print the trace as JSON")
    w.add_argument("-o", "--output")
    w.set_defaults(func=cmd_walk)

    e = sub.add_parser("export-dot", help="write the oriented graph as DOT")
    e.add_argument("document")
    e.add_argument("--cost")
    e.add_argument("--orientation")
    e.add_argument("--highlight-face", help="comma-separated vertex ids")
    e.add_argument("--highlight-path", help="comma-separated vertex ids")
    e.add_argument("--highlight-witness", action="store_true", help="mark a Hasse bypass")
    e.add_argument("-o", "--output")
    e.set_defaults(func=cmd_export_dot)

    r = sub.add_parser("report-diff", help="compare two reports ignoring timings")
    r.add_argument("first")
    r.add_argument("second")
    r.set_defaults(func=cmd_report_diff)
    return ap


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:  # usage errors and --help
        return int(exc.code or 0)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
