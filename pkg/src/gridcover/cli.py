"""Command-line front end: ``gridcover analyze|factors|verify|search``.

Exit codes: 0 definitive positive, 10 inconclusive analysis, 11 failed
verification, 12 search exhausted without a witness, 2 usage or input errors.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
import time

from . import __version__
from .covering import CoveringProblem, classify, classify_convex, grid_ball, Verdict
from .geometry import is_convex
from .laurent import PolySyntaxError, parse_poly, serialize, shape_of_char_poly
from .line_factors import line_factors
from .search import CapExceeded, search
from .torus import PatternFormatError, format_pattern, read_pattern, verify_covering, write_pattern, write_pbm
from .unipoly import format_unipoly

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INCONCLUSIVE = 10
EXIT_NOT_COVERING = 11
EXIT_NOT_FOUND = 12


class UsageError(Exception):
    pass


_POINT = re.compile(r"\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)")


def parse_points(text: str) -> frozenset:
    """Parse ``"(-1,0),(0,0),(1,0)"`` into a shape."""
    pts = _POINT.findall(text)
    leftover = _POINT.sub("", text).replace(",", "").strip()
    if not pts or leftover:
        raise UsageError(f"cannot parse point list {text!r}")
    return frozenset((int(x), int(y)) for x, y in pts)


def format_points(D) -> str:
    return ",".join(f"({x},{y})" for x, y in sorted(D))


def _add_neighborhood(sp):
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--grid", choices=["square", "king", "triangular"])
    g.add_argument("--points", help='explicit shape, e.g. "(-1,0),(0,0),(1,0)"')
    g.add_argument("--poly-neighborhood", help="characteristic polynomial; D is its negated support")
    sp.add_argument("-r", "--radius", type=int, help="radius for --grid")
    sp.add_argument("-b", type=int, required=True, help="ones seen from a 1-cell")
    sp.add_argument("-a", type=int, required=True, help="ones seen from a 0-cell")


def _shape(args) -> frozenset:
    if args.grid:
        if args.radius is None:
            raise UsageError("--grid needs -r/--radius")
        try:
            return grid_ball(args.grid, args.radius)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    if args.points:
        return parse_points(args.points)
    f = parse_poly(args.poly_neighborhood)
    if f.is_zero():
        raise UsageError("neighborhood polynomial is zero")
    if any(c != 1 for _, c in f.terms):
        raise UsageError("a characteristic polynomial has all coefficients 1")
    return shape_of_char_poly(f)


def _problem(args) -> CoveringProblem:
    D = _shape(args)
    try:
        return CoveringProblem(D, args.b, args.a)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _inputs(args, problem: CoveringProblem) -> dict:
    d = {
        "neighborhood": format_points(problem.D),
        "size": len(problem.D),
        "b": problem.b,
        "a": problem.a,
    }
    if getattr(args, "grid", None):
        d["grid"] = args.grid
        d["radius"] = args.radius
    return d


def _report_json(report) -> list:
    return [{"direction": list(v), "factor": format_unipoly(phi), "coeffs": list(phi.coeffs)}
            for v, phi in report.entries]


def cmd_analyze(args) -> tuple[dict, int]:
    problem = _problem(args)
    cls = classify(problem)
    record = {
        "inputs": _inputs(args, problem),
        "verdict": cls.verdict.value,
        "direction": list(cls.direction) if cls.direction else None,
        "periodizer": serialize(cls.periodizer),
        "evidence": _report_json(cls.evidence),
    }
    if cls.note:
        record["note"] = cls.note
    if is_convex(problem.D):
        record["convex_verdict"] = classify_convex(problem).verdict.value
    code = EXIT_INCONCLUSIVE if cls.verdict is Verdict.INCONCLUSIVE else EXIT_OK
    return record, code


def cmd_factors(args) -> tuple[dict, int]:
    f = parse_poly(args.polynomial)
    if f.is_zero():
        raise UsageError("zero polynomial has no line factors")
    report = line_factors(f)
    return {"inputs": {"polynomial": serialize(f)}, "report": _report_json(report)}, EXIT_OK


def cmd_verify(args) -> tuple[dict, int]:
    problem = _problem(args)
    try:
        c = read_pattern(args.pattern)
    except OSError as exc:
        raise UsageError(str(exc)) from None
    bad = verify_covering(c, problem)
    inputs = _inputs(args, problem)
    inputs["pattern"] = format_pattern(c)
    if bad is None:
        return {"inputs": inputs, "verdict": "ok"}, EXIT_OK
    return {
        "inputs": inputs,
        "verdict": "counterexample",
        "evidence": {"cell": list(bad.cell), "observed": bad.observed, "expected": bad.expected},
    }, EXIT_NOT_COVERING


def cmd_search(args) -> tuple[dict, int]:
    problem = _problem(args)
    try:
        outcome = search(problem, args.max_area)
    except (CapExceeded, ValueError) as exc:
        raise UsageError(str(exc)) from None
    inputs = _inputs(args, problem)
    inputs["max_area"] = args.max_area
    record = {
        "inputs": inputs,
        "outcome": outcome.status,
        "stats": {"lattices_tried": outcome.stats.lattices_tried, "nodes": outcome.stats.nodes},
    }
    if outcome.found:
        w = outcome.witness
        record["witness"] = {"p": w.lattice.p, "q": w.lattice.q, "s": w.lattice.s,
                             "pattern": format_pattern(w)}
        if args.out:
            write_pattern(w, args.out + ".txt")
            write_pbm(w, args.out + ".pbm")
            record["files"] = [args.out + ".txt", args.out + ".pbm"]
        return record, EXIT_OK
    record["note"] = f"no two-periodic covering with area <= {args.max_area}; existence not ruled out"
    return record, EXIT_NOT_FOUND


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gridcover", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("analyze", help="classify forced periodicity of (D,b,a)-coverings")
    _add_neighborhood(sp)
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("factors", help="line-polynomial factors of a Laurent polynomial")
    sp.add_argument("polynomial")
    sp.set_defaults(func=cmd_factors)

    sp = sub.add_parser("verify", help="check a pattern file against the covering condition")
    sp.add_argument("pattern", help="pattern file: 'p q s' then q rows of p 0/1 characters")
    _add_neighborhood(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("search", help="search two-periodic coverings up to an area bound")
    _add_neighborhood(sp)
    sp.add_argument("--max-area", type=int, required=True)
    sp.add_argument("--out", help="write PREFIX.txt (pattern) and PREFIX.pbm on success")
    sp.set_defaults(func=cmd_search)

    for p in sub.choices.values():
        p.add_argument("--json", action="store_true", help="machine-readable output")
    return parser


def _print_text(record: dict, out):
    for key, value in record.items():
        if key == "inputs":
            out.write("inputs:\n")
            for k, v in value.items():
                if k == "pattern":
                    out.write(f"  {k}:\n" + "".join(f"    {ln}\n" for ln in v.splitlines()))
                else:
                    out.write(f"  {k}: {v}\n")
            continue
        if isinstance(value, list) and value and isinstance(value[0], dict):
            out.write(f"{key}:\n")
            for item in value:
                out.write(f"  direction {tuple(item['direction'])}: {item['factor']}\n")
        elif isinstance(value, dict):
            out.write(f"{key}:\n")
            for k, v in value.items():
                text = str(v).rstrip("\n").replace("\n", "\n    ")
                out.write(f"  {k}: {text}\n")
        elif value is not None:
            out.write(f"{key}: {value}\n")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        payload, code = args.func(args)
    except (UsageError, PolySyntaxError, PatternFormatError) as exc:
        print(f"gridcover {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    record = {"command": args.command, **payload, "version": __version__}
    record.setdefault("stats", {})["elapsed_s"] = round(time.perf_counter() - start, 6)
    if args.json:
        json.dump(record, sys.stdout, sort_keys=True, indent=2)
        sys.stdout.write("\n")
    else:
        _print_text(record, sys.stdout)
    return code


if __name__ == "__main__":
    sys.exit(main())
