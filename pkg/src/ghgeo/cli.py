"""Command line interface.

Exit codes: 0 on success, 1 when a verification fails (invalid metric,
non-additive table, out-of-tolerance row), 2 on malformed input or bad
usage. All rational output is exact unless --decimal is given.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import geodesy, ghsearch
from .errors import DomainError, ParseError, ShapeError, SizeLimitError
from .intervals import canonical_slice, format_intervals, hausdorff, parse_intervals
from .metricspace import parse_metric_space, parse_metric_text, validate_metric
from .rational import as_decimal, format_rational, parse_rational

_CONFIG_KEYS = ("delta", "grid_step", "window", "sample_step", "generator_space_file", "budget")


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def _fmt(value: Fraction, decimal: bool) -> str:
    return as_decimal(value) if decimal else format_rational(value)


def cmd_validate(args) -> int:
    labels, matrix = parse_metric_text(_read(args.path))
    del labels
    report = validate_metric(matrix)
    print(report)
    return 0 if report.valid else 1


def cmd_gh(args) -> int:
    x = parse_metric_space(_read(args.x))
    y = parse_metric_space(_read(args.y))
    if args.method == "brute":
        interval = ghsearch.bruteforce_interval(x, y)
    else:
        interval = ghsearch.gh_branch_and_bound(x, y, budget=args.budget)
    payload = {
        "lower": _fmt(interval.lower, args.decimal),
        "upper": _fmt(interval.upper, args.decimal),
        "exact": interval.exact,
        "lower_witness": interval.lower_witness,
        "witness_pairs": [[i, j] for i, j in interval.upper_witness.pairs()],
        "nodes_expanded": interval.nodes_expanded,
    }
    print(json.dumps(payload, sort_keys=True))
    return 0


def cmd_hausdorff(args) -> int:
    a = parse_intervals(_read(args.a))
    b = parse_intervals(_read(args.b))
    print(_fmt(hausdorff(a, b), args.decimal))
    return 0


def cmd_slice(args) -> int:
    a = parse_intervals(_read(args.a))
    b = parse_intervals(_read(args.b))
    s = parse_rational(args.s)
    print(format_intervals(canonical_slice(a, b, s)))
    return 0


def _load_config(args) -> dict:
    config = {
        "delta": Fraction(1, 5),
        "grid_step": None,
        "window": geodesy.DEFAULT_WINDOW,
        "sample_step": geodesy.DEFAULT_SAMPLE_STEP,
        "generator_space_file": None,
        "budget": geodesy.DEFAULT_EVIDENCE_BUDGET,
    }
    if getattr(args, "config", None):
        try:
            raw = json.loads(_read(args.config))
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad JSON in {args.config}: {exc}") from None
        if not isinstance(raw, dict):
            raise ParseError(f"config must be a JSON object, got {type(raw).__name__}")
        for key, value in raw.items():
            if key not in _CONFIG_KEYS:
                raise ParseError(f"unknown config key {key!r}")
            if key in ("delta", "grid_step", "sample_step"):
                config[key] = parse_rational(str(value))
            elif key in ("window", "budget"):
                if not isinstance(value, int) or value < 0:
                    raise ParseError(f"config {key} must be a nonnegative integer, got {value!r}")
                config[key] = value
            else:
                config[key] = value
    if getattr(args, "delta", None):
        config["delta"] = parse_rational(args.delta)
    if getattr(args, "grid", None):
        config["grid_step"] = parse_rational(args.grid)
    if getattr(args, "window", None) is not None:
        config["window"] = args.window
    if getattr(args, "step", None):
        config["sample_step"] = parse_rational(args.step)
    if getattr(args, "budget", None) is not None:
        config["budget"] = args.budget
    return config


def _open_out(args):
    if args.out:
        return open(args.out, "w", newline=""), True
    return sys.stdout, False


def cmd_geodesic(args) -> int:
    config = _load_config(args)
    grid = config["grid_step"] if config["grid_step"] is not None else Fraction(1, 100)
    rows = geodesy.geodesic_table(config["delta"], grid)
    stream, close = _open_out(args)
    try:
        geodesy.write_geodesic_csv(rows, stream, decimal=args.decimal)
    finally:
        if close:
            stream.close()
    exact = sum(1 for r in rows if r.equal)
    verdict = "PASS" if exact == len(rows) else "FAIL"
    print(f"{verdict}: {exact}/{len(rows)} exact")
    return 0 if exact == len(rows) else 1


def cmd_empirical(args) -> int:
    config = _load_config(args)
    delta = config["delta"]
    grid = config["grid_step"] if config["grid_step"] is not None else delta / 3
    generator = None
    if config["generator_space_file"]:
        generator = geodesy.GeneratorSpace(parse_metric_space(_read(config["generator_space_file"])))
    rows = geodesy.empirical_grid(
        delta,
        grid,
        window=config["window"],
        step=config["sample_step"],
        budget=config["budget"],
        generator=generator,
    )
    stream, close = _open_out(args)
    try:
        geodesy.write_empirical_csv(rows, stream, decimal=args.decimal)
    finally:
        if close:
            stream.close()
    good = sum(1 for r in rows if r.ok)
    verdict = "PASS" if good == len(rows) else "FAIL"
    print(f"{verdict}: {good}/{len(rows)} rows within tolerance")
    return 0 if good == len(rows) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ghgeo",
        description="Exact Gromov-Hausdorff geometry on the line: validation, distances, geodesic tables.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a metric space file against the axioms")
    p.add_argument("path", help="metric space file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("gh", help="certified GH interval between two metric space files")
    p.add_argument("x", help="left metric space file")
    p.add_argument("y", help="right metric space file")
    p.add_argument("--method", choices=("brute", "bnb"), default="bnb")
    p.add_argument("--budget", type=int, default=None, help="node budget for bnb")
    p.add_argument("--decimal", action="store_true", help="print decimals instead of fractions")
    p.set_defaults(func=cmd_gh)

    p = sub.add_parser("hausdorff", help="Hausdorff distance between two interval union files")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--decimal", action="store_true")
    p.set_defaults(func=cmd_hausdorff)

    p = sub.add_parser("slice", help="canonical midpoint slice between two interval unions")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("s", help="slice parameter in [0, hausdorff(a, b)]")
    p.set_defaults(func=cmd_slice)

    p = sub.add_parser("geodesic", help="additivity table of the glued curve")
    p.add_argument("--config", help="JSON config file")
    p.add_argument("--delta")
    p.add_argument("--grid", help="grid step (default 1/100)")
    p.add_argument("--out", help="write CSV here instead of stdout")
    p.add_argument("--decimal", action="store_true")
    p.set_defaults(func=cmd_geodesic)

    p = sub.add_parser("empirical", help="formula vs realized evidence over the (t, d) grid")
    p.add_argument("--config", help="JSON config file")
    p.add_argument("--delta")
    p.add_argument("--grid", help="grid step (default delta/3)")
    p.add_argument("--window", type=int, default=None)
    p.add_argument("--step", help="sample step of the upper-bound realization")
    p.add_argument("--budget", type=int, default=None, help="evidence search node budget")
    p.add_argument("--out", help="write CSV here instead of stdout")
    p.add_argument("--decimal", action="store_true")
    p.set_defaults(func=cmd_empirical)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "budget", None) is None and args.command == "gh":
        args.budget = ghsearch.DEFAULT_BUDGET
    try:
        return args.func(args)
    except (ParseError, ShapeError, DomainError, SizeLimitError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    raise SystemExit(main())
