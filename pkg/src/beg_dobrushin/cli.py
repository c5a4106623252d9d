"""Command-line front end: region classification, curve export, bound
evaluation, temperature scans and certification sweeps.

Exit codes: 0 success, 1 check failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from . import bounds, region, verify
from .errors import CapacityError, DomainError
from .model import ModelParams, classify_region
from .specification import exact_max_tv

WORKERS_ENV = "BEGDOB_WORKERS"


def _fmt(value: float) -> str:
    return format(value, ".9g")


def _round9(value: float) -> float:
    return float(_fmt(value))


def _emit_record(record: dict, fmt: str, out) -> None:
    if fmt == "json":
        json.dump({k: _round9(v) if isinstance(v, float) else v for k, v in record.items()}, out, indent=2)
        out.write("\n")
    else:
        out.write(",".join(record.keys()) + "\n")
        out.write(",".join(_fmt(v) if isinstance(v, float) else str(v) for v in record.values()) + "\n")


def _emit_rows(header: list[str], rows: list[tuple], fmt: str, out) -> None:
    if fmt == "json":
        payload = [
            {k: _round9(v) if isinstance(v, float) else v for k, v in zip(header, row)}
            for row in rows
        ]
        json.dump(payload, out, indent=2)
        out.write("\n")
    else:
        out.write(",".join(header) + "\n")
        for row in rows:
            out.write(",".join(_fmt(v) if isinstance(v, float) else str(v) for v in row) + "\n")


def _open_output(path: str | None):
    if path is None or path == "-":
        return sys.stdout, False
    return open(path, "w"), True


def cmd_region(args) -> int:
    label = classify_region(args.x, args.y)
    record = {
        "d": args.d,
        "x": float(args.x),
        "y": float(args.y),
        "major": label.major.value,
        "sub": label.sub.value if label.sub is not None else None,
        "curve_x": region.curve_x(args.d, args.y),
        "in_dobrushin": region.in_dobrushin_region(args.d, args.x, args.y),
    }
    out, close = _open_output(args.output)
    try:
        _emit_record(record, args.format, out)
    finally:
        if close:
            out.close()
    return 0


def cmd_curve(args) -> int:
    if args.steps < 2:
        raise DomainError("steps must be >= 2")
    ys = np.linspace(args.y_min, args.y_max, args.steps)
    rows = [(float(y), region.curve_x(args.d, float(y))) for y in ys]
    out, close = _open_output(args.output)
    try:
        _emit_rows(["y", "x_curve"], rows, args.format, out)
    finally:
        if close:
            out.close()
    return 0


def cmd_bounds(args) -> int:
    params = ModelParams(x=args.x, y=args.y, beta=args.beta, d=args.d)
    ep = bounds.exponents(params)
    record = {
        "d": args.d,
        "x": float(args.x),
        "y": float(args.y),
        "beta": float(args.beta),
        "a": ep.a,
        "b": ep.b,
        "beta_critical": bounds.beta_critical(ep),
        "theorem1_bound": bounds.theorem1_bound(params),
        "lemma2_bound": bounds.lemma2_bound(params),
        "lemma3_bound": bounds.lemma3_bound(params),
        "r_at_a_over_b": bounds.r_of_t(ep.a / ep.b),
        "threshold": 1.0 / (2 * args.d),
    }
    out, close = _open_output(args.output)
    try:
        _emit_record(record, args.format, out)
    finally:
        if close:
            out.close()
    return 0


def cmd_scan(args) -> int:
    if args.steps < 2:
        raise DomainError("steps must be >= 2")
    if args.log:
        betas = np.geomspace(args.beta_min, args.beta_max, args.steps)
    else:
        betas = np.linspace(args.beta_min, args.beta_max, args.steps)
    threshold = 1.0 / (2 * args.d)
    rows = []
    for beta in betas:
        report = exact_max_tv(ModelParams(x=args.x, y=args.y, beta=float(beta), d=args.d))
        rows.append((float(beta), report.max_tv, threshold, report.satisfied))
    out, close = _open_output(args.output)
    try:
        _emit_rows(["beta", "max_tv", "threshold", "satisfied"], rows, args.format, out)
    finally:
        if close:
            out.close()
    return 0


def parse_spec_file(path: str) -> dict:
    """Flat key = value spec document; '#' starts a comment."""
    values: dict[str, str] = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise DomainError(f"{path}:{lineno}: expected 'key = value', got {raw!r}")
            key, value = line.split("=", 1)
            values[key.strip()] = value.strip()
    return values


def _spec_from_args(args) -> verify.SweepSpec:
    file_values = parse_spec_file(args.spec) if args.spec else {}

    def pick(flag_value, key, cast, default):
        if flag_value is not None:
            return flag_value
        if key in file_values:
            return cast(file_values[key])
        return default

    d = pick(args.d, "d", int, 2)
    beta_min = pick(args.beta_min, "beta_min", float, 1e-3)
    beta_max = pick(args.beta_max, "beta_max", float, 50.0)
    beta_steps = pick(args.beta_steps, "beta_steps", int, 40)
    seed = pick(args.seed, "seed", int, 2026)
    points_per_region = pick(args.points_per_region, "points_per_region", int, 20)

    if "points" in file_values:
        points = []
        for chunk in file_values["points"].split(";"):
            chunk = chunk.strip()
            if not chunk:
                continue
            x_str, y_str = chunk.split(",")
            points.append((float(x_str), float(y_str)))
        points = tuple(points)
    else:
        points = verify.sample_strip_points(points_per_region, seed=seed)

    if args.checks is not None:
        names = args.checks
    elif "checks" in file_values:
        names = file_values["checks"]
    else:
        names = None
    if names is None:
        checks = verify.BOUND_CHECKS
    else:
        by_value = {c.value: c for c in verify.Check}
        checks = frozenset(by_value[name.strip()] for name in names.split(","))

    beta_grid = tuple(float(b) for b in np.geomspace(beta_min, beta_max, beta_steps))
    return verify.SweepSpec(d=d, points=points, beta_grid=beta_grid, checks=checks)


def cmd_verify(args) -> int:
    spec = _spec_from_args(args)
    workers = args.workers
    if workers is None and WORKERS_ENV in os.environ:
        workers = int(os.environ[WORKERS_ENV])
    report = verify.run_sweep(spec, workers=workers)
    out, close = _open_output(args.output)
    try:
        out.write(report.to_json() + "\n")
    finally:
        if close:
            out.close()
    for check in report.checks:
        status = "pass" if check.passed else "FAIL"
        slack = "n/a" if check.worst_slack is None else _fmt(check.worst_slack)
        print(f"{check.name}: {status} (worst slack {slack})", file=sys.stderr)
        for witness in check.witnesses[:5]:
            print(
                f"  witness: point={witness.point} beta={_fmt(witness.beta)} "
                f"pair={witness.pair} slack={_fmt(witness.slack)}",
                file=sys.stderr,
            )
    return 0 if report.all_passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="begdob",
        description="Dobrushin uniqueness region of the BEG model",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_common(p, fmt_default):
        p.add_argument("-o", "--output", default=None, help="output path (default stdout)")
        p.add_argument("--format", choices=("csv", "json"), default=fmt_default)

    p = sub.add_parser("region", help="classify a coupling point")
    p.add_argument("-d", type=int, required=True)
    p.add_argument("-x", type=float, required=True)
    p.add_argument("-y", type=float, required=True)
    add_common(p, "json")
    p.set_defaults(func=cmd_region)

    p = sub.add_parser("curve", help="export the uniqueness boundary curve")
    p.add_argument("-d", type=int, required=True)
    p.add_argument("--y-min", type=float, required=True)
    p.add_argument("--y-max", type=float, required=True)
    p.add_argument("--steps", type=int, default=101)
    add_common(p, "csv")
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("bounds", help="evaluate the analytic bounds at a point")
    p.add_argument("-d", type=int, required=True)
    p.add_argument("-x", type=float, required=True)
    p.add_argument("-y", type=float, required=True)
    p.add_argument("--beta", type=float, required=True)
    add_common(p, "json")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("scan", help="scan the exact condition over temperatures")
    p.add_argument("-d", type=int, required=True)
    p.add_argument("-x", type=float, required=True)
    p.add_argument("-y", type=float, required=True)
    p.add_argument("--beta-min", type=float, default=1e-3)
    p.add_argument("--beta-max", type=float, default=50.0)
    p.add_argument("--steps", type=int, default=40)
    p.add_argument("--log", action="store_true", help="use a logarithmic beta grid")
    add_common(p, "csv")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("verify", help="run a certification sweep")
    p.add_argument("--spec", default=None, help="flat key = value spec file")
    p.add_argument("-d", type=int, default=None)
    p.add_argument("--beta-min", type=float, default=None)
    p.add_argument("--beta-max", type=float, default=None)
    p.add_argument("--beta-steps", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--points-per-region", type=int, default=None)
    p.add_argument("--checks", default=None, help="comma-separated check names")
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except (DomainError, CapacityError, OSError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())
