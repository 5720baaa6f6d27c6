"""Command-line front end.

Each subcommand writes one JSON document to stdout (``q-curve`` writes a
tab-separated table instead). Floats carry 17 significant digits so every
value round-trips exactly. Exit codes: 0 success, 2 usage error, 3 domain
error, 4 resource guard.

Example::

    anglespread spread --p 0.2,0.3,0.5
    anglespread grid-verify --n 4 --k 20
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path
from typing import Any, Sequence

import numpy as np

from .errors import AngleSpreadError, TooLarge
from .oracle import GridSpec, OracleReport, grid_maximize, random_maximize
from .reduction import q_domain, q_eval
from .simplex_core import UNIFORM_EPS, SimplexPoint, make_simplex_point
from .spread import (
    SegmentExtension,
    cos_spread,
    extend_segment,
    min_angle_bound,
    optimal_pair,
)
from .targets import DEFAULT_TOL, half_angle_targets

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_GUARD = 4


class UsageError(Exception):
    pass


def fmt_float(x: float) -> str:
    return format(float(x), ".17g")


def dumps(obj: Any, indent: int = 2, _level: int = 0) -> str:
    """JSON text with every float written to 17 significant digits."""
    pad = " " * (indent * (_level + 1))
    end = " " * (indent * _level)
    if isinstance(obj, SimplexPoint):
        obj = obj.tolist()
    elif isinstance(obj, np.ndarray):
        obj = obj.tolist()
    if obj is None or isinstance(obj, (bool, np.bool_)):
        return json.dumps(None if obj is None else bool(obj))
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return fmt_float(obj) if math.isfinite(obj) else "null"
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {dumps(v, indent, _level + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        # Vectors stay on one line.
        return "[" + ", ".join(dumps(v, indent, _level + 1) for v in obj) + "]"
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def _extension_doc(ext: SegmentExtension) -> dict:
    return {
        "n": ext.n,
        "p": ext.p,
        "a": ext.a,
        "b": ext.b,
        "lambda_minus": ext.lambda_minus,
        "lambda_plus": ext.lambda_plus,
        "idx_min": ext.idx_min,
        "idx_max": ext.idx_max,
    }


def _report_doc(rep: OracleReport) -> dict:
    return {
        "n": rep.n,
        "best_cosine": rep.best_cosine,
        "best_point": rep.best_point,
        "points_evaluated": rep.points_evaluated,
        "closed_form_bound": rep.closed_form_bound,
        "gap": rep.gap,
    }


def _parse_vector(text: str) -> list[float]:
    try:
        return [float(s) for s in text.split(",") if s.strip()]
    except ValueError as exc:
        raise UsageError(f"--p expects comma-separated numbers: {exc}") from None


def _read_point(args) -> SimplexPoint:
    if (args.p is None) == (args.input is None):
        raise UsageError("give exactly one of --p or --input")
    if args.p is not None:
        raw = _parse_vector(args.p)
    else:
        try:
            doc = json.loads(Path(args.input).read_text(encoding="utf-8"))
            raw = [float(v) for v in doc["p"]]
        except (OSError, ValueError, KeyError, TypeError) as exc:
            raise UsageError(f"cannot read field 'p' from {args.input}: {exc}") from None
    return make_simplex_point(raw)


def cmd_extend(args) -> dict:
    return {"subcommand": "extend", **_extension_doc(extend_segment(_read_point(args), args.eps))}


def cmd_spread(args) -> dict:
    res = cos_spread(_read_point(args), args.eps)
    return {
        "subcommand": "spread",
        "cosine": res.cosine,
        "angle_radians": res.angle_radians,
        "extension": _extension_doc(res.extension),
    }


def cmd_bound(args) -> dict:
    c, angle = min_angle_bound(args.n, allow_n2=args.allow_n2)
    return {"subcommand": "bound", "n": args.n, "cosine": c, "angle_radians": angle}


def cmd_optimal(args) -> dict:
    a, b, p = optimal_pair(args.n)
    return {
        "subcommand": "optimal",
        "n": args.n,
        "a_star": a,
        "b_star": b,
        "p_star": p,
        "cosine": cos_spread(p).cosine,
    }


def cmd_grid(args) -> dict:
    spec = GridSpec(n=args.n, k=args.k, exclude_uniform_eps=args.exclude_eps)
    return {"subcommand": "grid-verify", "k": args.k, **_report_doc(grid_maximize(spec))}


def cmd_random(args) -> dict:
    rep = random_maximize(args.n, args.samples, args.seed)
    return {"subcommand": "random-verify", "samples": args.samples, "seed": args.seed, **_report_doc(rep)}


def cmd_targets(args) -> dict:
    t = half_angle_targets(_read_point(args), args.tol, args.eps)
    return {
        "subcommand": "targets",
        "q": t.q,
        "v": t.v,
        "alpha_n": t.alpha_n,
        "achieved_angle_pq": t.achieved_angle_pq,
        "achieved_angle_uv": t.achieved_angle_uv,
        "tolerance": t.tolerance,
        "q_side": t.q_side,
        "v_side": t.v_side,
        "q_at_endpoint": t.q_at_endpoint,
        "v_at_endpoint": t.v_at_endpoint,
        "extension": _extension_doc(t.extension),
    }


def q_curve(n: int, points: int) -> str:
    """Tab-separated ``y, Q(y), Q'(y)`` on an even grid over ``[1/(n-1), 1]``."""
    if points < 2:
        raise UsageError("--points must be at least 2")
    q_eval(n, 1.0)  # dimension check
    lo, hi = q_domain(n)
    lines = ["#y\tQ\tQprime"]
    for y in np.linspace(lo, hi, points):
        ev = q_eval(n, float(y))
        lines.append("\t".join(fmt_float(v) for v in (ev.y, ev.q_value, ev.q_prime)))
    return "\n".join(lines) + "\n"


def _add_point_args(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--p", help="comma-separated coordinates of a simplex point")
    sp.add_argument("--input", help="JSON file with a field 'p'")
    sp.add_argument("--eps", type=float, default=UNIFORM_EPS, help="uniform exclusion radius (max-norm)")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="anglespread", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="subcommand", required=True)

    sp = sub.add_parser("extend", help="maximal chord [a, b] through u and p")
    _add_point_args(sp)
    sp.set_defaults(func=cmd_extend)

    sp = sub.add_parser("spread", help="angle spread of the chord through p")
    _add_point_args(sp)
    sp.set_defaults(func=cmd_spread)

    sp = sub.add_parser("bound", help="closed-form minimal angle spread")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--allow-n2", action="store_true", help="accept n=2 (angle pi/2)")
    sp.set_defaults(func=cmd_bound)

    sp = sub.add_parser("optimal", help="optimal witnesses a*, b*, p*")
    sp.add_argument("--n", type=int, required=True)
    sp.set_defaults(func=cmd_optimal)

    sp = sub.add_parser("grid-verify", help="exhaustive lattice search")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=int, required=True, help="lattice denominator")
    sp.add_argument("--exclude-eps", type=float, default=1e-12)
    sp.set_defaults(func=cmd_grid)

    sp = sub.add_parser("random-verify", help="uniform random search")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--samples", type=int, required=True)
    sp.add_argument("--seed", type=int, required=True)
    sp.set_defaults(func=cmd_random)

    sp = sub.add_parser("q-curve", help="tabulate Q(y) and Q'(y)")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--points", type=int, default=101)
    sp.set_defaults(func=None)

    sp = sub.add_parser("targets", help="half-angle targets q and v")
    _add_point_args(sp)
    sp.add_argument("--tol", type=float, default=DEFAULT_TOL)
    sp.set_defaults(func=cmd_targets)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.subcommand == "q-curve":
            sys.stdout.write(q_curve(args.n, args.points))
        else:
            sys.stdout.write(dumps(args.func(args)) + "\n")
    except UsageError as exc:
        print(f"anglespread {args.subcommand}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except TooLarge as exc:
        print(f"TooLarge: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (AngleSpreadError, ValueError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    return EXIT_OK


run = main


if __name__ == "__main__":
    raise SystemExit(main())
