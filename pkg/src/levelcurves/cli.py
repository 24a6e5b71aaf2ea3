"""Command-line interface.

One command per invocation; JSON reports are a single object on stdout,
human-readable text goes to stdout in text mode, and all diagnostics go to
stderr. Exit codes: 0 success, 1 usage or input error, 2 certification
failure, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from .arith import ComplexBall
from .circlemaps import blaschke_quotient_split, is_finite_blaschke
from .config import RunConfig
from .curvelab import analyze_unimodular, implicitize, luroth_generator, \
    left_compose_factor, PlaneCurve
from .arlab import ar_accumulate
from .errors import (
    BoundViolation,
    CertificationFailed,
    InternalDisagreement,
    LevelCurveError,
    ParseError,
)
from .levelsolver import count_bound, solve_unimodular_pair
from .parsing import parse_bipoly, parse_expression
from .polynomials import format_bipoly, format_unipoly
from .ratfun import format_ratfun

SCHEMA_VERSION = "1"


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _ball_json(ball: ComplexBall) -> dict:
    return {
        "re": float(ball.center_re()),
        "im": float(ball.center_im()),
        "radius": float(ball.radius()),
    }


def _build_parser() -> _Parser:
    top = _Parser(prog="levelcurves", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--precision", type=int, default=128,
                        help="working precision in bits")
    common.add_argument("--tolerance", type=float, default=1e-12,
                        help="filtering tolerance")
    common.add_argument("--max-precision", type=int, default=4096,
                        help="precision escalation cap in bits")
    common.add_argument("--grid", type=int, default=64,
                        help="real-point search grid resolution")
    common.add_argument("--json", action="store_true",
                        help="shortcut for --format json")
    common.add_argument("--format", choices=("text", "json"), default="text")

    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", parents=[common],
                       help="solve |P1(z)| = |P2(z)| = 1")
    p.add_argument("P1")
    p.add_argument("P2")

    p = sub.add_parser("blaschke", parents=[common],
                       help="Blaschke-quotient recognition")
    p.add_argument("action", choices=("check", "split"))
    p.add_argument("Q")

    p = sub.add_parser("argcd", parents=[common],
                       help="gcd(P1^k-1, P2^k-1) table and stabilization")
    p.add_argument("P1")
    p.add_argument("P2")
    p.add_argument("--max-k", type=int, default=24)

    p = sub.add_parser("curve", parents=[common],
                       help="plane-curve analysis")
    p.add_argument("action", choices=("analyze", "implicitize"))
    p.add_argument("args", nargs="+")

    p = sub.add_parser("decompose", parents=[common],
                       help="common inner factor P_i = Q_i o W")
    p.add_argument("P1")
    p.add_argument("P2")

    p = sub.add_parser("bound", parents=[common],
                       help="the (n1+n2)^2 solution-count bound")
    p.add_argument("P1")
    p.add_argument("P2")
    return top


def _config_from(ns) -> RunConfig:
    return RunConfig(
        precision_bits=ns.precision,
        tolerance=ns.tolerance,
        max_precision_bits=ns.max_precision,
        max_k=getattr(ns, "max_k", 24),
        grid_resolution=ns.grid,
        output_format="json" if (ns.json or ns.format == "json") else "text",
    )


def _cmd_solve(ns, config: RunConfig) -> dict:
    P1 = parse_expression(ns.P1)
    P2 = parse_expression(ns.P2)
    rep = solve_unimodular_pair(P1, P2, config)
    out = {
        "schema_version": SCHEMA_VERSION,
        "command": "solve",
        "status": rep.status,
        "bound": rep.bound,
        "points": [
            {
                **_ball_json(p.z),
                "newton_certified": p.newton_certified,
                "residuals": [
                    float(r.abs_interval().hi) for r in p.residuals
                ],
            }
            for p in rep.points
        ],
        "shared_component": (
            format_bipoly(rep.shared_component)
            if rep.shared_component is not None
            else None
        ),
        "witness": None,
    }
    if rep.witness is not None:
        w = rep.witness
        out["witness"] = {
            "W": format_ratfun(w.W),
            "Q1": format_ratfun(w.Q1),
            "Q2": format_ratfun(w.Q2),
            "mobius": format_ratfun(w.mobius),
            "residual": w.residual,
        }
    return out


def _cmd_blaschke(ns, config: RunConfig) -> dict:
    Q = parse_expression(ns.Q)
    if ns.action == "check":
        return {
            "schema_version": SCHEMA_VERSION,
            "command": "blaschke-check",
            "verdict": is_finite_blaschke(Q),
        }
    form = blaschke_quotient_split(Q, config.precision_bits)
    return {
        "schema_version": SCHEMA_VERSION,
        "command": "blaschke-split",
        "unimodular_constant": _ball_json(form.unimodular_constant),
        "factors": [
            {
                "zero": _ball_json(zero),
                "multiplicity": mult,
                "numerator_side": inside,
            }
            for zero, mult, inside in form.factors
        ],
    }


def _cmd_argcd(ns, config: RunConfig) -> dict:
    P1 = parse_expression(ns.P1)
    P2 = parse_expression(ns.P2)
    for P, label in ((P1, "P1"), (P2, "P2")):
        if not P.den.is_constant():
            raise LevelCurveError(f"{label} must be a polynomial")
    p1 = P1.num.scale(P1.den.constant_value() ** -1)
    p2 = P2.num.scale(P2.den.constant_value() ** -1)
    rep = ar_accumulate(p1, p2, config.max_k, config)
    return {
        "schema_version": SCHEMA_VERSION,
        "command": "argcd",
        "table": [
            {"k": k, "gcd": format_unipoly(g, "z")} for k, g in rep.table
        ],
        "stabilized_F": format_unipoly(rep.stabilized_F, "z"),
        "stabilized_at": rep.stabilized_at,
        "consistency": rep.consistency,
    }


def _cmd_curve(ns, config: RunConfig) -> dict:
    if ns.action == "analyze":
        if len(ns.args) != 1:
            raise _UsageError("curve analyze takes one polynomial F(x, y)")
        F = parse_bipoly(ns.args[0])
        curve = PlaneCurve(F=F, degree=F.total_degree())
        rep = analyze_unimodular(curve, config)
        out = {
            "schema_version": SCHEMA_VERSION,
            "command": "curve-analyze",
            "verdict": rep.verdict,
            "bound": rep.bound,
            "assumed_irreducible": rep.assumed_irreducible,
            "reality": {
                "is_real_up_to_scalar": rep.reality.is_real_up_to_scalar,
                "lambda": str(rep.reality.lam) if rep.reality.lam else None,
            },
            "simple_point": None,
            "points": [
                {"x": _ball_json(p.x), "y": _ball_json(p.y)}
                for p in rep.points
            ],
        }
        if rep.simple_point is not None:
            x, y = rep.simple_point.approx()
            out["simple_point"] = {"x": float(x), "y": float(y)}
        return out
    if len(ns.args) != 2:
        raise _UsageError("curve implicitize takes two rational functions")
    P1 = parse_expression(ns.args[0])
    P2 = parse_expression(ns.args[1])
    curve = implicitize(P1, P2)
    return {
        "schema_version": SCHEMA_VERSION,
        "command": "curve-implicitize",
        "F": format_bipoly(curve.F),
        "degree": curve.degree,
        "deg_x": curve.F.deg(0),
        "deg_y": curve.F.deg(1),
    }


def _cmd_decompose(ns, config: RunConfig) -> dict:
    P1 = parse_expression(ns.P1)
    P2 = parse_expression(ns.P2)
    W = luroth_generator(P1, P2)
    return {
        "schema_version": SCHEMA_VERSION,
        "command": "decompose",
        "W": format_ratfun(W),
        "Q1": format_ratfun(left_compose_factor(P1, W)),
        "Q2": format_ratfun(left_compose_factor(P2, W)),
    }


def _cmd_bound(ns, config: RunConfig) -> dict:
    P1 = parse_expression(ns.P1)
    P2 = parse_expression(ns.P2)
    return {
        "schema_version": SCHEMA_VERSION,
        "command": "bound",
        "bound": count_bound(P1, P2),
    }


_HANDLERS = {
    "solve": _cmd_solve,
    "blaschke": _cmd_blaschke,
    "argcd": _cmd_argcd,
    "curve": _cmd_curve,
    "decompose": _cmd_decompose,
    "bound": _cmd_bound,
}


def _render_text(report: dict) -> str:
    lines = []
    for key, value in report.items():
        if key in ("schema_version", "command"):
            continue
        lines.append(f"{key}: {json.dumps(value)}")
    return "\n".join(lines)


def main(argv: Optional[List[str]] = None) -> int:
    parser = _build_parser()
    try:
        ns = parser.parse_args(argv)
        config = _config_from(ns)
        report = _HANDLERS[ns.command](ns, config)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except ParseError as exc:
        print(f"parse error at offset {exc.position}: {exc}", file=sys.stderr)
        return 1
    except CertificationFailed as exc:
        print(f"certification failed: {exc}", file=sys.stderr)
        return 2
    except (BoundViolation, InternalDisagreement) as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return 3
    except (LevelCurveError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if config.output_format == "json":
        print(json.dumps(report))
    else:
        print(_render_text(report))
    return 0


if __name__ == "__main__":
    sys.exit(main())
