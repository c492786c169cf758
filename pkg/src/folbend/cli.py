"""Command line front end.

Every subcommand prints a human-readable summary by default and a stable
JSON document with --json (schema_version 1, keys sorted, floats in
shortest round-trip form, so dumps(loads(text)) reproduces the bytes).

Exit codes: 0 for an answered computation (divergence and catalog
verdicts included), 1 when the reference table fails to reproduce or a
self check fails, 2 for usage errors, 3 when the quadrature cannot decide
at the requested tolerance.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from fractions import Fraction
from typing import Optional

import numpy as np

from .bending import (
    complex_radial_bending,
    epsilon_deformed_bending,
    torus_bending,
    total_bending,
)
from .bounds import (
    DEFAULT_CHECK_PAIRS,
    BoundCase,
    einstein_lower_bound,
    integral_formula_check,
    lower_bound,
    minimizer_report,
    table1_report,
)
from .quadrature import QuadratureConfig, UndecidedError, adaptive_quadrature
from .spaces import parse_focal, parse_space
from .tubes import (
    InitKind,
    NotComputableError,
    jacobi_ode_oracle,
    jacobi_solution,
    tube_profile,
    write_profile_csv,
)
from .torsion import mu_identity_residual, random_coefficients

SCHEMA_VERSION = 1


def _env_float(name: str, fallback: float) -> float:
    raw = os.environ.get(name)
    if raw is None:
        return fallback
    try:
        return float(raw)
    except ValueError as exc:
        raise SystemExit(f"folbend: invalid {name}={raw!r}") from exc


def _quad_from_args(args) -> QuadratureConfig:
    rel = args.rel_tol if args.rel_tol is not None else _env_float("FOLBEND_REL_TOL", 1e-8)
    absol = args.abs_tol if args.abs_tol is not None else _env_float("FOLBEND_ABS_TOL", 1e-12)
    return QuadratureConfig(rel_tol=rel, abs_tol=absol)


def _lam_from_args(args) -> float:
    lam = args.lam if args.lam is not None else _env_float("FOLBEND_LAMBDA", 1.0)
    if not (math.isfinite(lam) and lam > 0):
        raise SystemExit("folbend: the curvature scale must be positive")
    return lam


def _emit_json(payload: dict) -> None:
    payload = {"schema_version": SCHEMA_VERSION, **payload}
    print(json.dumps(payload, sort_keys=True, indent=2))


def _branch_payload(branches) -> list:
    return [
        {"kappa": b.kappa, "multiplicity": b.multiplicity, "init": b.init.value}
        for b in branches
    ]


def _bending_payload(res) -> dict:
    return {
        "status": res.status,
        "value_per_volume": res.value_per_volume,
        "error_estimate": res.error_estimate,
        "value": res.value,
        "volume": res.volume,
        "divergent_endpoint": res.divergent_endpoint,
        "exponent_estimate": res.exponent_estimate,
        "mu": res.mu,
        "branches": _branch_payload(res.branches),
    }


def _divergent_line(res) -> str:
    exp = res.exponent_estimate
    kind = "log" if exp is not None and 0.9 <= exp <= 1.1 else f"exponent ~ {exp:.2f}"
    return f"Divergent ({kind}) at r={res.divergent_endpoint}"


def _print_bending_human(label: str, res) -> None:
    if res.status == "divergent":
        print(f"{label}: {_divergent_line(res)}")
        return
    line = f"{label}: B/Vol = {res.value_per_volume:.6f} (error estimate {res.error_estimate:.1e})"
    if res.value is not None:
        line += f"; absolute B = {res.value:.6f}, Vol = {res.volume:.6f}"
    print(line)


def _cmd_bending(args) -> int:
    quad = _quad_from_args(args)
    lam = _lam_from_args(args)
    space = parse_space(args.space, lam)
    focal = parse_focal(args.focal)
    try:
        if args.epsilon is not None:
            res = epsilon_deformed_bending(space, focal, args.epsilon, quad)
        else:
            res = total_bending(space, focal, quad)
    except NotComputableError as exc:
        if args.json:
            _emit_json({"command": "bending", "space": space.label,
                        "focal": focal.label, "lambda": lam,
                        "status": "not-computable", "reason": str(exc)})
        else:
            print(f"{space.label} / {focal.label}: not computable ({exc})")
        return 0

    if args.emit_profile:
        write_profile_csv(tube_profile(space, focal), args.emit_profile)

    if args.json:
        payload = {"command": "bending", "space": space.label,
                   "focal": focal.label, "lambda": lam, **_bending_payload(res)}
        if args.epsilon is not None:
            payload["epsilon"] = args.epsilon
        _emit_json(payload)
    elif args.csv:
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["space", "focal", "lambda", "status", "value_per_volume",
                         "error_estimate", "divergent_endpoint", "exponent_estimate"])
        writer.writerow([space.label, focal.label, repr(lam), res.status,
                         "" if res.value_per_volume is None else repr(res.value_per_volume),
                         "" if res.error_estimate is None else repr(res.error_estimate),
                         res.divergent_endpoint or "",
                         "" if res.exponent_estimate is None else repr(res.exponent_estimate)])
        sys.stdout.write(buf.getvalue())
    else:
        label = f"{space.label} / {focal.label}"
        if args.epsilon is not None:
            label += f" (epsilon = {args.epsilon:g})"
        _print_bending_human(label, res)
    return 0


def _cmd_torus(args) -> int:
    quad = _quad_from_args(args)
    res = torus_bending(args.big_radius, args.small_radius, quad,
                        area_weighted=args.area_weighted)
    if args.json:
        _emit_json({"command": "torus", "big_radius": args.big_radius,
                    "small_radius": args.small_radius,
                    "area_weighted": res.area_weighted, "value": res.value,
                    "error_estimate": res.error_estimate,
                    "upper_bound": res.upper_bound})
    else:
        print(f"torus R={args.big_radius:g}, r={args.small_radius:g}: "
              f"B = {res.value:.6f} < {res.upper_bound:.6f} (upper bound)")
    return 0


def _cmd_complex_radial(args) -> int:
    quad = _quad_from_args(args)
    lam = _lam_from_args(args)
    res = complex_radial_bending(args.m, lam, quad)
    if args.json:
        _emit_json({"command": "complex-radial", "m": args.m, "lambda": lam,
                    **_bending_payload(res)})
    else:
        print(f"complex radial on CP:{args.m}: B/Vol = {res.value_per_volume:.6f} "
              f"(closed form: 2 * lam = {2 * lam:.6f})")
    return 0


def _closed_form_text(frac: Fraction, lam: float) -> str:
    return f"{frac} * lam = {float(frac) * lam:.6f}"


def _cmd_table1(args) -> int:
    quad = _quad_from_args(args)
    lam = _lam_from_args(args)
    report = table1_report(lam=lam, rtol=args.rtol, quad=quad)
    if args.json:
        rows = []
        for row in report.rows:
            rows.append({
                "space": row.space, "focal": row.focal, "kind": row.kind,
                "closed_form": None if row.closed_form is None else str(row.closed_form),
                "expected": row.expected, "computed": row.computed,
                "relative_error": row.relative_error,
                "divergent_endpoint": row.divergent_endpoint,
                "exponent_estimate": row.exponent_estimate, "status": row.status,
            })
        _emit_json({"command": "table1", "lambda": lam, "rtol": args.rtol,
                    "all_ok": report.all_ok, "rows": rows})
    else:
        for row in report.rows:
            label = f"{row.space} / {row.focal}"
            if row.kind == "finite" and row.computed is not None:
                print(f"{label}: B/Vol = {row.computed:.6f} "
                      f"(closed form: {_closed_form_text(row.closed_form, lam)}) "
                      f"[{row.status}]")
            elif row.kind == "divergent" and row.divergent_endpoint is not None:
                exp = row.exponent_estimate
                kind = "log" if exp is not None and 0.9 <= exp <= 1.1 else "power"
                print(f"{label}: Divergent ({kind}) at r={row.divergent_endpoint} "
                      f"[{row.status}]")
            elif row.kind == "not-computable":
                print(f"{label}: not determined by the tube catalog [{row.status}]")
            else:
                print(f"{label}: [{row.status}]")
        print(f"table {'reproduced' if report.all_ok else 'FAILED'} "
              f"(lam={lam:g}, rtol={args.rtol:g})")
    return 0 if report.all_ok else 1


def _cmd_check_integral(args) -> int:
    quad = _quad_from_args(args)
    lam = _lam_from_args(args)
    if args.space:
        pairs = [(args.space, args.focal or "point")]
    else:
        pairs = list(DEFAULT_CHECK_PAIRS)
    results = [
        integral_formula_check(parse_space(s, lam), parse_focal(f), quad)
        for s, f in pairs
    ]
    if args.json:
        _emit_json({"command": "check-integral", "lambda": lam, "results": [
            {"space": r.space, "focal": r.focal, "status": r.status,
             "lhs": r.lhs, "rhs": r.rhs, "relative_gap": r.relative_gap,
             "holds": r.holds}
            for r in results
        ]})
    else:
        for r in results:
            if r.status == "not-applicable":
                tail = "" if r.rhs is None else f" (integral mean = {r.rhs:.6f})"
                print(f"{r.space} / {r.focal}: not applicable, bending diverges{tail}")
            else:
                print(f"{r.space} / {r.focal}: Ric = {r.lhs:.6f}, "
                      f"integral mean = {r.rhs:.6f}, gap = {r.relative_gap:.2e} "
                      f"[{'ok' if r.holds else 'FAILED'}]")
    applicable = [r for r in results if r.status == "applicable"]
    return 0 if all(r.holds for r in applicable) else 1


_CASE_CHOICES = {c.value: c for c in BoundCase}


def _resolve_case(label: str, n: int, q: int) -> BoundCase:
    if label == "I":
        return BoundCase.I_Q1 if q == 1 else BoundCase.I_CODIM1
    if label == "III":
        # pick the valid reading; prefer the one tuned to the smaller side
        if q <= n - 2 and (q < 2 or n - q <= q):
            return BoundCase.III_LOW
        return BoundCase.III_HIGH
    return _CASE_CHOICES[label]


def _cmd_bounds(args) -> int:
    lam = _lam_from_args(args)
    space = parse_space(args.space, lam)
    case = _resolve_case(args.case, space.dim, args.q)
    bound = lower_bound(space, args.q, case)
    einstein = einstein_lower_bound(space)
    if args.json:
        _emit_json({"command": "bounds", "space": space.label, "lambda": lam,
                    "q": args.q, "case": bound.case.value,
                    "coefficient": str(bound.coefficient), "value": bound.value,
                    "einstein_value": einstein})
    else:
        print(f"{space.label}, q={args.q}, case {bound.case.value}: "
              f"B/Vol >= {bound.coefficient} * q(n-q) * lam = {bound.value:.6f}")
        print(f"scalar-curvature variant: B/Vol >= {einstein:.6f}")
    return 0


def _cmd_minimizer(args) -> int:
    quad = _quad_from_args(args)
    lam = _lam_from_args(args)
    space = parse_space(args.space, lam)
    rep = minimizer_report(space, quad)
    if args.json:
        _emit_json({"command": "minimizer", "space": rep.space,
                    "lambda": lam, "bound_value": rep.bound.value,
                    "bending_status": rep.bending.status,
                    "value_per_volume": rep.bending.value_per_volume,
                    "slack": rep.slack, "attains_bound": rep.attains_bound,
                    "leaves_umbilical": rep.leaves_umbilical,
                    "leaves_integrable": rep.leaves_integrable, "note": rep.note})
    else:
        print(f"{rep.space}: bound = {rep.bound.value:.6f}")
        if rep.bending.is_finite:
            print(f"radial foliation: B/Vol = {rep.bending.value_per_volume:.6f} "
                  f"(slack {rep.slack:.2e})")
        else:
            print(f"radial foliation: {_divergent_line(rep.bending)}")
        print(rep.note)
    return 0


def _cmd_selfcheck(args) -> int:
    rng_seed = args.seed
    failures = []

    # exactness of the panel rule on a smooth integrand
    val, _ = adaptive_quadrature(lambda x: np.cos(x), 0.0, 1.0, QuadratureConfig())
    if abs(val - math.sin(1.0)) > 1e-12:
        failures.append("quadrature drifted on cos over [0, 1]")

    # algebraic identity between the invariants of random coefficient blocks
    from .torsion import SplitDims
    for k in range(5):
        dims = SplitDims(4 + (k % 3), 1 + (k % 3))
        coeffs = random_coefficients(dims, seed=rng_seed + k)
        res_v, res_h = mu_identity_residual(coeffs)
        if max(abs(res_v), abs(res_h)) > 1e-12:
            failures.append(f"invariant identity residual too large at {dims}")
            break

    # closed-form tube solutions against a direct integration oracle
    for kappa, init in ((1.0, InitKind.NORMAL), (4.0, InitKind.TANGENT)):
        f, _ = jacobi_solution(kappa, init)
        for r in (0.3, 0.7, 1.1):
            g = jacobi_ode_oracle(kappa, init, r, steps=4096)
            if abs(float(f(r)) - g) > 1e-9:
                failures.append("tube solution drifted from the integration oracle")
                break

    # one finite and one divergent reference value
    res = total_bending(parse_space("S:3"), parse_focal("point"))
    if res.status != "finite" or abs(res.value_per_volume - 1.0) > 1e-6:
        failures.append("radial bending on S:3 missed its closed form")
    div = total_bending(parse_space("S:2"), parse_focal("point"))
    if div.status != "divergent":
        failures.append("radial bending on S:2 failed to diverge")

    if failures:
        for line in failures:
            print(f"FAILED: {line}")
        return 1
    print("all internal checks passed")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="folbend",
        description="Bending and energy of singular foliations on model spaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    quad_parent = argparse.ArgumentParser(add_help=False)
    quad_parent.add_argument("--rel-tol", type=float, default=None,
                             help="relative quadrature tolerance (FOLBEND_REL_TOL)")
    quad_parent.add_argument("--abs-tol", type=float, default=None,
                             help="absolute quadrature tolerance (FOLBEND_ABS_TOL)")

    lam_parent = argparse.ArgumentParser(add_help=False)
    lam_parent.add_argument("--lambda", dest="lam", type=float, default=None,
                            help="curvature scale (FOLBEND_LAMBDA, default 1)")

    json_parent = argparse.ArgumentParser(add_help=False)
    json_parent.add_argument("--json", action="store_true",
                             help="print a machine-readable JSON document")

    p = sub.add_parser("bending", parents=[quad_parent, lam_parent, json_parent],
                       help="total bending of a radial/tubular foliation")
    p.add_argument("--space", required=True, help="ambient space label, e.g. S:5 or CaP2")
    p.add_argument("--focal", default="point", help="focal variety: point or sub:S:2")
    p.add_argument("--epsilon", type=float, default=None,
                   help="deformation half-width in [0, pi/2]")
    p.add_argument("--csv", action="store_true", help="print the result row as CSV")
    p.add_argument("--emit-profile", metavar="PATH",
                   help="also write the sampled tube profile to PATH as CSV")
    p.set_defaults(func=_cmd_bending)

    p = sub.add_parser("torus", parents=[quad_parent, json_parent],
                       help="bending of the circle foliation of a torus of revolution")
    p.add_argument("--R", dest="big_radius", type=float, required=True)
    p.add_argument("--r", dest="small_radius", type=float, required=True)
    p.add_argument("--area-weighted", action="store_true",
                   help="weight the integrand by the surface area element")
    p.set_defaults(func=_cmd_torus)

    p = sub.add_parser("complex-radial", parents=[quad_parent, lam_parent, json_parent],
                       help="bending of the complex radial foliation on CP:m")
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=_cmd_complex_radial)

    p = sub.add_parser("table1", parents=[quad_parent, lam_parent, json_parent],
                       help="recompute the reference bending table")
    p.add_argument("--rtol", type=float, default=1e-5,
                   help="relative tolerance for reproduction (default 1e-5)")
    p.set_defaults(func=_cmd_table1)

    p = sub.add_parser("check-integral", parents=[quad_parent, lam_parent, json_parent],
                       help="verify the mean-curvature integral identity")
    p.add_argument("--space", default=None, help="restrict to one ambient space")
    p.add_argument("--focal", default=None, help="focal variety for --space")
    p.set_defaults(func=_cmd_check_integral)

    p = sub.add_parser("bounds", parents=[lam_parent, json_parent],
                       help="lower bounds for B/Vol by leaf dimension")
    p.add_argument("--space", required=True)
    p.add_argument("--q", type=int, required=True, help="leaf dimension")
    p.add_argument("--case", required=True,
                   choices=sorted(set(_CASE_CHOICES) | {"I", "III"}),
                   help="bound case (I, II, III, or an explicit variant)")
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("minimizer", parents=[quad_parent, lam_parent, json_parent],
                       help="compare the radial foliation against the q=n-1 bound")
    p.add_argument("--space", required=True)
    p.set_defaults(func=_cmd_minimizer)

    p = sub.add_parser("selfcheck", help="run fast internal consistency checks")
    p.add_argument("--seed", type=int, default=20240817)
    p.set_defaults(func=_cmd_selfcheck)

    return parser


def main(argv: Optional[list] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UndecidedError as exc:
        print(f"folbend: undecided: {exc}", file=sys.stderr)
        return 3
    except NotComputableError as exc:
        print(f"folbend: {exc}", file=sys.stderr)
        return 0
    except ValueError as exc:
        print(f"folbend: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
