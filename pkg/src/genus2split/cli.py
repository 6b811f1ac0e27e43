"""Command-line interface for the split-Jacobian toolkit.

Every subcommand emits JSON (default) or CSV; exit status is 0 on success,
1 on a verification failure or a structured math error, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import json
import random
import re
import sys
from fractions import Fraction

from . import catalog, singular, surfaces
from .errors import Genus2Error
from .invariants import (
    CubicPair,
    SexticForm,
    absolute_from_igusa,
    igusa_from_sextic,
    pair_invariants,
)
from .scalars import parse_scalar


def _jsonable(obj):
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, (int, float, str, bool)) or obj is None:
        return obj
    return str(obj)


def _emit(args, payload):
    text = json.dumps(_jsonable(payload), indent=2)
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _fail(args, exc):
    _emit(args, {"error": type(exc).__name__, "message": str(exc)})
    return 1


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_invariants(args):
    coeffs = tuple(parse_scalar(c) for c in args.coeffs)
    f = SexticForm(coeffs)
    J = igusa_from_sextic(f)
    out = {"degree": f.degree, "igusa": J.as_dict()}
    if J.J2:
        out["absolute"] = absolute_from_igusa(J).as_dict()
    else:
        out["absolute"] = None
        out["note"] = "J2 = 0: absolute invariants undefined"
    _emit(args, out)
    return 0


def cmd_cubic_pair(args):
    coeffs = [parse_scalar(c) for c in args.coeffs]
    pair = CubicPair(F=tuple(coeffs[:4]), G=tuple(coeffs[4:]))
    inv = pair_invariants(pair)
    _emit(args, {"H": inv.H, "r1": inv.r1, "r2": inv.r2, "r3": inv.r3})
    return 0


def cmd_theta(args):
    u, v = parse_scalar(args.u), parse_scalar(args.v)
    inv = surfaces.theta(u, v)
    _emit(args, {"uv": [u, v], "invariants": inv.as_dict()})
    return 0


def cmd_uv_to_r(args):
    u, v = parse_scalar(args.u), parse_scalar(args.v)
    r1, r2 = surfaces.uv_to_r(u, v)
    s1, s2 = surfaces.eqr_to_rho_coordinates(r1, r2)
    _emit(args, {"uv": [u, v], "r1": r1, "r2": r2,
                 "rho_r1": s1, "rho_r2": s2})
    return 0


def cmd_rho(args):
    r1, r2 = parse_scalar(args.r1), parse_scalar(args.r2)
    inv = surfaces.rho(r1, r2)
    _emit(args, {"r": [r1, r2], "invariants": inv.as_dict()})
    return 0


def cmd_surface_eval(args):
    if args.text:
        _emit(args, {"surface": args.surface,
                     "polynomial": catalog.SURFACES[args.surface].to_text()})
        return 0
    point = tuple(parse_scalar(c) for c in args.coords)
    value = surfaces.surface_eval(args.surface, point)
    _emit(args, {"surface": args.surface, "point": point,
                 "value": value, "is_zero": not value})
    return 0


def cmd_singular(args):
    point = tuple(parse_scalar(c) for c in args.coords)
    report = singular.gradient(args.surface, point, precision=args.precision)
    _emit(args, report.as_dict())
    return 0


def cmd_classify(args):
    point = tuple(parse_scalar(c) for c in args.coords)
    result = singular.classify_automorphism(point)
    _emit(args, result.as_dict())
    return 0


def _verify_registry(args):
    return {
        "theta_consistency": lambda: surfaces.check_identity(
            "theta_consistency", seed=args.seed, samples=args.samples),
        "eqr_consistency": lambda: surfaces.check_identity(
            "eqr_consistency", seed=args.seed, samples=args.samples),
        "rho_factors_theta": lambda: surfaces.check_identity(
            "rho_factors_theta", seed=args.seed, samples=args.samples),
        "s3mod5_vanishes_on_theta": lambda: surfaces.check_identity(
            "s3mod5_vanishes_on_theta", seed=args.seed, samples=args.samples),
        "s2_oracle_membership": lambda: surfaces.check_identity(
            "s2_oracle_membership", seed=args.seed, samples=args.samples),
        "c3_system": singular.verify_c3_system,
        "t3_points": singular.verify_t3_points,
        "table1": singular.verify_table1,
        "minors_on_iso1": lambda: singular.verify_minors_on_iso1(
            prime=args.prime, min_points=args.min_points, seed=args.seed),
        "c1_singularity": lambda: singular.sample_component_singularity(
            "c1", precision=args.precision or 60, seed=args.seed),
        "c2_singularity": lambda: singular.sample_component_singularity(
            "c2", precision=args.precision or 60, seed=args.seed),
    }


def cmd_verify(args):
    registry = _verify_registry(args)
    names = list(registry) if "all" in args.checks else args.checks
    unknown = [n for n in names if n not in registry]
    if unknown:
        print(f"unknown checks: {unknown}; available: {sorted(registry)}", file=sys.stderr)
        return 2
    reports = []
    failed = False
    for name in names:
        report = registry[name]()
        reports.append(report)
        status = report["status"]
        print(f"{name}: {status.upper()}")
        for d in report.get("discrepancies", []):
            print(f"  discrepancy [{d.get('kind')}]: {d.get('detail', '')}".rstrip())
        if status == "fail":
            failed = True
    if args.json or args.out:
        _emit(args, {"reports": reports,
                     "status": "fail" if failed else "ok"})
    return 1 if failed else 0


def cmd_sample(args):
    rng = random.Random(args.seed)
    rows = []
    if args.family == "split-sextics":
        while len(rows) < args.count:
            a = Fraction(rng.randint(-40, 40), rng.randint(1, 8))
            b = Fraction(rng.randint(-40, 40), rng.randint(1, 8))
            c = Fraction(rng.randint(-40, 40), rng.randint(1, 8))
            try:
                f = SexticForm((c, Fraction(0), b, Fraction(0), a,
                                Fraction(0), Fraction(1)))
                if not f.is_genus2():
                    continue
                inv = absolute_from_igusa(igusa_from_sextic(f))
            except Genus2Error:
                continue
            residual = surfaces.surface_eval("s2", inv.as_tuple())
            rows.append({"p1": float(a), "p2": float(b),
                         "i1": float(inv.i1), "i2": float(inv.i2),
                         "i3": float(inv.i3), "residual": float(residual)})
    else:
        while len(rows) < args.count:
            u = Fraction(rng.randint(-60, 60), rng.randint(1, 12))
            v = Fraction(rng.randint(-60, 60), rng.randint(1, 12))
            try:
                inv = surfaces.theta(u, v)
            except Genus2Error:
                continue
            rows.append({"p1": float(u), "p2": float(v),
                         "i1": float(inv.i1), "i2": float(inv.i2),
                         "i3": float(inv.i3), "residual": 0.0})
    fields = ["p1", "p2", "i1", "i2", "i3", "residual"]
    out = open(args.out, "w", newline="") if args.out else sys.stdout
    try:
        writer = csv.DictWriter(out, fieldnames=fields)
        writer.writeheader()
        writer.writerows(rows)
    finally:
        if args.out:
            out.close()
    if args.fig:
        from .figures import render_point_cloud

        render_point_cloud([(r["i1"], r["i2"], r["i3"]) for r in rows],
                           args.fig, title=f"{args.family} invariants")
        print(f"figure written to {args.fig}", file=sys.stderr)
    return 0


# ---------------------------------------------------------------------------
# parser wiring
# ---------------------------------------------------------------------------


def _allow_negative(sp):
    # scalar arguments like -7/2 or -15/8+35/8*sqrt(5) must not be mistaken
    # for option flags
    sp._negative_number_matcher = re.compile(r"^-\d")
    return sp


def build_parser():
    p = argparse.ArgumentParser(
        prog="genus2split",
        description="Exact invariants and split-Jacobian loci of genus 2 curves.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    sp = _allow_negative(sub.add_parser("invariants", help="Igusa and absolute invariants of a sextic"))
    sp.add_argument("coeffs", nargs=7, metavar="a", help="a0 .. a6, ascending")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_invariants)

    sp = _allow_negative(sub.add_parser("cubic-pair", help="invariants of an unordered pair of cubics"))
    sp.add_argument("coeffs", nargs=8, metavar="c", help="F: a0..a3 then G: b0..b3")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_cubic_pair)

    sp = _allow_negative(sub.add_parser("theta", help="absolute invariants of the (u, v) curve family"))
    sp.add_argument("u")
    sp.add_argument("v")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_theta)

    sp = _allow_negative(sub.add_parser("uv-to-r", help="pair invariants (r1, r2) of the (u, v) family"))
    sp.add_argument("u")
    sp.add_argument("v")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_uv_to_r)

    sp = _allow_negative(sub.add_parser("rho", help="absolute invariants from (r1, r2)"))
    sp.add_argument("r1")
    sp.add_argument("r2")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_rho)

    sp = _allow_negative(sub.add_parser("surface-eval", help="evaluate a stored surface at a point"))
    sp.add_argument("--surface", required=True, choices=sorted(catalog.SURFACES))
    sp.add_argument("coords", nargs="*")
    sp.add_argument("--text", action="store_true",
                    help="print the stored polynomial in interchange format")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_surface_eval)

    sp = _allow_negative(sub.add_parser("singular", help="value and gradient of a surface at a point"))
    sp.add_argument("coords", nargs=3, metavar="c")
    sp.add_argument("--surface", default="s2", choices=sorted(catalog.SURFACES))
    sp.add_argument("--precision", type=int, default=None,
                    help="decimal digits for numeric mode (exact if omitted)")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_singular)

    sp = _allow_negative(sub.add_parser("classify", help="automorphism class of a singular point"))
    sp.add_argument("coords", nargs=3, metavar="c")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("verify", help="run the verification reports")
    sp.add_argument("checks", nargs="*", default=["all"],
                    help="check names, or 'all' (default)")
    sp.add_argument("--seed", type=int, default=2)
    sp.add_argument("--samples", type=int, default=None)
    sp.add_argument("--precision", type=int, default=None)
    sp.add_argument("--prime", type=int, default=10007)
    sp.add_argument("--min-points", type=int, default=25)
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("sample", help="sample invariant points to CSV (and a figure)")
    sp.add_argument("--family", default="split-sextics",
                    choices=["split-sextics", "uv-family"])
    sp.add_argument("--count", type=int, default=200)
    sp.add_argument("--seed", type=int, default=2)
    sp.add_argument("--out", help="CSV path (stdout if omitted)")
    sp.add_argument("--fig", help="render a 3D scatter of the invariants to this file")
    sp.set_defaults(func=cmd_sample)

    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and not args.checks:
        args.checks = ["all"]
    try:
        return args.func(args)
    except Genus2Error as exc:
        return _fail(args, exc)


if __name__ == "__main__":
    sys.exit(main())
