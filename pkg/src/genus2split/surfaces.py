"""Maps between the parameter spaces and randomized identity checks.

Three coordinate systems describe the same moduli: the curve parameters
(u, v), the cubic-pair invariants (r1, r2), and the absolute invariants
(i1, i2, i3).  This module evaluates the stored closed forms, cross-checks
them against the from-scratch invariant pipeline, and verifies that the
stored mod-5 surface vanishes on the parametrized family.
"""

from __future__ import annotations

import random
from fractions import Fraction

from . import catalog
from .errors import (
    DegenerateParameters,
    EqRUndefined,
    Genus2Error,
    RhoUndefined,
    ThetaUndefined,
)
from .invariants import (
    AbsoluteInvariants,
    absolute_from_sextic,
    curve_from_uv,
    pair_H,
    pair_r1_r2,
    pair_resultant,
    _cubic_disc,
    LAMBDA_D,
    LAMBDA_R,
)
from .scalars import ExtensionField

# The closed-form (r1, r2) expressions and the rational map rho use two
# different classical normalizations of the resultant and discriminant.
# rho expects r1 and r2 rescaled by these fixed constants; the identity
# checks below confirm the constants are the same at every sample point.
RHO_R1_SCALE = Fraction(1, 729)
RHO_R2_SCALE = Fraction(1, 6 ** 8)


def theta(u, v) -> AbsoluteInvariants:
    """Absolute invariants (i1, i2, i3) of the curve with parameters (u, v).

    Raises ThetaUndefined on the denominator loci (v = 0 and the quadratic
    J2 = 0 factor) and DegenerateParameters when the sextic is singular
    (i3 = 0, no genus 2 curve).
    """
    point = {"u": u, "v": v}
    if not v:
        raise ThetaUndefined("v", (u, v))
    if not catalog.THETA_QUAD.evaluate(point):
        raise ThetaUndefined(str(catalog.THETA_QUAD), (u, v))
    vals = tuple(rf.num.evaluate(point) / rf.den.evaluate(point) for rf in catalog.THETA)
    if not vals[2]:
        raise DegenerateParameters(
            f"singular sextic at (u, v) = ({u}, {v}): no associated genus 2 curve (J10 = 0)"
        )
    return AbsoluteInvariants(*vals)


def theta_from_pipeline(u, v) -> AbsoluteInvariants:
    """Same map computed from scratch: build the sextic, take its invariants."""
    sextic, _ = curve_from_uv(u, v)
    return absolute_from_sextic(sextic)


def uv_to_r(u, v):
    """Closed-form pair invariants (r1, r2) of the curve with parameters (u, v)."""
    point = {"u": u, "v": v}
    if not v:
        raise EqRUndefined("v", (u, v))
    if not catalog.EQR_DEN.evaluate(point):
        raise EqRUndefined(str(catalog.EQR_DEN), (u, v))
    if v == 27:
        raise EqRUndefined("v - 27", (u, v))
    return tuple(rf.num.evaluate(point) / rf.den.evaluate(point) for rf in catalog.EQR)


def eqr_to_rho_coordinates(r1, r2):
    """Convert closed-form (r1, r2) values to the normalization rho expects."""
    return (RHO_R1_SCALE * r1, RHO_R2_SCALE * r2)


def rho(r1, r2) -> AbsoluteInvariants:
    """The birational map (r1, r2) -> (i1, i2, i3)."""
    point = {"r1": r1, "r2": r2}
    if not r1:
        raise RhoUndefined("r1", (r1, r2))
    if not catalog.J2_LOCUS.evaluate(point):
        raise RhoUndefined(str(catalog.J2_LOCUS), (r1, r2))
    return AbsoluteInvariants(
        *(rf.num.evaluate(point) / rf.den.evaluate(point) for rf in catalog.RHO)
    )


def surface_eval(name, point):
    """Evaluate a stored surface polynomial at a point (positional coords)."""
    poly = catalog.SURFACES[name]
    if len(point) != len(poly.variables):
        raise ValueError(f"{name} needs {len(poly.variables)} coordinates {poly.variables}")
    return poly.evaluate(dict(zip(poly.variables, point)))


# ---------------------------------------------------------------------------
# randomized identity checks
# ---------------------------------------------------------------------------


def _random_fraction(rng):
    return Fraction(rng.randint(-50, 50), rng.randint(1, 50))


def _report(identity, method, used, requested, skipped, failures, notes=None, examples=None):
    return {
        "identity": identity,
        "method": method,
        "samples": used,
        "requested": requested,
        "skipped": skipped,
        "status": "pass" if used >= max(1, requested // 2) and not failures else "fail",
        "witnesses": failures,
        "examples": examples or [],
        "notes": notes or [],
    }


def _check_theta_consistency(seed, samples):
    rng = random.Random(seed)
    used = skipped = 0
    failures, examples = [], []
    while used < samples and skipped < 50 * samples:
        u, v = _random_fraction(rng), _random_fraction(rng)
        try:
            closed = theta(u, v)
            pipeline = theta_from_pipeline(u, v)
        except Genus2Error:
            skipped += 1
            continue
        used += 1
        if closed.as_tuple() != pipeline.as_tuple():
            failures.append({"point": (str(u), str(v)),
                             "closed": [str(t) for t in closed.as_tuple()],
                             "pipeline": [str(t) for t in pipeline.as_tuple()]})
        elif len(examples) < 2:
            examples.append({"point": (str(u), str(v)),
                             "value": [str(t) for t in closed.as_tuple()]})
    return _report("theta_consistency", "exact rational sampling", used, samples,
                   skipped, failures, examples=examples)


def _check_eqr_consistency(seed, samples):
    rng = random.Random(seed)
    used = skipped = 0
    failures, examples = [], []
    lambda_witness = True
    while used < samples and skipped < 50 * samples:
        u, v = _random_fraction(rng), _random_fraction(rng)
        try:
            closed = uv_to_r(u, v)
            _, pair = curve_from_uv(u, v)
            computed = pair_r1_r2(pair)
        except Genus2Error:
            skipped += 1
            continue
        used += 1
        if closed != computed:
            failures.append({"point": (str(u), str(v)),
                             "closed": [str(t) for t in closed],
                             "pipeline": [str(t) for t in computed]})
            continue
        # re-derive the normalization constants from raw resultant data
        h = pair_H(pair)
        res = pair_resultant(pair)
        dd = _cubic_disc(pair.F) * _cubic_disc(pair.G)
        if h ** 3 / (res * closed[0]) != LAMBDA_R or h ** 4 / (dd * closed[1]) != LAMBDA_D:
            lambda_witness = False
            failures.append({"point": (str(u), str(v)), "reason": "normalization drifted"})
        elif len(examples) < 2:
            examples.append({"point": (str(u), str(v)),
                             "value": [str(t) for t in closed]})
    notes = []
    if lambda_witness and used:
        notes.append(
            f"H^3/(Res * r1) = {LAMBDA_R} and H^4/(D(F)D(G) * r2) = {LAMBDA_D} "
            "held at every sample"
        )
    return _report("eqr_consistency", "exact rational sampling", used, samples,
                   skipped, failures, notes=notes, examples=examples)


def _check_rho_factors_theta(seed, samples):
    rng = random.Random(seed)
    used = skipped = 0
    failures, examples = [], []
    unscaled_differs = False
    while used < samples and skipped < 50 * samples:
        u, v = _random_fraction(rng), _random_fraction(rng)
        try:
            th = theta(u, v)
            r1, r2 = uv_to_r(u, v)
            composed = rho(*eqr_to_rho_coordinates(r1, r2))
        except Genus2Error:
            skipped += 1
            continue
        used += 1
        if composed.as_tuple() != th.as_tuple():
            failures.append({"point": (str(u), str(v)),
                             "theta": [str(t) for t in th.as_tuple()],
                             "rho_of_r": [str(t) for t in composed.as_tuple()]})
            continue
        if not unscaled_differs:
            try:
                raw = rho(r1, r2)
                unscaled_differs = raw.as_tuple() != th.as_tuple()
            except Genus2Error:
                unscaled_differs = True
        if len(examples) < 2:
            examples.append({"point": (str(u), str(v)),
                             "value": [str(t) for t in th.as_tuple()]})
    notes = [
        "rho matches theta only after rescaling (r1, r2) by "
        f"({RHO_R1_SCALE}, {RHO_R2_SCALE}); the two stored forms use different "
        "resultant/discriminant normalizations",
    ]
    if unscaled_differs:
        notes.append("confirmed: without the rescale the composition disagrees with theta")
    sym = i3_symbolic_factorization()
    if sym["status"] != "pass":
        failures.append(sym)
    notes.append("i3 component additionally proved by symbolic cross-multiplication "
                 f"(degree {sym['degree']})")
    return _report("rho_factors_theta",
                   "exact rational sampling + symbolic i3 identity", used, samples,
                   skipped, failures, notes=notes, examples=examples)


def i3_symbolic_factorization():
    """Prove (not sample) that the i3 component of rho composed with the
    rescaled closed-form (r1, r2) equals the i3 component of theta.

    The composition is cross-multiplied into a single polynomial identity
    in (u, v) and compared term by term.
    """
    from .multipoly import RationalFunction

    n1 = RHO_R1_SCALE * catalog.EQR[0].num
    d1 = catalog.EQR[0].den
    n2 = RHO_R2_SCALE * catalog.EQR[1].num
    d2 = catalog.EQR[1].den
    # rho's i3 denominator is r1^2 * L^5 with L the Jacobian locus; compose
    # L first (it is tiny), then raise the result once
    lhat = catalog.J2_LOCUS.substitute({
        "r1": RationalFunction(n1, d1),
        "r2": RationalFunction(n2, d2),
    })
    # composed i3 = c * n2^9 * d1^12 * d2 / (n1^2 * lhat.num^5), where the
    # constant sits in RHO[2].num = c * r2^9
    c = next(iter(catalog.RHO[2].num.terms.values()))
    lhs = c * n2 ** 9 * d1 ** 12 * d2 * catalog.THETA[2].den
    rhs = catalog.THETA[2].num * n1 ** 2 * lhat.num ** 5
    return {
        "identity": "rho_i3_factors_theta_i3",
        "method": "symbolic cross-multiplication",
        "status": "pass" if lhs == rhs else "fail",
        "degree": lhs.total_degree(),
    }


def _check_s3mod5(seed, samples):
    rng = random.Random(seed)
    nums = [rf.num.reduce_mod_p(5) for rf in catalog.THETA]
    dens = [rf.den.reduce_mod_p(5) for rf in catalog.THETA]
    fields = {k: ExtensionField(5, k, seed=k) for k in (1, 2, 3, 4)}
    used = skipped = 0
    failures, examples = [], []
    while used < samples and skipped < 100 * samples:
        field = fields[rng.randint(1, 4)]
        u = field.random_element(rng)
        v = field.random_element(rng)
        point = {"u": u, "v": v}
        dvals = [d.evaluate(point) for d in dens]
        if not all(dvals):
            skipped += 1
            continue
        coords = tuple(n.evaluate(point) / dv for n, dv in zip(nums, dvals))
        value = catalog.S3_MOD5.evaluate(dict(zip(("x", "y", "z"), coords)))
        used += 1
        if value:
            failures.append({"field": repr(field),
                             "point": (repr(u), repr(v)),
                             "value": repr(value)})
        elif len(examples) < 2:
            examples.append({"field": repr(field), "point": (repr(u), repr(v))})
    return _report("s3mod5_vanishes_on_theta",
                   "sampling over GF(5^k), k = 1..4", used, samples,
                   skipped, failures, examples=examples)


def _check_s2_oracle(seed, samples):
    rng = random.Random(seed)
    used = skipped = 0
    failures, examples = [], []
    while used < samples and skipped < 50 * samples:
        a, b = _random_fraction(rng), _random_fraction(rng)
        # even sextics x^6 + a x^4 + b x^2 + 1 split over the quadratic map
        coeffs = (Fraction(1), Fraction(0), b, Fraction(0), a, Fraction(0), Fraction(1))
        try:
            from .invariants import SexticForm
            f = SexticForm(coeffs)
            inv = absolute_from_sextic(f)
        except Genus2Error:
            skipped += 1
            continue
        if not f.is_genus2():
            skipped += 1
            continue
        used += 1
        value = surface_eval("s2", inv.as_tuple())
        if value:
            failures.append({"curve": [str(t) for t in coeffs], "s2": str(value)})
        elif len(examples) < 2:
            examples.append({"curve": [str(t) for t in coeffs]})
    return _report("s2_oracle_membership",
                   "exact invariants of random split sextics", used, samples,
                   skipped, failures, examples=examples)


_CHECKS = {
    "theta_consistency": _check_theta_consistency,
    "eqr_consistency": _check_eqr_consistency,
    "rho_factors_theta": _check_rho_factors_theta,
    "s3mod5_vanishes_on_theta": _check_s3mod5,
    "s2_oracle_membership": _check_s2_oracle,
}


def identity_names():
    return tuple(_CHECKS)


def check_identity(name, seed=2, samples=None):
    """Run one named identity check; returns a JSON-serializable report."""
    if name not in _CHECKS:
        raise ValueError(f"unknown identity {name!r}; choose from {sorted(_CHECKS)}")
    default = 100 if name in ("s3mod5_vanishes_on_theta", "s2_oracle_membership") else 24
    return _CHECKS[name](seed, samples or default)
