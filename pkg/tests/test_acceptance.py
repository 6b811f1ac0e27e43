"""Acceptance gate: ten independently runnable criteria, each printing one
pass/fail line.  Run with `pytest tests/test_acceptance.py -v -s`."""

from fractions import Fraction

from genus2split import catalog
from genus2split.singular import (
    gradient,
    sample_component_singularity,
    verify_c3_system,
    verify_minors_on_iso1,
    verify_t3_points,
    verify_table1,
)
from genus2split.surfaces import check_identity


def _line(number, ok, description):
    print(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {description}")
    assert ok, f"criterion {number} failed: {description}"


def test_criterion_1_theta_consistency():
    report = check_identity("theta_consistency", seed=2, samples=100)
    ok = report["status"] == "pass" and report["samples"] == 100 and \
        not report["witnesses"]
    _line(1, ok, "closed-form (u,v) invariants equal the exact pipeline at "
                 "100 seeded rational points, zero tolerance")


def test_criterion_2_eqr_consistency():
    report = check_identity("eqr_consistency", seed=2, samples=100)
    constant_note = any("held at every sample" in n for n in report["notes"])
    ok = report["status"] == "pass" and report["samples"] == 100 and constant_note
    _line(2, ok, "closed-form (r1,r2) equal the cubic-pair pipeline at 100 "
                 "points with fixed normalization constants")


def test_criterion_3_rho_factorization():
    report = check_identity("rho_factors_theta", seed=2, samples=100)
    symbolic_note = any("symbolic cross-multiplication" in n for n in report["notes"])
    ok = report["status"] == "pass" and report["samples"] == 100 and symbolic_note
    _line(3, ok, "rho composed with rescaled (r1,r2) equals theta at 100 "
                 "points, i3 component proved symbolically")


def test_criterion_4_s3_mod5_membership():
    report = check_identity("s3mod5_vanishes_on_theta", seed=2, samples=100)
    ok = report["status"] == "pass" and report["samples"] == 100
    _line(4, ok, "the stored mod-5 surface vanishes on 100 parametrized "
                 "points over GF(5^k), k <= 4")


def test_criterion_5_s2_oracle_membership():
    report = check_identity("s2_oracle_membership", seed=2, samples=50)
    ok = report["status"] == "pass" and report["samples"] == 50
    _line(5, ok, "the degree-2 surface vanishes exactly on 50 random curves "
                 "y^2 = x^6 + a x^4 + b x^2 + 1")


def test_criterion_6_singular_point_exactness():
    exact = gradient("s2", catalog.C3_SURFACE_POINT)
    c1 = sample_component_singularity("c1", samples=20, precision=60, seed=2)
    c2 = sample_component_singularity("c2", samples=20, precision=60, seed=2)
    ok = exact.is_singular and c1["status"] == "pass" and c2["status"] == "pass"
    _line(6, ok, "surface and gradient vanish exactly at the stated singular "
                 "point and to < 1e-30 on 20 sampled points of each component")


def test_criterion_7_table_reproduction():
    report = verify_table1()
    rows = [r for r in report["rows"] if "jacobian_minors_vanish" in r]
    degenerate = next(r for r in report["rows"] if r.get("degenerate"))
    ok = (report["status"] != "fail"
          and len(rows) == 6
          and all(r["jacobian_minors_vanish"] for r in rows)
          and all(r["computed_group"] == r["stated_group"] for r in rows)
          and Fraction(degenerate["sextic_discriminant"]) == 0
          and report["i3_sign_discrepancies"] == 1)
    _line(7, ok, "all six exceptional rows reproduce (with documented "
                 "coordinate corrections), the degenerate row has zero "
                 "discriminant, and the i3 sign conflict is exactly one "
                 "discrepancy")


def test_criterion_8_isolated_r_points():
    report = verify_t3_points()
    ok = (report["status"] != "fail"
          and all(all(Fraction(s) == 0 for s in row["system_residuals"])
                  for row in report["points"])
          and all(row["image_matches_stated"] for row in report["points"])
          and all(row["classification"]["is_singular"] for row in report["points"])
          and report["group_multiset_matches"])
    _line(8, ok, "the three (r1,r2) points satisfy the full minor system, map "
                 "onto the three stated invariant triples, are singular "
                 "surface points, and recover the group multiset {D4, D4, D6}")


def test_criterion_9_minor_vanishing_mod_p():
    report = verify_minors_on_iso1(prime=10007, min_points=25, seed=2,
                                   off_curve=25)
    ok = (report["status"] == "pass"
          and report["curve_points_checked"] >= 25
          and not report["curve_failures"]
          and report["off_curve_checked"] == 25
          and report["off_curve_nonzero"] == 25)
    _line(9, ok, "all theta Jacobian minors vanish at >= 25 GF(10007) points "
                 "of the coincident-subcover curve and at none of 25 "
                 "off-curve points")


def test_criterion_10_c3_adjudication():
    report = verify_c3_system()
    kinds = {d["kind"] for d in report["discrepancies"]}
    first_point_cubic_flagged = any(
        d["kind"] == "c3-cubic-residual" and d["point"][0] == "0"
        for d in report["discrepancies"])
    lifts = [bool(row["lift"]) and row["lift"]["is_singular"]
             for row in report["points"]]
    ok = (report["status"] == "discrepancy"
          and first_point_cubic_flagged
          and report["surface_point_singular"]
          and report["surface_point_matches_lift"]
          and lifts[0] and not any(lifts[1:])
          and "c3-system-residual" in kinds)
    _line(10, ok, "exact residuals reported for all three stated component "
                  "points, the cubic inconsistency flagged, and only the "
                  "first point's lift lies on the surface")
