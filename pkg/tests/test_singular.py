from fractions import Fraction

import pytest

from genus2split import catalog
from genus2split.errors import InsufficientPoints
from genus2split.singular import (
    classify_automorphism,
    gradient,
    sample_component_singularity,
    verify_c3_system,
    verify_minors_on_iso1,
    verify_t3_points,
    verify_table1,
    z_from_xy,
)
from genus2split.surfaces import theta


def test_exact_singular_point():
    report = gradient("s2", catalog.C3_SURFACE_POINT)
    assert report.mode == "exact"
    assert report.value == 0
    assert all(g == 0 for g in report.gradient)
    assert report.is_singular


def test_numeric_gradient_agrees():
    report = gradient("s2", catalog.C3_SURFACE_POINT, precision=60)
    assert report.mode == "numeric"
    assert report.is_singular


def test_generic_surface_point_is_not_singular():
    # a split curve gives a surface point, but a generic one
    from genus2split.invariants import SexticForm, absolute_from_sextic

    inv = absolute_from_sextic(SexticForm((1, 0, 3, 0, 2, 0, 1)))
    report = gradient("s2", inv.as_tuple())
    assert report.value == 0
    assert not report.is_singular


def test_z_from_xy_recovers_the_stated_lift():
    x, y, z = catalog.C3_SURFACE_POINT
    assert z_from_xy(x, y) == z


def test_classification_of_the_three_images():
    groups = [classify_automorphism(p).group for p in catalog.T3_POINTS]
    assert groups == ["D4", "D6", "D4"]
    for p in catalog.T3_POINTS:
        assert classify_automorphism(p).is_singular


def test_classification_generic():
    from genus2split.invariants import SexticForm, absolute_from_sextic

    inv = absolute_from_sextic(SexticForm((1, 0, 3, 0, 2, 0, 1)))
    result = classify_automorphism(inv.as_tuple())
    assert result.group == "generic"


def test_verify_c3_system_report():
    report = verify_c3_system()
    assert report["status"] == "discrepancy"
    assert report["surface_point_singular"]
    assert report["surface_point_matches_lift"]
    kinds = {d["kind"] for d in report["discrepancies"]}
    assert "c3-cubic-residual" in kinds
    assert "c3-system-residual" in kinds
    # only the first listed point lifts onto the surface singular locus
    flags = [bool(row["lift"]) and row["lift"]["is_singular"]
             for row in report["points"]]
    assert flags[0] and not any(flags[1:])


def test_verify_t3_points_report():
    report = verify_t3_points()
    assert report["status"] == "discrepancy"
    assert report["group_multiset_matches"]
    assert report["computed_groups"] == ["D4", "D6", "D4"]
    for row in report["points"]:
        assert all(Fraction(s) == 0 for s in row["system_residuals"])
        assert row["image_matches_stated"]
    kinds = [d["kind"] for d in report["discrepancies"]]
    assert kinds == ["t3-group-order"]


def test_verify_table1_report():
    report = verify_table1()
    assert report["status"] == "discrepancy"
    assert report["i3_sign_discrepancies"] == 1
    rows = [r for r in report["rows"] if "jacobian_minors_vanish" in r]
    assert len(rows) == 6
    assert all(r["jacobian_minors_vanish"] for r in rows)
    assert all(r["computed_group"] == r["stated_group"] for r in rows)
    typo_rows = {d["row"] for d in report["discrepancies"] if d["kind"] == "uv-typo"}
    assert typo_rows == {1, 5, 6}


def test_corrected_coordinates_reproduce_rows():
    for rec in catalog.TABLE1:
        if rec.corrected_uv is None or rec.expected_invariants is None:
            continue
        inv = theta(*rec.corrected_uv).as_tuple()
        vals = tuple(c.as_fraction() if hasattr(c, "as_fraction") else c
                     for c in inv)
        assert vals[:2] == rec.expected_invariants[:2]
        assert abs(vals[2]) == abs(rec.expected_invariants[2])


def test_minors_on_iso1_small_prime():
    report = verify_minors_on_iso1(prime=1009, min_points=8, seed=3, off_curve=5)
    assert report["status"] == "pass"
    assert report["curve_points_checked"] >= 8
    assert report["off_curve_nonzero"] == report["off_curve_checked"]


def test_minors_insufficient_points():
    with pytest.raises(InsufficientPoints):
        verify_minors_on_iso1(prime=5, min_points=100)


def test_component_sampling_exact_and_numeric():
    for component in ("c1", "c2"):
        report = sample_component_singularity(component, samples=6,
                                              precision=50, seed=4)
        assert report["status"] == "pass", report
        assert report["exact_samples"] + report["numeric_samples"] == 6
