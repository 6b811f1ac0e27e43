from fractions import Fraction

import pytest

from genus2split import catalog
from genus2split.errors import (
    DegenerateParameters,
    EqRUndefined,
    RhoUndefined,
    ThetaUndefined,
)
from genus2split.surfaces import (
    RHO_R1_SCALE,
    RHO_R2_SCALE,
    check_identity,
    eqr_to_rho_coordinates,
    i3_symbolic_factorization,
    identity_names,
    rho,
    surface_eval,
    theta,
    theta_from_pipeline,
    uv_to_r,
)


def test_theta_matches_pipeline_at_a_point():
    u, v = Fraction(1), Fraction(1)
    assert theta(u, v).as_tuple() == theta_from_pipeline(u, v).as_tuple()


def test_theta_at_known_exceptional_point():
    inv = theta(Fraction(25, 2), Fraction(250, 9))
    assert inv.as_tuple() == (Fraction(-8019, 20), Fraction(-1240029, 200),
                              Fraction(-531441, 100000))


def test_theta_undefined_loci():
    with pytest.raises(ThetaUndefined):
        theta(Fraction(1), Fraction(0))
    with pytest.raises(DegenerateParameters):
        theta(Fraction(-7, 2), Fraction(2))


def test_uv_to_r_pinned_values():
    assert uv_to_r(Fraction(1), Fraction(1)) == (Fraction(-3375, 2),
                                                 Fraction(405000, 13))
    with pytest.raises(EqRUndefined):
        uv_to_r(Fraction(1), Fraction(27))
    with pytest.raises(EqRUndefined):
        uv_to_r(Fraction(1), Fraction(0))


def test_rho_hits_the_isolated_singular_images():
    for r_point, expected in zip(catalog.R1R2_POINTS, catalog.T3_POINTS):
        assert rho(*r_point).as_tuple() == expected


def test_rho_undefined_on_r1_zero():
    with pytest.raises(RhoUndefined):
        rho(Fraction(0), Fraction(1))


def test_conversion_constants():
    assert eqr_to_rho_coordinates(Fraction(729), Fraction(1679616)) == (1, 1)
    assert (RHO_R1_SCALE, RHO_R2_SCALE) == (Fraction(1, 729), Fraction(1, 1679616))


def test_rho_composition_equals_theta_pointwise():
    u, v = Fraction(3), Fraction(5)
    r = uv_to_r(u, v)
    assert rho(*eqr_to_rho_coordinates(*r)).as_tuple() == theta(u, v).as_tuple()
    # and the unscaled values do not satisfy the identity
    assert rho(*r).as_tuple() != theta(u, v).as_tuple()


def test_surface_eval_on_known_zeros():
    assert surface_eval("s2", catalog.C3_SURFACE_POINT) == 0
    assert surface_eval("c1", (Fraction(0), Fraction(729, 50))) == 0
    assert surface_eval("j2locus", catalog.R1R2_POINTS[0]) != 0


def test_surface_eval_arity_check():
    with pytest.raises(ValueError):
        surface_eval("s2", (Fraction(1), Fraction(2)))


def test_identity_registry():
    names = identity_names()
    assert "theta_consistency" in names and "s2_oracle_membership" in names
    with pytest.raises(ValueError):
        check_identity("no_such_identity")


def test_identity_checks_pass_small_samples():
    for name in ("theta_consistency", "eqr_consistency", "s2_oracle_membership"):
        report = check_identity(name, seed=7, samples=8)
        assert report["status"] == "pass", report
        assert report["samples"] == 8
        assert not report["witnesses"]


def test_s3_mod5_membership_small_sample():
    report = check_identity("s3mod5_vanishes_on_theta", seed=7, samples=20)
    assert report["status"] == "pass", report


def test_symbolic_i3_identity():
    report = i3_symbolic_factorization()
    assert report["status"] == "pass"
    assert report["degree"] == 98


def test_reports_are_seeded_and_reproducible():
    a = check_identity("theta_consistency", seed=3, samples=5)
    b = check_identity("theta_consistency", seed=3, samples=5)
    assert a == b
