import random
from fractions import Fraction

import pytest

from genus2split.errors import DenominatorNotUnit, DomainMismatchError
from genus2split.scalars import (
    ExtensionField,
    GFp,
    QuadExt,
    from_fraction_mod_p,
    parse_scalar,
)


def test_quadext_basic_arithmetic():
    a = QuadExt(1, 2, 5)
    b = QuadExt(3, -1, 5)
    assert a + b == QuadExt(4, 1, 5)
    assert a * b == QuadExt(3 - 10, 6 - 1, 5)
    assert a - a == 0
    assert (a / b) * b == a


def test_quadext_norm_is_multiplicative():
    rng = random.Random(11)
    for _ in range(50):
        a = QuadExt(Fraction(rng.randint(-9, 9)), Fraction(rng.randint(-9, 9)), 5)
        b = QuadExt(Fraction(rng.randint(-9, 9)), Fraction(rng.randint(-9, 9)), 5)
        assert (a * b).norm() == a.norm() * b.norm()


def test_quadext_conjugate_and_norm():
    a = QuadExt(2, 3, -1)
    assert a * a.conjugate() == QuadExt(a.norm())
    assert a.conjugate().conjugate() == a


def test_quadext_mixed_discriminants_rejected():
    with pytest.raises(DomainMismatchError):
        QuadExt(1, 1, 5) + QuadExt(1, 1, -1)


def test_quadext_rational_coercion():
    a = QuadExt(Fraction(3, 4))
    assert a.is_rational()
    assert a.as_fraction() == Fraction(3, 4)
    assert a + Fraction(1, 4) == 1
    with pytest.raises(ValueError):
        QuadExt(1, 1, 5).as_fraction()


def test_gfp_field_axioms():
    p = 101
    rng = random.Random(5)
    for _ in range(50):
        a = GFp(rng.randrange(1, p), p)
        b = GFp(rng.randrange(p), p)
        assert a * (1 / a) == GFp(1, p)
        assert (a + b) - b == a
        assert a * b == b * a


def test_from_fraction_mod_p():
    assert from_fraction_mod_p(Fraction(1, 2), 5) == GFp(3, 5)
    with pytest.raises(DenominatorNotUnit):
        from_fraction_mod_p(Fraction(1, 5), 5)


def test_extension_field_is_a_field():
    F = ExtensionField(5, 3, seed=1)
    rng = random.Random(7)
    for _ in range(30):
        a = F.random_element(rng)
        if not a:
            continue
        assert a * a.inverse() == F.one()
        # Frobenius: x^(p^k) = x in GF(p^k)
        assert a ** (5 ** 3) == a


def test_extension_field_sqrt_roundtrip():
    F = ExtensionField(10007, 2, seed=2)
    rng = random.Random(3)
    for _ in range(10):
        a = F.random_element(rng)
        sq = a * a
        r = F.sqrt(sq)
        assert r * r == sq
    # -1 is a non-residue mod 10007 but has a root in GF(10007^2)
    i = F.sqrt(F(-1))
    assert i * i == F(-1)


def test_extension_field_sqrt_rejects_nonsquares():
    F = ExtensionField(7, 1, seed=0)
    squares = {(F(a) * F(a)).coeffs for a in range(7)}
    non = next(F(a) for a in range(7) if F(a).coeffs not in squares)
    with pytest.raises(ValueError):
        F.sqrt(non)


def test_parse_scalar_rationals():
    assert parse_scalar("3/4") == Fraction(3, 4)
    assert parse_scalar("-15") == Fraction(-15)


def test_parse_scalar_quadratic():
    v = parse_scalar("-15/8+35/8*sqrt(5)")
    assert v == QuadExt(Fraction(-15, 8), Fraction(35, 8), 5)
    v = parse_scalar("27-77/2*sqrt(-1)")
    assert v == QuadExt(27, Fraction(-77, 2), -1)
    v = parse_scalar("3/4*sqrt(5)")
    assert v == QuadExt(0, Fraction(3, 4), 5)
    v = parse_scalar("sqrt(-1)")
    assert v == QuadExt(0, 1, -1)
