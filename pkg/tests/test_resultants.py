import random
from fractions import Fraction

import pytest

from genus2split.errors import DegreeError, ZeroPolynomialError
from genus2split.multipoly import parse_poly
from genus2split.resultants import (
    bareiss_determinant,
    discriminant,
    resultant,
    sylvester_matrix,
)


def _expand(roots, lead):
    # ascending coefficients of lead * prod (x - r)
    coeffs = [lead]
    for r in roots:
        new = [Fraction(0)] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            new[i + 1] += c
            new[i] -= r * c
        coeffs = new
    return coeffs


def test_pinned_small_resultants():
    # Res(x, x - 1) with ascending coefficient lists
    assert resultant([0, 1], [-1, 1]) == -1
    assert resultant([1, 2, 1, 4], [1, 1, 1, 1]) == 16


def test_resultant_vanishes_iff_common_root():
    f = _expand([Fraction(1), Fraction(2)], Fraction(1))
    g = _expand([Fraction(2), Fraction(5)], Fraction(1))
    assert resultant(f, g) == 0
    h = _expand([Fraction(3), Fraction(5)], Fraction(1))
    assert resultant(f, h) != 0


def test_resultant_is_product_of_root_differences():
    rng = random.Random(8)
    for _ in range(10):
        fr = [Fraction(rng.randint(-6, 6)) for _ in range(3)]
        gr = [Fraction(rng.randint(-6, 6)) for _ in range(2)]
        f = _expand(fr, Fraction(2))
        g = _expand(gr, Fraction(3))
        expected = Fraction(2) ** 2 * Fraction(3) ** 3
        for a in fr:
            for b in gr:
                expected *= (a - b)
        assert resultant(f, g) == expected


def test_resultant_antisymmetry_sign():
    rng = random.Random(9)
    for _ in range(10):
        f = [Fraction(rng.randint(-5, 5)) for _ in range(4)]
        g = [Fraction(rng.randint(-5, 5)) for _ in range(4)]
        f[-1] = f[-1] or Fraction(1)
        g[-1] = g[-1] or Fraction(1)
        # deg f = deg g = 3: Res(f,g) = (-1)^9 Res(g,f)
        assert resultant(f, g) == -resultant(g, f)


def test_discriminants():
    assert discriminant([-1, 0, 1]) == 4          # x^2 - 1
    assert discriminant([0, 0, 0, 1]) == 0        # x^3
    # classical cubic formula on a random cubic
    rng = random.Random(10)
    for _ in range(10):
        c = [Fraction(rng.randint(-5, 5)) for _ in range(4)]
        if not c[3]:
            c[3] = Fraction(1)
        c0, c1, c2, c3 = c
        formula = (18 * c3 * c2 * c1 * c0 - 4 * c2 ** 3 * c0 + c2 ** 2 * c1 ** 2
                   - 4 * c3 * c1 ** 3 - 27 * c3 ** 2 * c0 ** 2)
        assert discriminant(c) == formula


def test_discriminant_zero_at_double_root():
    f = _expand([Fraction(2), Fraction(2), Fraction(5)], Fraction(1))
    assert discriminant(f) == 0


def test_multipoly_resultant_eliminates_variable():
    f = parse_poly("x^2 + y^2 - 1", ("x", "y"))
    g = parse_poly("x - y", ("x", "y"))
    r = resultant(f, g, "x")
    # eliminating x from the circle and the diagonal: 2y^2 - 1
    assert r == parse_poly("2 y^2 - 1", ("y",))


def test_bareiss_matches_known_determinant():
    m = [[Fraction(2), Fraction(1)], [Fraction(7), Fraction(4)]]
    assert bareiss_determinant(m) == 1
    # leading zero forces a pivot swap
    m = [[Fraction(0), Fraction(1), Fraction(2)],
         [Fraction(1), Fraction(0), Fraction(3)],
         [Fraction(4), Fraction(-3), Fraction(8)]]
    expected = (0 * (0 * 8 - 3 * -3) - 1 * (1 * 8 - 3 * 4) + 2 * (1 * -3 - 0 * 4))
    assert bareiss_determinant(m) == expected


def test_sylvester_matrix_shape():
    m = sylvester_matrix([1, 2, 3], [4, 5, 6, 7])
    assert len(m) == 5 and all(len(r) == 5 for r in m)


def test_degree_and_zero_errors():
    with pytest.raises(DegreeError):
        resultant([1], [1, 1])
    with pytest.raises(ZeroPolynomialError):
        resultant([0, 0], [1, 1])
    with pytest.raises(DegreeError):
        discriminant([3, 2])
