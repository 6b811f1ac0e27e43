"""Invariants of genus 2 sextics and of unordered pairs of cubics.

The J2, J4, J6 coefficient tables in _igusa_data.py come from the
root-difference definitions (see tools/derive_igusa.py); J10 is the sextic
discriminant.  H, r1, r2, r3 are the binary-cubic pair invariants, with the
normalization constants LAMBDA_R and LAMBDA_D pinned empirically so that
the (u,v) curve family reproduces its closed-form (r1, r2) expressions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ._igusa_data import J2_TERMS, J4_TERMS, J6_TERMS
from .errors import (
    DegenerateParameters,
    DiscriminantVanishes,
    J2Vanishes,
    ResultantVanishes,
    ZeroPolynomialError,
)
from .resultants import bareiss_determinant, sylvester_matrix
from .scalars import QuadExt

# Pinned constants relating the pair invariants' resultant/discriminant
# normalization to the Sylvester conventions: r1 = H^3 / (LAMBDA_R * Res),
# r2 = H^4 / (LAMBDA_D * D(F) * D(G)).
LAMBDA_R = Fraction(-1, 729)           # -3^-6
LAMBDA_D = Fraction(1, 6 ** 8)


@dataclass(frozen=True)
class SexticForm:
    """Coefficients a0..a6 of a6*X^6 + ... + a0, ascending."""

    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != 7:
            raise ValueError("a sextic form needs 7 coefficients a0..a6")
        if not self.coeffs[6] and not self.coeffs[5]:
            raise ZeroPolynomialError("degree must be 5 or 6 (a6, a5 not both zero)")

    @property
    def degree(self):
        return 6 if self.coeffs[6] else 5

    def discriminant(self):
        return _sextic_disc(self.coeffs)

    def is_genus2(self):
        return bool(self.discriminant() != 0)

    def evaluate(self, x):
        v = 0
        for c in reversed(self.coeffs):
            v = v * x + c
        return v


@dataclass(frozen=True)
class CubicPair:
    """Two cubics F, G, each as ascending coefficients (a0..a3)."""

    F: tuple
    G: tuple

    def __post_init__(self):
        for c in (self.F, self.G):
            if len(c) != 4:
                raise ValueError("cubic coefficients a0..a3 expected")

    def product_sextic(self):
        prod = [Fraction(0)] * 7
        for i, x in enumerate(self.F):
            for j, y in enumerate(self.G):
                prod[i + j] = prod[i + j] + x * y
        return SexticForm(tuple(prod))


@dataclass(frozen=True)
class IgusaInvariants:
    J2: object
    J4: object
    J6: object
    J10: object

    def as_dict(self):
        return {"J2": self.J2, "J4": self.J4, "J6": self.J6, "J10": self.J10}


@dataclass(frozen=True)
class AbsoluteInvariants:
    i1: object
    i2: object
    i3: object

    def as_tuple(self):
        return (self.i1, self.i2, self.i3)

    def as_dict(self):
        return {"i1": self.i1, "i2": self.i2, "i3": self.i3}


@dataclass(frozen=True)
class CubicPairInvariants:
    H: object
    r1: object
    r2: object
    r3: object


def _table_eval(table, a):
    total = None
    for exp, coeff in table.items():
        t = coeff
        for x, e in zip(a, exp):
            if e:
                t = t * x ** e
        total = t if total is None else total + t
    return total


def _cubic_disc(c):
    """Classical discriminant of c3*x^3 + ... + c0, ascending coefficients."""
    c0, c1, c2, c3 = c
    return (
        18 * c3 * c2 * c1 * c0
        - 4 * c2 ** 3 * c0
        + c2 ** 2 * c1 ** 2
        - 4 * c3 * c1 ** 3
        - 27 * c3 ** 2 * c0 ** 2
    )


def _quintic_disc(c):
    coeffs = list(c)
    deriv = [coeffs[i] * i for i in range(1, 6)]
    res = bareiss_determinant(sylvester_matrix(coeffs, deriv))
    # (-1)^(5*4/2) = +1
    return res / coeffs[-1]


def _sextic_disc(a):
    if a[6]:
        coeffs = list(a)
        deriv = [coeffs[i] * i for i in range(1, 7)]
        res = bareiss_determinant(sylvester_matrix(coeffs, deriv))
        # (-1)^(6*5/2) = -1
        return -res / a[6]
    # root at infinity: disc of the binary sextic is a5^2 * disc(quintic)
    return a[5] ** 2 * _quintic_disc(a[:6])


def igusa_from_sextic(f: SexticForm) -> IgusaInvariants:
    a = f.coeffs
    return IgusaInvariants(
        J2=_table_eval(J2_TERMS, a),
        J4=_table_eval(J4_TERMS, a),
        J6=_table_eval(J6_TERMS, a),
        J10=_sextic_disc(a),
    )


def absolute_from_igusa(J: IgusaInvariants) -> AbsoluteInvariants:
    if not J.J2:
        raise J2Vanishes("absolute invariants undefined on the J2 = 0 stratum")
    J2 = J.J2
    return AbsoluteInvariants(
        i1=144 * J.J4 / J2 ** 2,
        i2=-1728 * (J2 * J.J4 - 3 * J.J6) / J2 ** 3,
        i3=486 * J.J10 / J2 ** 5,
    )


def absolute_from_sextic(f: SexticForm) -> AbsoluteInvariants:
    return absolute_from_igusa(igusa_from_sextic(f))


def pair_H(pair: CubicPair):
    a0, a1, a2, a3 = pair.F
    b0, b1, b2, b3 = pair.G
    return a3 * b0 - Fraction(1, 3) * a2 * b1 + Fraction(1, 3) * a1 * b2 - a0 * b3


def pair_resultant(pair: CubicPair):
    return bareiss_determinant(sylvester_matrix(list(pair.F), list(pair.G)))


def pair_r1_r2(pair: CubicPair):
    res = pair_resultant(pair)
    if not res:
        raise ResultantVanishes("cubics share a root")
    dF = _cubic_disc(pair.F)
    dG = _cubic_disc(pair.G)
    if not dF or not dG:
        raise DiscriminantVanishes("a cubic factor has a repeated root")
    h = pair_H(pair)
    r1 = h ** 3 / (LAMBDA_R * res)
    r2 = h ** 4 / (LAMBDA_D * dF * dG)
    return r1, r2


def pair_r3(pair: CubicPair):
    J = igusa_from_sextic(pair.product_sextic())
    if not J.J2:
        raise J2Vanishes("r3 undefined: J2 of the product sextic vanishes")
    return pair_H(pair) ** 2 / J.J2


def pair_invariants(pair: CubicPair) -> CubicPairInvariants:
    r1, r2 = pair_r1_r2(pair)
    return CubicPairInvariants(H=pair_H(pair), r1=r1, r2=r2, r3=pair_r3(pair))


def curve_from_uv(u, v):
    """The two-parameter genus 2 family y^2 = F(x) * G(x) with
    F = 4x^3 v^2 + x^2 v^2 + 2x v + 1 and G = x^3 v^2 + x^2 u v + x v + 1."""
    if not v:
        raise DegenerateParameters("v = 0 degenerates the curve family")
    one = _one_like(u, v)
    F = (one, 2 * v * one, v * v * one, 4 * v * v * one)
    G = (one, v * one, u * v * one, v * v * one)
    pair = CubicPair(F=F, G=G)
    return pair.product_sextic(), pair


def _one_like(*values):
    if any(isinstance(x, QuadExt) for x in values):
        return QuadExt(1)
    return Fraction(1)
