"""Stored surface equations, parametrizations, and special points.

Every polynomial here is transcribed once, line for line as displayed in
the source material, and parsed by parse_poly; no constant is retyped at a
second site.  The verification suite (surfaces.check_identity and the
singular-locus reports) guards these transcriptions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .multipoly import MultiPoly, RationalFunction, parse_poly
from .scalars import QuadExt

XYZ = ("x", "y", "z")
UV = ("u", "v")
RR = ("r1", "r2")


# ---------------------------------------------------------------------------
# the (2,2)-split surface in the absolute invariants (x, y, z) = (i1, i2, i3)
# ---------------------------------------------------------------------------

S2 = parse_poly(
    """
    - 27 x^6 - 9459597312000 z^2 x^2 + 20639121408000 z^2 y + 111451255603200 z^2 x - 240734712102912 z^2
    - 55240704 z x^4 - 18 y^2 x^4 - 8294400 z y^2 x^2 - 47278080 z y x^3 - 264180754022400000 z^3
    - 2866544640000 z^2 y x + 2 x^6 y - 4 x^3 y^3 + 9 x^7 + 331776 z x^5 + 107495424 z y x^2 - 27 y^4 + 9 x y^4
    - 52254720 z y^2 x + 2 y^5 + 161243136 z y^2 + 161243136 z x^3 - 12441600 z y^3 + 54 x^3 y^2
    """,
    XYZ,
)

# z-elimination from the gradient system: z = -(1/82944) * phi1 / phi2
Z_SCALE = Fraction(-1, 82944)

PHI1 = parse_poly(
    """
    104976 y^2 + 5211 x^5 - 48600 y^2 x + 69984 y x^2 + 3375 y x^4 + 450 x^3 y^2
    - 50544 x^4 - 675 x^2 y^2 + 104976 x^3 + 2025 x y^3 - 10800 y^3 + 20 x^6 + 250 y^4
    - 37800 x^3 y
    """,
    ("x", "y"),
)

PHI2 = parse_poly(
    """
    1250 y x^2 - 121500 x y - 3779136 - 359100 x^2 - 11250 y^2 + 6375 x^3
    + 421200 y + 2274480 x
    """,
    ("x", "y"),
)

# irreducible components of the singular locus of S2
C1 = parse_poly("100 y^2 - 1458 y + 540 x y - 243 x^2 + 80 x^3", ("x", "y"))
C2 = parse_poly("3888 x - 1188 x^2 + 5 x^3 + 432 y - 360 x y - 25 y^2", ("x", "y"))

# the two-equation component C3, its y-elimination, and the residual cubic
C3_SYSTEM = (
    parse_poly(
        "50 x^4 - 7515 x^3 - 825 y x^2 + 20412 x^2 - 23490 x y - 4050 y^2 + 52488 y",
        ("x", "y"),
    ),
    parse_poly(
        "125 y^2 - 1620 y + 1125 x y - 5832 x + 1890 x^2 + 25 x^3",
        ("x", "y"),
    ),
)
# y = (1/75) * C3_Y_NUM / C3_Y_DEN on the C3 component
C3_Y_NUM = parse_poly("408240 x - 33525 x^2 - 944784 + 250 x^3", ("x",))
C3_Y_DEN = parse_poly("- 864 + 55 x", ("x",))
C3_Y_SCALE = Fraction(1, 75)
C3_CUBIC = parse_poly("125 x^3 - 9450 x^2 + 247860 x - 944784", ("x",))

C3_POINTS = (
    (Fraction(0), Fraction(729, 50)),
    (Fraction(81, 20), Fraction(-729, 200)),
    (Fraction(-36, 5), Fraction(1512, 25)),
)
# the lift of the first C3 point, claimed to be the only one on the surface
C3_SURFACE_POINT = (Fraction(0), Fraction(729, 50), Fraction(729, 12800000))


# ---------------------------------------------------------------------------
# the (3,3)-split surface mod 5
# ---------------------------------------------------------------------------

S3_MOD5 = parse_poly(
    """
    x^20 + 3 x^19 + 3 x^18 y + 4 x^17 y^2 + 3 x^18 + 4 x^17 z + 2 x^16 y^2 + 2 x^16 y z + 2 x^15 y^3 + 4 x^16 z + 2 x^15 y^2
    + 4 x^15 y z + x^15 z^2 + x^13 y^3 z + 3 x^14 y z + x^13 y^2 z + x^13 y z^2 + 4 x^12 y^3 z + 4 x^12 y^2 z^2 + x^11 y^4 z + x^10 y^5 z
    + 4 x^13 z^2 + x^12 y^2 z + 4 x^12 z^3 + 3 x^11 y^3 z + 3 x^11 y^2 z^2 + 2 x^11 y z^3 + 4 x^10 y^4 z + 2 x^10 y^3 z^2
    + 2 x^9 y^5 z + 2 x^9 y^4 z^2 + 2 x^8 y^6 z + x^7 y^7 z + 4 x^5 y^10 + 3 x^12 z^2 + 3 x^11 y z^2 + 3 x^11 z^3 + 4 x^10 y z^3 + 4 x^9 y^4 z
    + 3 x^9 y^3 z^2 + 2 x^9 y^2 z^3 + 3 x^8 y^5 z + 4 x^8 y^4 z^2 + 3 x^8 y^3 z^3 + 2 x^7 y^6 z + 2 x^7 y^5 z^2 + 3 x^5 y^8 z + 2 x^4 y^10 + x^4 y^9 z
    + 2 x^3 y^11 + x^2 y^12 + 2 x^10 z^3 + 3 x^9 y^2 z^2 + 4 x^9 y z^3 + x^9 z^4 + 4 x^8 y^3 z^2 + 4 x^8 y^2 z^3 + 2 x^8 y z^4 + 3 x^7 y^4 z^2
    + 2 x^6 y^6 z + 4 x^6 y^5 z^2 + 2 x^6 y^4 z^3 + 3 x^5 y^7 z + x^5 y^5 z^3 + 4 x^4 y^7 z^2 + 2 x^3 y^10 + 3 x^3 y^9 z + 4 x^3 y^8 z^2 + 3 x y^12
    + 4 x y^11 z + 3 y^13 + 4 x^9 z^3 + x^8 y z^3 + 3 x^8 z^4 + 2 x^7 y^2 z^3 + 2 x^7 y z^4 + 2 x^7 z^5 + x^6 y^4 z^2 + x^6 y^3 z^3 + 3 x^6 y^2 z^4
    + x^6 y z^5 + 4 x^5 y^5 z^2 + x^5 y^4 z^3 + x^5 y^3 z^4 + x^4 y^6 z^2 + 2 x^4 y^5 z^3 + x^4 y^4 z^4 + 3 x^3 y^6 z^3 + 3 x^2 y^9 z + 3 x^2 y^8 z^2
    + 4 x^2 y^7 z^3 + 4 x y^10 z + 3 y^12 + 2 y^11 z + x^7 z^4 + x^6 y^2 z^3 + 3 x^6 y z^4 + 3 x^6 z^5 + 4 x^5 y^3 z^3 + x^5 y^2 z^4 + 3 x^5 y z^5
    + 3 x^5 z^6 + 2 x^4 y^4 z^3 + 4 x^4 y^3 z^4 + x^4 y^2 z^5 + 4 x^3 y^4 z^4 + 3 x^3 y^3 z^5 + 2 x^2 y^7 z^2 + 4 x^2 y^6 z^3 + 2 x^2 y^5 z^4
    + 2 x y^8 z^2 + 3 x y^7 z^3 + 3 y^10 z + 3 y^9 z^2 + 2 x^6 z^4 + 3 x^5 y z^4 + 3 x^5 z^5 + x^4 y^2 z^4 + 3 x^4 z^6 + 2 x^3 y^3 z^4
    + 3 x^3 y^2 z^5 + 3 x^2 y^5 z^3 + 3 x^2 y^4 z^4 + 3 x y^6 z^3 + 2 x y^5 z^4 + 2 x y^4 z^5 + 2 y^7 z^3 + y^5 z^5 + 2 x^4 z^5 + x^3 y z^5
    + 3 x^3 z^6 + 2 x^2 y^3 z^4 + 2 x^2 y^2 z^5 + 2 x^2 y z^6 + 2 x y^4 z^4 + 3 y^5 z^4 + 4 y^4 z^5 + 2 x^3 z^5 + 3 x^2 y z^5 + 4 x^2 z^6 + x y^2 z^5
    + 3 y^2 z^6 + x z^6 + 3 y^2 z^5 + 4 z^7 + 3 z^6
    """,
    XYZ,
).reduce_mod_p(5)


# ---------------------------------------------------------------------------
# the (u, v) parametrization of the (3,3)-split surface
# ---------------------------------------------------------------------------

# the quadratic denominator factor; its vanishing is the J2 = 0 stratum
THETA_QUAD = parse_poly("- 405 + 252 u + 4 u^2 - 54 v - 12 u v + 3 v^2", UV)
U_VAR = MultiPoly.var("u", UV)
V_VAR = MultiPoly.var("v", UV)

_TH1_NUM = parse_poly(
    """
    1188 u^3 - 8424 u v + u^4 v - 24 u^4 + 14580 v - 66 u^3 v + 138 u v^2
    + 297 u^2 v + 945 v^2 - 36 v^3 + 9 u^2 v^2
    """,
    UV,
)
_TH2_NUM = parse_poly(
    """
    - 81 v^3 u^4 + 2 u^6 v^2 + 234 u^5 v^2 + 3162402 u v^2 - 21384 v^3 u + 26676 v^4 - 473121 v^3
    - 72 u^6 v - 5832 v^4 u + 14850 v^3 u^2 - 72 v^3 u^3 + 324 v^4 u^2 - 650268 u^3 v - 5940 u^3 v^2
    - 3346110 v^2 + 432 u^6 - 1350 u^4 v^2 + 136080 u^4 v - 7020 u^5 v - 307638 u^2 v^2
    """,
    UV,
)
# the cubic factor of i3's numerator
THETA_CUBIC = parse_poly("4 u^3 - u^2 v - 18 u v + 4 v^2 + 27 v", UV)

THETA = (
    RationalFunction(144 * _TH1_NUM, V_VAR * THETA_QUAD ** 2),
    RationalFunction(-864 * _TH2_NUM, V_VAR ** 2 * THETA_QUAD ** 3),
    RationalFunction(-243 * (V_VAR - 27) * THETA_CUBIC ** 3, V_VAR ** 3 * THETA_QUAD ** 5),
)

# closed forms of the pair invariants (r1, r2) on the same family
EQR_COMMON = parse_poly("v - 9 - 2 u", UV)
EQR_DEN = parse_poly("4 v^2 - 18 u v + 27 v - u^2 v + 4 u^3", UV)
EQR = (
    RationalFunction(27 * V_VAR * EQR_COMMON ** 3, EQR_DEN),
    RationalFunction(-1296 * V_VAR * EQR_COMMON ** 4, (V_VAR - 27) * EQR_DEN),
)


# ---------------------------------------------------------------------------
# the (r1, r2) birational parametrization
# ---------------------------------------------------------------------------

R1_VAR = MultiPoly.var("r1", RR)
R2_VAR = MultiPoly.var("r2", RR)

# vanishing locus of the Jacobian determinant of rho; also the J2 = 0 case
J2_LOCUS = parse_poly("- 1152 r2^2 + 96 r1 r2 + r1^2", RR)

_RHO1_NUM = parse_poly(
    """
    13824 r1^3 r2^2 + 442368 r1^2 r2^3 + 5308416 r1 r2^4 + 192 r1^4 r2 + r1^5
    + 786432 r1 r2^3 + 9437184 r2^4
    """,
    RR,
)
_RHO2_NUM = parse_poly(
    """
    79626240 r1^4 r2^4 - 4076863488 r1^2 r2^5 + 34560 r1^6 r2^2
    + 12230590464 r1^2 r2^6 + 32614907904 r1 r2^6 + 14495514624 r2^6 + 288 r1^7 r2 + 2211840 r1^5 r2^3
    + r1^8 - 212336640 r1^3 r2^4 + 1528823808 r1^3 r2^5 - 2359296 r1^4 r2^3
    """,
    RR,
)

RHO = (
    RationalFunction(Fraction(9, 4) * _RHO1_NUM, R1_VAR * J2_LOCUS ** 2),
    RationalFunction(Fraction(27, 8) * _RHO2_NUM, R1_VAR ** 2 * J2_LOCUS ** 3),
    RationalFunction(
        -521838526464 * R2_VAR ** 9, R1_VAR ** 2 * J2_LOCUS ** 5
    ),
)

# the isolated branch of the (r1, r2) Jacobian-minor system
R1R2_SYSTEM = (
    parse_poly(
        """
        3 r1^8 + 720 r1^7 r2 + 69120 r1^6 r2^2 + 2048 r1^5 r2^2 + 3317760 r1^5 r2^3 + 79626240 r1^4 r2^4 - 417792 r1^4 r2^3
        - 24772608 r1^3 r2^4 + 764411904 r1^3 r2^5 - 113246208 r1^2 r2^5 + 50331648 r1 r2^5
        - 5435817984 r1 r2^6 - 2415919104 r2^6
        """,
        RR,
    ),
    parse_poly(
        """
        9 r1^5 + 1296 r1^4 r2 + 62208 r1^3 r2^2 - 10240 r1^2 r2^2 + 995328 r1^2 r2^3 + 786432 r1 r2^3 - 2359296 r2^4
        """,
        RR,
    ),
    parse_poly(
        """
        9 r1^8 + 2160 r1^7 r2 + 207360 r1^6 r2^2 + 9953280 r1^5 r2^3 + 38912 r1^5 r2^2 + 238878720 r1^4 r2^4
        - 3735552 r1^4 r2^3 + 2293235712 r1^3 r2^5 - 247726080 r1^3 r2^4 + 905969664 r1^2 r2^5
        + 201326592 r1 r2^5 - 5435817984 r1 r2^6 - 4831838208 r2^6
        """,
        RR,
    ),
)

R1R2_POINTS = (
    (Fraction(-512, 2187), Fraction(-256, 6561)),
    (Fraction(2, 243), Fraction(1, 11664)),
    (Fraction(-4000, 2187), Fraction(2500, 6561)),
)

# the stated images of R1R2_POINTS ("respectively"), with the stated groups;
# verify_t3_points recomputes the actual pairing and classification
T3_POINTS = (
    (Fraction(-8019, 20), Fraction(-1240029, 200), Fraction(-531441, 100000)),
    (Fraction(81), Fraction(-5103, 25), Fraction(-729, 12500)),
    (Fraction(729, 2116), Fraction(1240029, 97336), Fraction(531441, 13181630464)),
)
T3_STATED_GROUPS = ("D4", "D4", "D6")


# ---------------------------------------------------------------------------
# exceptional points of the (u, v) parametrization
# ---------------------------------------------------------------------------

# the curve of coincident elliptic subcovers, where all Jacobian minors vanish
ISO1 = parse_poly(
    "8 v^3 + 27 v^2 - 54 u v^2 - u^2 v^2 + 108 u^2 v + 4 u^3 v - 108 u^3", UV
)


@dataclass(frozen=True)
class Table1Record:
    uv: tuple
    expected_invariants: tuple | None
    aut_group: str | None
    e3: int
    degenerate: bool = False
    # set when the printed coordinates fail verification; holds the point
    # that actually satisfies the minor system and reproduces the row
    corrected_uv: tuple | None = None


TABLE1 = (
    Table1Record(
        uv=(Fraction(-7, 2), Fraction(2)),
        expected_invariants=None,
        aut_group=None,
        e3=0,
        degenerate=True,
    ),
    Table1Record(
        uv=(Fraction(-775, 8), Fraction(125, 96)),
        expected_invariants=(
            Fraction(-8019, 20),
            Fraction(-1240029, 200),
            Fraction(531441, 100000),
        ),
        aut_group="D4",
        e3=2,
        corrected_uv=(Fraction(-775, 8), Fraction(125, 36)),
    ),
    Table1Record(
        uv=(Fraction(25, 2), Fraction(250, 9)),
        expected_invariants=(
            Fraction(-8019, 20),
            Fraction(-1240029, 200),
            Fraction(531441, 100000),
        ),
        aut_group="D4",
        e3=2,
    ),
    Table1Record(
        uv=(
            QuadExt(27, Fraction(-77, 2), -1),
            QuadExt(23, Fraction(77, 9), -1),
        ),
        expected_invariants=(
            Fraction(729, 2116),
            Fraction(1240029, 97336),
            Fraction(531441, 13181630464),
        ),
        aut_group="D4",
        e3=2,
    ),
    Table1Record(
        uv=(
            QuadExt(27, Fraction(77, 2), -1),
            QuadExt(23, Fraction(-77, 9), -1),
        ),
        expected_invariants=(
            Fraction(729, 2116),
            Fraction(1240029, 97336),
            Fraction(531441, 13181630464),
        ),
        aut_group="D4",
        e3=2,
    ),
    Table1Record(
        uv=(
            QuadExt(-15, Fraction(35, 8), 5),
            QuadExt(Fraction(25, 2), Fraction(35, 6), 5),
        ),
        expected_invariants=(
            Fraction(81),
            Fraction(-5103, 25),
            Fraction(-729, 12500),
        ),
        aut_group="D6",
        e3=2,
        corrected_uv=(
            QuadExt(Fraction(-15, 8), Fraction(35, 8), 5),
            QuadExt(Fraction(25, 2), Fraction(35, 6), 5),
        ),
    ),
    Table1Record(
        uv=(
            QuadExt(-15, Fraction(-35, 8), 5),
            QuadExt(Fraction(25, 2), Fraction(-35, 6), 5),
        ),
        expected_invariants=(
            Fraction(81),
            Fraction(-5103, 25),
            Fraction(-729, 12500),
        ),
        aut_group="D6",
        e3=2,
        corrected_uv=(
            QuadExt(Fraction(-15, 8), Fraction(-35, 8), 5),
            QuadExt(Fraction(25, 2), Fraction(-35, 6), 5),
        ),
    ),
)


SURFACES = {
    "s2": S2,
    "s3mod5": S3_MOD5,
    "c1": C1,
    "c2": C2,
    "iso1": ISO1,
    "j2locus": J2_LOCUS,
    "phi1": PHI1,
    "phi2": PHI2,
}
