"""Frozen coefficient tables for the Igusa invariants J2, J4, J6.

Generated by tools/derive_igusa.py from the root-difference
definitions; exponent vectors index a0..a6, values are exact
integers or rationals (num, den) pairs.
"""

from fractions import Fraction

J2_TERMS = {
    (0, 0, 0, 2, 0, 0, 0): Fraction(6),
    (0, 0, 1, 0, 1, 0, 0): Fraction(-16),
    (0, 1, 0, 0, 0, 1, 0): Fraction(40),
    (1, 0, 0, 0, 0, 0, 1): Fraction(-240),
}

J4_TERMS = {
    (0, 0, 2, 0, 2, 0, 0): Fraction(4),
    (0, 0, 2, 1, 0, 1, 0): Fraction(-12),
    (0, 0, 3, 0, 0, 0, 1): Fraction(48),
    (0, 1, 0, 1, 2, 0, 0): Fraction(-12),
    (0, 1, 0, 2, 0, 1, 0): Fraction(36),
    (0, 1, 1, 0, 1, 1, 0): Fraction(4),
    (0, 1, 1, 1, 0, 0, 1): Fraction(-180),
    (0, 2, 0, 0, 0, 2, 0): Fraction(-80),
    (0, 2, 0, 0, 1, 0, 1): Fraction(300),
    (1, 0, 0, 0, 3, 0, 0): Fraction(48),
    (1, 0, 0, 1, 1, 1, 0): Fraction(-180),
    (1, 0, 0, 2, 0, 0, 1): Fraction(324),
    (1, 0, 1, 0, 0, 2, 0): Fraction(300),
    (1, 0, 1, 0, 1, 0, 1): Fraction(-504),
    (1, 1, 0, 0, 0, 1, 1): Fraction(-540),
    (2, 0, 0, 0, 0, 0, 2): Fraction(1620),
}

J6_TERMS = {
    (0, 0, 2, 2, 2, 0, 0): Fraction(8),
    (0, 0, 2, 3, 0, 1, 0): Fraction(-24),
    (0, 0, 3, 0, 3, 0, 0): Fraction(-24),
    (0, 0, 3, 1, 1, 1, 0): Fraction(76),
    (0, 0, 3, 2, 0, 0, 1): Fraction(60),
    (0, 0, 4, 0, 0, 2, 0): Fraction(-36),
    (0, 0, 4, 0, 1, 0, 1): Fraction(-160),
    (0, 1, 0, 3, 2, 0, 0): Fraction(-24),
    (0, 1, 0, 4, 0, 1, 0): Fraction(72),
    (0, 1, 1, 1, 3, 0, 0): Fraction(76),
    (0, 1, 1, 2, 1, 1, 0): Fraction(-238),
    (0, 1, 1, 3, 0, 0, 1): Fraction(-198),
    (0, 1, 2, 0, 2, 1, 0): Fraction(28),
    (0, 1, 2, 1, 0, 2, 0): Fraction(26),
    (0, 1, 2, 1, 1, 0, 1): Fraction(492),
    (0, 1, 3, 0, 0, 1, 1): Fraction(616),
    (0, 2, 0, 0, 4, 0, 0): Fraction(-36),
    (0, 2, 0, 1, 2, 1, 0): Fraction(26),
    (0, 2, 0, 2, 0, 2, 0): Fraction(176),
    (0, 2, 0, 2, 1, 0, 1): Fraction(330),
    (0, 2, 1, 0, 1, 2, 0): Fraction(64),
    (0, 2, 1, 0, 2, 0, 1): Fraction(-640),
    (0, 2, 1, 1, 0, 1, 1): Fraction(-1860),
    (0, 2, 2, 0, 0, 0, 2): Fraction(-900),
    (0, 3, 0, 0, 0, 3, 0): Fraction(-320),
    (0, 3, 0, 0, 1, 1, 1): Fraction(1600),
    (0, 3, 0, 1, 0, 0, 2): Fraction(2250),
    (1, 0, 0, 2, 3, 0, 0): Fraction(60),
    (1, 0, 0, 3, 1, 1, 0): Fraction(-198),
    (1, 0, 0, 4, 0, 0, 1): Fraction(162),
    (1, 0, 1, 0, 4, 0, 0): Fraction(-160),
    (1, 0, 1, 1, 2, 1, 0): Fraction(492),
    (1, 0, 1, 2, 0, 2, 0): Fraction(330),
    (1, 0, 1, 2, 1, 0, 1): Fraction(-468),
    (1, 0, 2, 0, 1, 2, 0): Fraction(-640),
    (1, 0, 2, 0, 2, 0, 1): Fraction(424),
    (1, 0, 2, 1, 0, 1, 1): Fraction(-876),
    (1, 0, 3, 0, 0, 0, 2): Fraction(-96),
    (1, 1, 0, 0, 3, 1, 0): Fraction(616),
    (1, 1, 0, 1, 1, 2, 0): Fraction(-1860),
    (1, 1, 0, 1, 2, 0, 1): Fraction(-876),
    (1, 1, 0, 2, 0, 1, 1): Fraction(1818),
    (1, 1, 1, 0, 0, 3, 0): Fraction(1600),
    (1, 1, 1, 0, 1, 1, 1): Fraction(3472),
    (1, 1, 1, 1, 0, 0, 2): Fraction(3060),
    (1, 2, 0, 0, 0, 2, 1): Fraction(-2240),
    (1, 2, 0, 0, 1, 0, 2): Fraction(-18600),
    (2, 0, 0, 0, 2, 2, 0): Fraction(-900),
    (2, 0, 0, 0, 3, 0, 1): Fraction(-96),
    (2, 0, 0, 1, 0, 3, 0): Fraction(2250),
    (2, 0, 0, 1, 1, 1, 1): Fraction(3060),
    (2, 0, 0, 2, 0, 0, 2): Fraction(-10044),
    (2, 0, 1, 0, 0, 2, 1): Fraction(-18600),
    (2, 0, 1, 0, 1, 0, 2): Fraction(20664),
    (2, 1, 0, 0, 0, 1, 2): Fraction(59940),
    (3, 0, 0, 0, 0, 0, 3): Fraction(-119880),
}
