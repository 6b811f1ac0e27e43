"""Exception types shared across the toolkit."""


class Genus2Error(Exception):
    """Base class for all toolkit errors."""


class DomainMismatchError(Genus2Error):
    """Mixing incompatible coefficient domains (different primes, different
    quadratic extensions, rational vs finite field)."""


class DenominatorVanishes(Genus2Error):
    """A rational function was evaluated at a zero of its denominator."""

    def __init__(self, factor, point=None):
        self.factor = factor
        self.point = point
        super().__init__(f"denominator factor vanishes: {factor}" + (f" at {point}" if point is not None else ""))


class DenominatorNotUnit(Genus2Error):
    """A rational coefficient cannot be reduced mod p (p divides its denominator)."""

    def __init__(self, prime, coefficient=None):
        self.prime = prime
        super().__init__(f"coefficient denominator not a unit mod {prime}: {coefficient}")


class ZeroPolynomialError(Genus2Error):
    """Operation undefined for the zero polynomial."""


class DegreeError(Genus2Error):
    """Input polynomial has the wrong degree for this operation."""


class J2Vanishes(Genus2Error):
    """Absolute invariants are undefined on the J2 = 0 stratum."""


class ResultantVanishes(Genus2Error):
    """The two cubics share a root; not a genus 2 curve."""


class DiscriminantVanishes(Genus2Error):
    """A cubic factor has a repeated root; not a genus 2 curve."""


class DegenerateParameters(Genus2Error):
    """Parameter values outside the family's domain (v = 0)."""


class ThetaUndefined(DenominatorVanishes):
    """(u,v) lies on a denominator locus of the (u,v) -> (i1,i2,i3) map."""


class EqRUndefined(DenominatorVanishes):
    """(u,v) lies on a denominator locus of the (u,v) -> (r1,r2) map."""


class RhoUndefined(DenominatorVanishes):
    """(r1,r2) lies on a denominator locus of the (r1,r2) -> (i1,i2,i3) map."""


class Phi2Vanishes(DenominatorVanishes):
    """The z-elimination denominator vanishes at (x,y)."""


class InsufficientPoints(Genus2Error):
    """Could not collect enough curve points over GF(p)."""


class ParseError(Genus2Error):
    """Malformed polynomial or scalar text."""

    def __init__(self, message, position=None):
        self.position = position
        super().__init__(message if position is None else f"{message} (at position {position})")
