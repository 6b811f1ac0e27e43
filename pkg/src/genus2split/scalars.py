"""Exact coefficient domains.

Rational arithmetic is ``fractions.Fraction`` from the standard library.
This module adds the two other domains the toolkit needs:

* ``QuadExt`` -- elements a + b*sqrt(d) of a quadratic extension of Q,
  for a fixed square-free integer d.
* ``GFp`` -- prime-field elements, and ``ExtensionField`` / ``FFElem``
  for GF(p^k), used by the finite-field identity checks.
"""

from __future__ import annotations

from fractions import Fraction
import random

from .errors import DomainMismatchError, ParseError


def _sqfree(d: int) -> bool:
    if d in (0, 1):
        return False
    n = abs(d)
    f = 2
    while f * f <= n:
        if n % (f * f) == 0:
            return False
        while n % f == 0:
            n //= f
        f += 1
    return True


class QuadExt:
    """a + b*sqrt(d) with rational a, b and fixed square-free integer d."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b=0, d=1):
        self.a = Fraction(a)
        self.b = Fraction(b)
        if self.b != 0 and not _sqfree(d):
            raise ValueError(f"extension discriminant must be square-free, got {d}")
        self.d = int(d) if self.b != 0 else 1

    # -- coercion ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, QuadExt):
            if self.b != 0 and other.b != 0 and self.d != other.d:
                raise DomainMismatchError(f"cannot mix sqrt({self.d}) with sqrt({other.d})")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadExt(other)
        return NotImplemented

    def _d(self, other):
        return self.d if self.b != 0 else other.d

    # -- ring operations --------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadExt(self.a + o.a, self.b + o.b, self._d(o))

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.d)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        d = self._d(o)
        return QuadExt(self.a * o.a + d * self.b * o.b, self.a * o.b + self.b * o.a, d)

    __rmul__ = __mul__

    def inverse(self):
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("QuadExt division by zero")
        return QuadExt(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return QuadExt(other) / self

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result = QuadExt(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- structure --------------------------------------------------------

    def conjugate(self):
        return QuadExt(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a - self.d * self.b * self.b

    def is_rational(self) -> bool:
        return self.b == 0

    def as_fraction(self) -> Fraction:
        if self.b != 0:
            raise ValueError(f"{self} is irrational")
        return self.a

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        if isinstance(other, QuadExt):
            if self.b == 0 or other.b == 0:
                return self.a == other.a and self.b == other.b
            return self.d == other.d and self.a == other.a and self.b == other.b
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def __repr__(self):
        if self.b == 0:
            return str(self.a)
        return f"{self.a} + {self.b}*sqrt({self.d})"


class GFp:
    """Element of the prime field GF(p)."""

    __slots__ = ("value", "p")

    def __init__(self, value, p):
        self.p = p
        self.value = int(value) % p

    def _coerce(self, other):
        if isinstance(other, GFp):
            if other.p != self.p:
                raise DomainMismatchError(f"GF({self.p}) vs GF({other.p})")
            return other
        if isinstance(other, int):
            return GFp(other, self.p)
        if isinstance(other, Fraction):
            return from_fraction_mod_p(other, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return GFp(self.value + o.value, self.p)

    __radd__ = __add__

    def __neg__(self):
        return GFp(-self.value, self.p)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return GFp(self.value - o.value, self.p)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return GFp(self.value * o.value, self.p)

    __rmul__ = __mul__

    def inverse(self):
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.p})")
        return GFp(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        return GFp(pow(self.value, n, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, GFp):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"{self.value}"


def from_fraction_mod_p(q, p):
    """Reduce a rational mod p; raises if p divides the denominator."""
    from .errors import DenominatorNotUnit

    q = Fraction(q)
    if q.denominator % p == 0:
        raise DenominatorNotUnit(p, q)
    return GFp(q.numerator * pow(q.denominator, -1, p), p)


# ---------------------------------------------------------------------------
# GF(p^k) -- small extension fields for Schwartz-Zippel sampling
# ---------------------------------------------------------------------------


def _polmod_mul(a, b, modulus, p):
    k = len(modulus) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    # reduce by monic modulus
    for i in range(len(prod) - 1, k - 1, -1):
        c = prod[i]
        if c:
            prod[i] = 0
            for j in range(k + 1):
                prod[i - k + j] = (prod[i - k + j] - c * modulus[j]) % p
    return prod[:k] + [0] * (k - len(prod)) if len(prod) < k else prod[:k]


def _polmod_pow(a, n, modulus, p):
    k = len(modulus) - 1
    result = [1] + [0] * (k - 1)
    base = list(a)
    while n:
        if n & 1:
            result = _polmod_mul(result, base, modulus, p)
        base = _polmod_mul(base, base, modulus, p)
        n >>= 1
    return result


def _is_irreducible(modulus, p):
    """Rabin test for a monic polynomial over GF(p)."""
    k = len(modulus) - 1
    x = [0, 1] + [0] * (k - 2) if k >= 2 else [0]
    xq = _polmod_pow(x, p ** k, modulus, p)
    if xq != x + [0] * (k - len(x)):
        return False
    for q in {f for f in range(2, k + 1) if k % f == 0 and _is_prime(f)}:
        xe = _polmod_pow(x, p ** (k // q), modulus, p)
        diff = [(a - b) % p for a, b in zip(xe, x + [0] * (k - len(x)))]
        if _poly_gcd_deg(diff, modulus, p) != 0:
            return False
    return True


def _is_prime(n):
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def _poly_gcd_deg(a, b, p):
    a, b = list(a), list(b)
    while any(b):
        while a and a[-1] == 0:
            a.pop()
        while b and b[-1] == 0:
            b.pop()
        if not b:
            break
        if len(a) < len(b):
            a, b = b, a
            continue
        inv = pow(b[-1], -1, p)
        shift = len(a) - len(b)
        c = a[-1] * inv % p
        for i, x in enumerate(b):
            a[i + shift] = (a[i + shift] - c * x) % p
        a.pop()
    while a and a[-1] == 0:
        a.pop()
    return len(a) - 1 if a else -1


class ExtensionField:
    """GF(p^k), with a randomly found irreducible modulus when k > 1."""

    def __init__(self, p, k, seed=0):
        self.p = p
        self.k = k
        if k == 1:
            self.modulus = [0, 1]
        else:
            rng = random.Random(seed)
            while True:
                cand = [rng.randrange(p) for _ in range(k)] + [1]
                if _is_irreducible(cand, p):
                    self.modulus = cand
                    break

    def __call__(self, value):
        if isinstance(value, FFElem):
            if value.field is not self and (value.field.p, value.field.k) != (self.p, self.k):
                raise DomainMismatchError("element from a different field")
            return value
        if isinstance(value, GFp):
            value = value.value
        if isinstance(value, Fraction):
            return self(from_fraction_mod_p(value, self.p))
        coeffs = [int(value) % self.p] + [0] * (self.k - 1)
        return FFElem(self, tuple(coeffs))

    def zero(self):
        return self(0)

    def one(self):
        return self(1)

    def random_element(self, rng):
        return FFElem(self, tuple(rng.randrange(self.p) for _ in range(self.k)))

    def sqrt(self, value):
        """Square root in this field by Tonelli-Shanks, if one exists."""
        a = self(value)
        q = self.p ** self.k
        if not a:
            return a
        if a ** ((q - 1) // 2) != self.one():
            raise ValueError(f"{value} is not a square in GF({self.p}^{self.k})")
        s, t = 0, q - 1
        while t % 2 == 0:
            s += 1
            t //= 2
        rng = random.Random(97)
        while True:
            z = self.random_element(rng)
            if z and z ** ((q - 1) // 2) != self.one():
                break
        m, c, u, r = s, z ** t, a ** t, a ** ((t + 1) // 2)
        while u != self.one():
            i, sq = 0, u
            while sq != self.one():
                sq = sq * sq
                i += 1
            b = c ** (2 ** (m - i - 1))
            m, c, u, r = i, b * b, u * b * b, r * b
        return r

    def __repr__(self):
        return f"GF({self.p}^{self.k})"


class FFElem:
    """Element of an ExtensionField, as a coefficient tuple mod the modulus."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = tuple(coeffs)

    def _coerce(self, other):
        if isinstance(other, FFElem):
            return other
        if isinstance(other, (int, GFp, Fraction)):
            return self.field(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        p = self.field.p
        return FFElem(self.field, tuple((a + b) % p for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        p = self.field.p
        return FFElem(self.field, tuple(-a % p for a in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        prod = _polmod_mul(list(self.coeffs), list(o.coeffs), self.field.modulus, self.field.p)
        return FFElem(self.field, tuple(prod))

    __rmul__ = __mul__

    def inverse(self):
        if not any(self.coeffs):
            raise ZeroDivisionError("0 has no inverse")
        order = self.field.p ** self.field.k - 1
        return self ** (order - 1)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        coeffs = _polmod_pow(list(self.coeffs), n, self.field.modulus, self.field.p)
        return FFElem(self.field, tuple(coeffs))

    def __eq__(self, other):
        if isinstance(other, FFElem):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, GFp)):
            return self == self.field(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return any(self.coeffs)

    def __repr__(self):
        return f"FF{self.coeffs}"


# ---------------------------------------------------------------------------
# scalar text parsing for the CLI: "3/4", "-15+35/8*sqrt(5)", "27-77/2*sqrt(-1)"
# ---------------------------------------------------------------------------


def parse_scalar(text):
    """Parse a rational ("3/4") or quadratic-extension scalar
    ("-15+35/8*sqrt(5)", "sqrt(-1)", "27-77/2*sqrt(-1)")."""
    import re

    s = text.strip().replace(" ", "")
    if "sqrt" not in s:
        try:
            return Fraction(s)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad rational {text!r}: {exc}")
    m = re.fullmatch(
        r"(?:(?P<a>[+-]?\d+(?:/\d+)?))?"
        r"(?P<b>[+-]?(?:\d+(?:/\d+)?)?)\*?sqrt\((?P<d>-?\d+)\)",
        s,
    )
    if not m:
        raise ParseError(f"bad scalar {text!r}")
    a = Fraction(m.group("a")) if m.group("a") else Fraction(0)
    braw = m.group("b")
    if m.group("a") and braw == "":
        # "3/4*sqrt(5)": the leading number is the sqrt coefficient
        a, braw = Fraction(0), m.group("a")
    if braw in ("", "+"):
        b = Fraction(1)
    elif braw == "-":
        b = Fraction(-1)
    else:
        b = Fraction(braw)
    return QuadExt(a, b, int(m.group("d")))
