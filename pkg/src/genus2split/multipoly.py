"""Sparse multivariate polynomials and rational functions over exact scalars.

Coefficients may be ``Fraction``, ``QuadExt``, or ``GFp``; all arithmetic is
exact and values are immutable after construction.
"""

from __future__ import annotations

from fractions import Fraction
import re

from .errors import (
    DenominatorVanishes,
    DomainMismatchError,
    ParseError,
    ZeroPolynomialError,
)
from .scalars import GFp, QuadExt, from_fraction_mod_p


def _is_zero(c):
    return not c if isinstance(c, (GFp, QuadExt)) else c == 0


class MultiPoly:
    """Sparse polynomial: ordered variable names + {exponent tuple: coeff}."""

    __slots__ = ("variables", "terms")

    def __init__(self, variables, terms=None):
        self.variables = tuple(variables)
        clean = {}
        for exp, c in (terms or {}).items():
            if isinstance(c, int):
                c = Fraction(c)
            if len(exp) != len(self.variables):
                raise ValueError("exponent vector length mismatch")
            if not _is_zero(c):
                clean[tuple(exp)] = c
        self.terms = clean

    # -- constructors -------------------------------------------------------

    @classmethod
    def constant(cls, value, variables=()):
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): value})

    @classmethod
    def var(cls, name, variables):
        variables = tuple(variables)
        exp = tuple(1 if v == name else 0 for v in variables)
        if sum(exp) != 1:
            raise ValueError(f"{name} not in {variables}")
        return cls(variables, {exp: Fraction(1)})

    # -- structure -----------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def total_degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, name):
        i = self.variables.index(name)
        return max((e[i] for e in self.terms), default=-1)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, QuadExt, GFp)):
            other = MultiPoly.constant(other, self.variables)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        a, b = self._aligned(other)
        return a.terms == b.terms

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # -- variable alignment ---------------------------------------------------

    def with_variables(self, variables):
        """Re-express over a superset of variables (by name)."""
        variables = tuple(variables)
        if variables == self.variables:
            return self
        idx = []
        for v in self.variables:
            if v not in variables:
                raise ValueError(f"variable {v} missing from {variables}")
            idx.append(variables.index(v))
        terms = {}
        for exp, c in self.terms.items():
            new = [0] * len(variables)
            for i, e in zip(idx, exp):
                new[i] = e
            terms[tuple(new)] = c
        return MultiPoly(variables, terms)

    def _aligned(self, other):
        if self.variables == other.variables:
            return self, other
        merged = list(self.variables) + [v for v in other.variables if v not in self.variables]
        return self.with_variables(merged), other.with_variables(merged)

    def _coerce(self, other):
        if isinstance(other, (int, Fraction, QuadExt, GFp)):
            return MultiPoly.constant(other, self.variables)
        if isinstance(other, MultiPoly):
            return other
        return NotImplemented

    # -- ring operations -------------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        a, b = self._aligned(o)
        terms = dict(a.terms)
        for exp, c in b.terms.items():
            cur = terms.get(exp)
            terms[exp] = c if cur is None else cur + c
        return MultiPoly(a.variables, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.variables, {e: -c for e, c in self.terms.items()})

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
        a, b = self._aligned(o)
        terms = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                exp = tuple(x + y for x, y in zip(e1, e2))
                c = c1 * c2
                cur = terms.get(exp)
                terms[exp] = c if cur is None else cur + c
        return MultiPoly(a.variables, terms)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = MultiPoly.constant(self._one(), self.variables)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def _one(self):
        for c in self.terms.values():
            if isinstance(c, GFp):
                return GFp(1, c.p)
            if isinstance(c, QuadExt):
                return QuadExt(1)
            break
        return Fraction(1)

    # -- calculus ----------------------------------------------------------------

    def derivative(self, name):
        if name not in self.variables:
            raise ValueError(f"unknown variable {name}")
        i = self.variables.index(name)
        terms = {}
        for exp, c in self.terms.items():
            if exp[i] == 0:
                continue
            new = list(exp)
            new[i] -= 1
            terms[tuple(new)] = c * exp[i]
        return MultiPoly(self.variables, terms)

    # -- evaluation ----------------------------------------------------------------

    def evaluate(self, point):
        """Exact value at a full variable binding.

        Scalars of the point may be Fraction, QuadExt, GFp, FFElem, or
        mpmath floats; coefficient/point mixing follows operator coercion.
        """
        missing = [v for v in self.variables if v not in point]
        if missing:
            raise ValueError(f"unbound variables: {missing}")
        values = [point[v] for v in self.variables]
        total = None
        for exp, c in self.terms.items():
            t = c
            for x, e in zip(values, exp):
                if e:
                    t = t * x ** e
            total = t if total is None else total + t
        if total is None:
            zero = self._zero_like(values)
            return zero
        return total

    def _zero_like(self, values):
        for c in self.terms.values():
            return c - c
        for x in values:
            if isinstance(x, (GFp,)) or type(x).__name__ == "FFElem":
                return x - x
        return Fraction(0)

    def substitute(self, bindings):
        """Substitute a RationalFunction (or poly/scalar) for every variable.

        Returns a RationalFunction whose denominator is the product of the
        binding denominators raised to the per-variable maximal exponents.
        """
        rfs = {}
        for v in self.variables:
            if v not in bindings:
                raise ValueError(f"unbound variable {v}")
            rfs[v] = RationalFunction.coerce(bindings[v])
        maxdeg = {v: self.degree_in(v) for v in self.variables}
        out_vars = ()
        for rf in rfs.values():
            merged = list(out_vars) + [w for w in rf.num.variables if w not in out_vars]
            out_vars = tuple(merged)
        num = MultiPoly(out_vars, {})
        for exp, c in self.terms.items():
            t = MultiPoly.constant(c, out_vars)
            for v, e in zip(self.variables, exp):
                rf = rfs[v]
                if e:
                    t = t * rf.num ** e
                rest = maxdeg[v] - e
                if rest:
                    t = t * rf.den ** rest
            num = num + t
        den = MultiPoly.constant(self._one(), out_vars)
        for v in self.variables:
            if maxdeg[v] > 0:
                den = den * rfs[v].den ** maxdeg[v]
        return RationalFunction(num, den)

    # -- coefficient reduction ------------------------------------------------------

    def reduce_mod_p(self, prime):
        terms = {}
        for exp, c in self.terms.items():
            if isinstance(c, GFp):
                if c.p != prime:
                    raise DomainMismatchError(f"GF({c.p}) vs GF({prime})")
                terms[exp] = c
            else:
                terms[exp] = from_fraction_mod_p(Fraction(c), prime)
        return MultiPoly(self.variables, terms)

    # -- univariate views ---------------------------------------------------------

    def univariate_coeffs(self, name):
        """Coefficients in `name`, ascending; entries are scalars when no other
        variable occurs, MultiPoly in the remaining variables otherwise."""
        i = self.variables.index(name)
        others = tuple(v for v in self.variables if v != name)
        deg = self.degree_in(name)
        buckets = [dict() for _ in range(deg + 1)]
        for exp, c in self.terms.items():
            rest = tuple(e for j, e in enumerate(exp) if j != i)
            buckets[exp[i]][rest] = c
        if others:
            return [MultiPoly(others, b) for b in buckets]
        zero = Fraction(0)
        return [b.get((), zero) for b in buckets]

    # -- exact division (needed by fraction-free elimination) -------------------------

    def divide_exact(self, divisor):
        """Quotient self/divisor when the division is exact; raises otherwise."""
        divisor = self._coerce(divisor)
        a, b = self._aligned(divisor)
        if b.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        rem = a
        quot = MultiPoly(a.variables, {})
        blead = max(b.terms, key=_gradedlex_key)
        bc = b.terms[blead]
        while not rem.is_zero():
            rlead = max(rem.terms, key=_gradedlex_key)
            diff = tuple(x - y for x, y in zip(rlead, blead))
            if any(d < 0 for d in diff):
                raise ValueError("inexact polynomial division")
            c = rem.terms[rlead] / bc
            mono = MultiPoly(a.variables, {diff: c})
            quot = quot + mono
            rem = rem - mono * b
        return quot

    # -- text formats --------------------------------------------------------------

    def to_text(self):
        """Interchange format: header line of variables, then 'coeff:e1,e2,..'
        terms joined by ';'.  Bit-exact round-trip via from_text."""
        header = ",".join(self.variables)
        prime = None
        for c in self.terms.values():
            if isinstance(c, GFp):
                prime = c.p
            break
        if prime is not None:
            header += f" mod {prime}"
        parts = []
        for exp in sorted(self.terms, key=_gradedlex_key, reverse=True):
            c = self.terms[exp]
            cs = str(c.value) if isinstance(c, GFp) else str(c)
            parts.append(cs + ":" + ",".join(str(e) for e in exp))
        return header + "\n" + ";".join(parts)

    @classmethod
    def from_text(cls, text):
        lines = text.strip().split("\n")
        if len(lines) < 1:
            raise ParseError("empty polynomial text")
        header = lines[0].strip()
        prime = None
        if " mod " in header:
            header, ps = header.split(" mod ")
            prime = int(ps)
        variables = tuple(v.strip() for v in header.split(",") if v.strip())
        terms = {}
        body = lines[1].strip() if len(lines) > 1 else ""
        if body:
            for part in body.split(";"):
                try:
                    cs, es = part.split(":")
                    coeff = Fraction(cs)
                    exp = tuple(int(e) for e in es.split(","))
                except ValueError as exc:
                    raise ParseError(f"bad term {part!r}: {exc}")
                if len(exp) != len(variables):
                    raise ParseError(f"bad exponent arity in {part!r}")
                terms[exp] = from_fraction_mod_p(coeff, prime) if prime else coeff
        return cls(variables, terms)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exp in sorted(self.terms, key=_gradedlex_key, reverse=True):
            c = self.terms[exp]
            mono = "*".join(
                f"{v}^{e}" if e > 1 else v
                for v, e in zip(self.variables, exp)
                if e
            )
            cs = str(c.value) if isinstance(c, GFp) else str(c)
            if mono:
                parts.append(f"{cs}*{mono}" if cs not in ("1",) else mono)
            else:
                parts.append(cs)
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"MultiPoly({self.variables}, {len(self.terms)} terms)"


def _gradedlex_key(exp):
    return (sum(exp),) + tuple(exp)


class RationalFunction:
    """Quotient of MultiPolys.  Equality is by cross-multiplication; no gcd
    canonicalization is ever attempted."""

    __slots__ = ("num", "den")

    def __init__(self, num, den):
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        num, den = num._aligned(den)
        self.num = num
        self.den = den

    @classmethod
    def coerce(cls, value, variables=()):
        if isinstance(value, RationalFunction):
            return value
        if isinstance(value, MultiPoly):
            return cls(value, MultiPoly.constant(value._one(), value.variables))
        return cls(
            MultiPoly.constant(value, variables),
            MultiPoly.constant(Fraction(1), variables),
        )

    def __add__(self, other):
        o = RationalFunction.coerce(other, self.num.variables)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-RationalFunction.coerce(other, self.num.variables))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = RationalFunction.coerce(other, self.num.variables)
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = RationalFunction.coerce(other, self.num.variables)
        if o.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __pow__(self, n):
        if n < 0:
            return RationalFunction(self.den, self.num) ** (-n)
        return RationalFunction(self.num ** n, self.den ** n)

    def __eq__(self, other):
        if not isinstance(other, RationalFunction):
            other = RationalFunction.coerce(other, self.num.variables)
        return (self.num * other.den - other.num * self.den).is_zero()

    def derivative(self, name):
        return RationalFunction(
            self.num.derivative(name) * self.den - self.num * self.den.derivative(name),
            self.den * self.den,
        )

    def evaluate(self, point):
        dv = self.den.evaluate(point)
        if _is_zero(dv) or (not isinstance(dv, (GFp,)) and dv == 0):
            raise DenominatorVanishes(str(self.den), point)
        return self.num.evaluate(point) / dv

    def is_zero(self):
        return self.num.is_zero()

    def __repr__(self):
        return f"({self.num}) / ({self.den})"


# ---------------------------------------------------------------------------
# human-readable polynomial parser, used for the transcribed constants
# ---------------------------------------------------------------------------

_TERM_RE = re.compile(
    r"(?P<sign>[+-])?\s*(?P<coeff>\d+(?:/\d+)?)?\s*(?P<monos>(?:\*?\s*[a-zA-Z_][a-zA-Z_0-9]*(?:\s*\^\s*\d+)?\s*)*)"
)


def parse_poly(text, variables):
    """Parse a sum of monomials like '-27 x^6 + 2 x^6 y - 4/3 x y^2'."""
    variables = tuple(variables)
    s = text.replace("\n", " ").strip()
    if not s:
        return MultiPoly(variables, {})
    terms = {}
    pos = 0
    first = True
    while pos < len(s):
        while pos < len(s) and s[pos] == " ":
            pos += 1
        if pos >= len(s):
            break
        m = _TERM_RE.match(s, pos)
        if not m or m.end() == pos:
            raise ParseError(f"cannot parse polynomial near {s[pos:pos + 30]!r}", pos)
        if not first and m.group("sign") is None:
            raise ParseError(f"missing sign near {s[pos:pos + 30]!r}", pos)
        first = False
        coeff = Fraction(m.group("coeff")) if m.group("coeff") else Fraction(1)
        if m.group("sign") == "-":
            coeff = -coeff
        exp = [0] * len(variables)
        monos = m.group("monos").replace("*", " ")
        for vm in re.finditer(r"([a-zA-Z_][a-zA-Z_0-9]*)(?:\s*\^\s*(\d+))?", monos):
            name, e = vm.group(1), int(vm.group(2) or 1)
            if name not in variables:
                raise ParseError(f"unknown variable {name!r}", pos)
            exp[variables.index(name)] += e
        key = tuple(exp)
        terms[key] = terms.get(key, Fraction(0)) + coeff
        pos = m.end()
    return MultiPoly(variables, terms)
