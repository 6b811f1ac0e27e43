"""Resultants and discriminants via Bareiss elimination on the Sylvester matrix.

Works over any exact coefficient domain; entries may themselves be
polynomials in other variables, in which case the fraction-free divisions
are exact polynomial divisions.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DegreeError, ZeroPolynomialError
from .multipoly import MultiPoly


def _as_coeff_list(f, var):
    if isinstance(f, MultiPoly):
        if f.is_zero():
            raise ZeroPolynomialError("resultant of the zero polynomial")
        if var is None:
            if len(f.variables) != 1:
                raise ValueError("var required for multivariate input")
            var = f.variables[0]
        return f.univariate_coeffs(var)
    coeffs = list(f)
    while coeffs and _zeroish(coeffs[-1]):
        coeffs.pop()
    if not coeffs:
        raise ZeroPolynomialError("resultant of the zero polynomial")
    return coeffs


def _zeroish(c):
    if isinstance(c, MultiPoly):
        return c.is_zero()
    return not c


def _exact_div(a, b):
    if isinstance(a, MultiPoly) or isinstance(b, MultiPoly):
        if not isinstance(a, MultiPoly):
            a = MultiPoly.constant(a, b.variables)
        return a.divide_exact(b)
    return a / b


def sylvester_matrix(f, g):
    """Sylvester matrix of two coefficient lists (ascending order)."""
    n, m = len(f) - 1, len(g) - 1
    size = n + m
    fr, gr = f[::-1], g[::-1]
    rows = []
    for i in range(m):
        rows.append([Fraction(0)] * i + list(fr) + [Fraction(0)] * (m - 1 - i))
    for i in range(n):
        rows.append([Fraction(0)] * i + list(gr) + [Fraction(0)] * (n - 1 - i))
    assert all(len(r) == size for r in rows)
    return rows


def bareiss_determinant(matrix):
    """Fraction-free determinant; divisions are exact in the entry domain."""
    m = [row[:] for row in matrix]
    n = len(m)
    if n == 0:
        return Fraction(1)
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if _zeroish(m[k][k]):
            swap = next((r for r in range(k + 1, n) if not _zeroish(m[r][k])), None)
            if swap is None:
                return _zero_of(m[k][k])
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                val = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                m[i][j] = _exact_div(val, prev)
            m[i][k] = _zero_of(m[i][k])
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return -det if sign < 0 else det


def _zero_of(entry):
    if isinstance(entry, MultiPoly):
        return MultiPoly(entry.variables, {})
    return entry - entry if not isinstance(entry, Fraction) else Fraction(0)


def resultant(f, g, var=None):
    """Sylvester resultant of f and g with respect to `var`.

    f, g may be MultiPoly (univariate in `var`, coefficients possibly
    polynomial in other variables) or plain ascending coefficient lists.
    """
    cf = _as_coeff_list(f, var)
    cg = _as_coeff_list(g, var)
    if len(cf) < 2 or len(cg) < 2:
        raise DegreeError("resultant requires deg >= 1 on both sides")
    return bareiss_determinant(sylvester_matrix(cf, cg))


def discriminant(f, var=None):
    """(-1)^(n(n-1)/2) * Res(f, f') / lc(f), the classical discriminant."""
    cf = _as_coeff_list(f, var)
    n = len(cf) - 1
    if n < 2:
        raise DegreeError("discriminant requires deg >= 2")
    deriv = [cf[i] * i for i in range(1, n + 1)]
    res = bareiss_determinant(sylvester_matrix(cf, deriv))
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return _exact_div(res * sign, cf[-1])
