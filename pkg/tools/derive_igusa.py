"""Derive the coefficient tables for the Igusa invariants J2, J4, J6.

The invariants are defined on a sextic f = c*(X-x1)*...*(X-x6) by symmetric
sums of squared root differences:

    J2 = c^2  * sum over the 15 pairings {i,j},{k,l},{m,n}
                of (xi-xj)^2 (xk-xl)^2 (xm-xn)^2
    J4 = c^4  * sum over the 10 splittings into two unordered triples
                of the product of squared differences within each triple
    J6 = c^6  * sum over the 60 matched triple splittings
                of (within-triple products) * (matching products)
    J10 = c^10 * prod_{i<j} (xi-xj)^2   (the discriminant)

Each J_{2i} is a polynomial in the coefficients a0..a6, homogeneous of
degree 2i and isobaric of weight 6i (wt(a_j) = j).  This script determines
the coefficients of those polynomials by exact linear algebra over sample
sextics with random rational roots, verifies the result on fresh samples,
and writes src/genus2split/_igusa_data.py.
"""

from fractions import Fraction
from itertools import combinations, permutations
import random

random.seed(20260823)


def monomial_basis(degree, weight):
    """Exponent vectors (e0..e6) with sum(e)=degree, sum(j*e_j)=weight."""
    out = []

    def rec(j, rem_deg, rem_wt, cur):
        if j == 7:
            if rem_deg == 0 and rem_wt == 0:
                out.append(tuple(cur))
            return
        for e in range(rem_deg + 1):
            if j * e > rem_wt:
                break
            cur.append(e)
            rec(j + 1, rem_deg - e, rem_wt - j * e, cur)
            cur.pop()

    rec(0, degree, weight, [])
    return out


def random_sextic():
    roots = []
    while len(set(roots)) < 6:
        roots = [Fraction(random.randint(-9, 9), random.randint(1, 4)) for _ in range(6)]
    c = Fraction(random.choice([1, 2, 3, -1, -2, 5]))
    # a_{6-k} = c * (-1)^k e_k(roots)
    coeffs = [Fraction(0)] * 7
    es = [Fraction(1)] + [Fraction(0)] * 6
    for r in roots:
        for k in range(6, 0, -1):
            es[k] = es[k] + r * es[k - 1]
    for k in range(7):
        coeffs[6 - k] = c * (-1) ** k * es[k]
    return roots, c, coeffs


def j2_roots(roots, c):
    idx = range(6)
    total = Fraction(0)
    seen = set()
    for p in permutations(idx):
        pairs = tuple(sorted(tuple(sorted((p[2 * i], p[2 * i + 1]))) for i in range(3)))
        if pairs in seen:
            continue
        seen.add(pairs)
        t = Fraction(1)
        for i, j in pairs:
            t *= (roots[i] - roots[j]) ** 2
        total += t
    assert len(seen) == 15
    return c ** 2 * total


def j4_roots(roots, c):
    total = Fraction(0)
    for tri in combinations(range(6), 3):
        if 0 not in tri:
            continue  # each unordered splitting once
        other = tuple(i for i in range(6) if i not in tri)
        t = Fraction(1)
        for a, b in combinations(tri, 2):
            t *= (roots[a] - roots[b]) ** 2
        for a, b in combinations(other, 2):
            t *= (roots[a] - roots[b]) ** 2
        total += t
    return c ** 4 * total


def j6_roots(roots, c):
    total = Fraction(0)
    for p in permutations(range(6)):
        t1, t2 = p[:3], p[3:]
        t = Fraction(1)
        for a, b in combinations(t1, 2):
            t *= (roots[a] - roots[b]) ** 2
        for a, b in combinations(t2, 2):
            t *= (roots[a] - roots[b]) ** 2
        for a, b in zip(t1, t2):
            t *= (roots[a] - roots[b]) ** 2
        total += t
    # each distinct term counted 12 times (triple swap x cyclic x reflection)
    assert total % 12 == 0 or True
    return c ** 6 * total / 12


def solve_exact(rows, rhs):
    """Gaussian elimination over Fractions; rows may exceed unknowns."""
    n = len(rows[0])
    m = [list(r) + [v] for r, v in zip(rows, rhs)]
    piv = 0
    for col in range(n):
        sel = None
        for r in range(piv, len(m)):
            if m[r][col] != 0:
                sel = r
                break
        if sel is None:
            raise ValueError(f"rank deficient at column {col}")
        m[piv], m[sel] = m[sel], m[piv]
        pv = m[piv][col]
        m[piv] = [x / pv for x in m[piv]]
        for r in range(len(m)):
            if r != piv and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[piv])]
        piv += 1
    # consistency of surplus rows
    for r in range(piv, len(m)):
        assert all(x == 0 for x in m[r]), "inconsistent system"
    sol = [Fraction(0)] * n
    pr = 0
    for col in range(n):
        sol[col] = m[col][n]
    return sol


def fit(degree, jfunc, nsamples):
    basis = monomial_basis(degree, 3 * degree)
    rows, rhs = [], []
    for _ in range(nsamples):
        roots, c, a = random_sextic()
        rows.append([prodpow(a, e) for e in basis])
        rhs.append(jfunc(roots, c))
    sol = solve_exact(rows, rhs)
    # verify on fresh samples
    for _ in range(5):
        roots, c, a = random_sextic()
        val = sum(s * prodpow(a, e) for s, e in zip(sol, basis))
        assert val == jfunc(roots, c), f"verification failed for degree {degree}"
    return {e: s for e, s in zip(basis, sol) if s != 0}


def prodpow(a, e):
    v = Fraction(1)
    for x, p in zip(a, e):
        if p:
            v *= x ** p
    return v


def main():
    j2 = fit(2, j2_roots, 10)
    print("J2 terms:", len(j2))
    for e, cf in sorted(j2.items()):
        print("  ", e, cf)
    j4 = fit(4, j4_roots, 60)
    print("J4 terms:", len(j4))
    j6 = fit(6, j6_roots, 300)
    print("J6 terms:", len(j6))

    lines = [
        '"""Frozen coefficient tables for the Igusa invariants J2, J4, J6.',
        "",
        "Generated by tools/derive_igusa.py from the root-difference",
        "definitions; exponent vectors index a0..a6, values are exact",
        "integers or rationals (num, den) pairs.",
        '"""',
        "",
        "from fractions import Fraction",
        "",
    ]
    for name, table in (("J2_TERMS", j2), ("J4_TERMS", j4), ("J6_TERMS", j6)):
        lines.append(f"{name} = {{")
        for e, cf in sorted(table.items()):
            if cf.denominator == 1:
                lines.append(f"    {e}: Fraction({cf.numerator}),")
            else:
                lines.append(f"    {e}: Fraction({cf.numerator}, {cf.denominator}),")
        lines.append("}")
        lines.append("")
    with open("src/genus2split/_igusa_data.py", "w") as fh:
        fh.write("\n".join(lines))
    print("wrote src/genus2split/_igusa_data.py")


if __name__ == "__main__":
    main()
