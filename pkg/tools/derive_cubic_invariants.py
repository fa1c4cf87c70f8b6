"""Regenerate the frozen ternary-cubic invariant tables in g1min.invariants.

A ternary cubic sum c_e x^e (ten coefficients, exponent order as in
g1min.models.CUBIC_MONOMIALS) has a ring of SL3-invariants generated in
degrees 4 and 6.  This script finds both generators as the common kernel of
the infinitesimal unipotent substitutions x_j -> x_j + t x_i acting on the
isobaric monomial basis, normalises them so that

    c4(xyz) = 1,  c6(xyz) = -1,

and prints the coefficient tables in the exact format used by the library.
Run `python tools/derive_cubic_invariants.py` and compare with the _C4_TERMS
and _C6_TERMS literals; a suite of checks (Weierstrass cubics reproduce the
curve's own c4/c6, integrality of (c4^3 - c6^2)/1728, weight-4/6 covariance)
runs first and aborts on any mismatch.
"""

import random
from fractions import Fraction
from itertools import combinations_with_replacement
from math import gcd, lcm

EXPS = sorted(
    {(i, j, 3 - i - j) for i in range(4) for j in range(4) if i + j <= 3},
    reverse=True,
)
EIDX = {e: n for n, e in enumerate(EXPS)}


def isobaric_monomials(d):
    out = []
    for combo in combinations_with_replacement(range(len(EXPS)), d):
        tot = [0, 0, 0]
        for n in combo:
            for axis in range(3):
                tot[axis] += EXPS[n][axis]
        if tot == [d, d, d]:
            out.append(combo)
    return out


def apply_derivation(mono, i, j):
    """D_ij of a coefficient monomial, where D_ij c_e = (e_j + 1) c_{e - eps_i + eps_j}."""
    out = {}
    for pos in range(len(mono)):
        e = EXPS[mono[pos]]
        if e[i] < 1:
            continue
        e2 = list(e)
        e2[i] -= 1
        e2[j] += 1
        new = list(mono)
        new[pos] = EIDX[tuple(e2)]
        key = tuple(sorted(new))
        out[key] = out.get(key, 0) + e[j] + 1
    return out


def nullspace(rows, ncols):
    dense = []
    for r in rows:
        v = [Fraction(0)] * ncols
        for c, x in r.items():
            v[c] = Fraction(x)
        dense.append(v)
    pivots, rank = [], 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(dense)) if dense[r][col]), None)
        if piv is None:
            continue
        dense[rank], dense[piv] = dense[piv], dense[rank]
        pv = dense[rank][col]
        dense[rank] = [x / pv for x in dense[rank]]
        for r in range(len(dense)):
            if r != rank and dense[r][col]:
                f = dense[r][col]
                dense[r] = [a - f * b for a, b in zip(dense[r], dense[rank])]
        pivots.append(col)
        rank += 1
    basis = []
    for fc in (c for c in range(ncols) if c not in pivots):
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -dense[r][fc]
        basis.append(v)
    return basis


def derive(degree):
    basis = isobaric_monomials(degree)
    bidx = {m: n for n, m in enumerate(basis)}
    rows = []
    for i in range(3):
        for j in range(3):
            if i == j:
                continue
            img = {}
            for n, m in enumerate(basis):
                for key, coef in apply_derivation(m, i, j).items():
                    img.setdefault(key, {})[n] = img.get(key, {}).get(n, 0) + coef
            rows.extend(img.values())
    sols = nullspace(rows, len(basis))
    assert len(sols) == 1, f"degree {degree}: invariant space is not one-dimensional"
    sol = sols[0]
    den = 1
    for x in sol:
        den = lcm(den, x.denominator)
    ints = [int(x * den) for x in sol]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return basis, [x // g for x in ints]


def evaluate(basis, coeffs, values):
    tot = 0
    for m, c in zip(basis, coeffs):
        if c:
            prod = c
            for n in m:
                prod *= values[n]
            tot += prod
    return tot


def coeff_vector(poly):
    return [poly.get(e, 0) for e in EXPS]


def substitute(poly, mat):
    out = {}
    for e, c in poly.items():
        terms = {(0, 0, 0): c}
        for var in range(3):
            for _ in range(e[var]):
                nxt = {}
                for mono, cc in terms.items():
                    for m in range(3):
                        if mat[m][var]:
                            key = list(mono)
                            key[m] += 1
                            key = tuple(key)
                            nxt[key] = nxt.get(key, 0) + cc * mat[m][var]
                terms = nxt
        for mono, cc in terms.items():
            out[mono] = out.get(mono, 0) + cc
    return {k: v for k, v in out.items() if v}


def det3(m):
    return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))


def main():
    b4, s4 = derive(4)
    b6, s6 = derive(6)
    xyz = coeff_vector({(1, 1, 1): 1})
    c4 = [Fraction(c, evaluate(b4, s4, xyz)) for c in s4]
    c6 = [Fraction(-c, evaluate(b6, s6, xyz)) for c in s6]
    assert all(c.denominator == 1 for c in c4 + c6)

    rng = random.Random(1)
    for _ in range(50):
        a1, a2, a3, a4, a6 = (rng.randint(-8, 8) for _ in range(5))
        w = coeff_vector({(0, 2, 1): 1, (1, 1, 1): a1, (0, 1, 2): a3,
                          (3, 0, 0): -1, (2, 0, 1): -a2, (1, 0, 2): -a4, (0, 0, 3): -a6})
        b2 = a1 * a1 + 4 * a2
        bb4 = a1 * a3 + 2 * a4
        bb6 = a3 * a3 + 4 * a6
        assert evaluate(b4, c4, w) == b2 * b2 - 24 * bb4
        assert evaluate(b6, c6, w) == -b2 ** 3 + 36 * b2 * bb4 - 216 * bb6

    for _ in range(100):
        w = [rng.randint(-9, 9) for _ in range(10)]
        assert (evaluate(b4, c4, w) ** 3 - evaluate(b6, c6, w) ** 2) % 1728 == 0

    for _ in range(20):
        while True:
            mat = [[rng.randint(-3, 3) for _ in range(3)] for _ in range(3)]
            if det3(mat):
                break
        poly = {e: rng.randint(-5, 5) for e in EXPS}
        before4 = evaluate(b4, c4, coeff_vector(poly))
        before6 = evaluate(b6, c6, coeff_vector(poly))
        after = coeff_vector(substitute(poly, mat))
        assert evaluate(b4, c4, after) == det3(mat) ** 4 * before4
        assert evaluate(b6, c6, after) == det3(mat) ** 6 * before6

    for name, basis, coeffs in (("_C4_TERMS", b4, c4), ("_C6_TERMS", b6, c6)):
        lines = [f"    ({int(c)}, {tuple(m)})," for m, c in zip(basis, coeffs) if c]
        print(f"{name} = (  # {len(lines)} terms")
        print("\n".join(lines))
        print(")")


if __name__ == "__main__":
    main()
