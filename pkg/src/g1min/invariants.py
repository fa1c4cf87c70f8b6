"""Invariant computations for all model kinds.

Binary quartics carry (I, J, Delta) with Delta = (4 I^3 - J^2)/27.  Ternary
cubics carry (c4, c6, Delta) normalised so that c4(xyz) = 1, c6(xyz) = -1 and
c4^3 - c6^2 = 1728 Delta; the two invariant polynomials are frozen coefficient
tables generated by tools/derive_cubic_invariants.py (degree-4 and degree-6
generators of the invariant ring, pinned by the xyz normalisation).

(2,2)-forms, cubes and hypercubes carry the full set: c4, c6, Delta, the
a-invariants of a Weierstrass equation, a marked point (xi, eta), and the
weight-2/3 invariants u = 12 xi + b2 and v = 2 eta + a1 xi + a3 satisfying

    (108 v)^2 = (3 u)^3 - 27 c4 (3 u) - 54 c6.

a4 and a6 are recovered from c4 and c6 by exact divisions that double as
integrality checks; a division failure signals an implementation bug, never
bad input.
"""

from dataclasses import dataclass
from fractions import Fraction

from .exactnum import det_matrix, mat_mul
from .models import (
    BinaryQuartic, Cube, Hypercube, TernaryCubic, TwoTwoForm,
    HYPERCUBE_PAIRS, cubics_of_cube, forms_of_hypercube, quartics_of_22,
)


def _exact_div(num, den, what):
    """num / den, exact: Fractions divide freely, ints must divide evenly."""
    if isinstance(num, Fraction):
        from .models import _num

        return _num(num / den)
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"{what}: division by {den} is not exact")
    return q


def quartic_invariants(G):
    """(I, J, Delta) of a binary quartic; exact (integral for integral input)."""
    a, b, c, d, e = G.coeffs
    i_inv = 12 * a * e - 3 * b * d + c * c
    j_inv = 72 * a * c * e - 27 * a * d * d - 27 * b * b * e + 9 * b * c * d - 2 * c ** 3
    disc = _exact_div(4 * i_inv ** 3 - j_inv ** 2, 27, "quartic discriminant")
    return i_inv, j_inv, disc


# frozen invariant tables for ternary cubics: each term is (coefficient,
# monomial) with the monomial given as indices into the 10-vector of cubic
# coefficients (see models.CUBIC_MONOMIALS for the exponent order).
_C4_TERMS = (  # 25 terms
    (144, (0, 3, 7, 9)),
    (-48, (0, 3, 8, 8)),
    (-216, (0, 4, 6, 9)),
    (24, (0, 4, 7, 8)),
    (144, (0, 5, 6, 8)),
    (-48, (0, 5, 7, 7)),
    (-48, (1, 1, 7, 9)),
    (16, (1, 1, 8, 8)),
    (144, (1, 2, 6, 9)),
    (-16, (1, 2, 7, 8)),
    (24, (1, 3, 4, 9)),
    (-16, (1, 3, 5, 8)),
    (-8, (1, 4, 4, 8)),
    (24, (1, 4, 5, 7)),
    (-48, (1, 5, 5, 6)),
    (-48, (2, 2, 6, 8)),
    (16, (2, 2, 7, 7)),
    (-48, (2, 3, 3, 9)),
    (24, (2, 3, 4, 8)),
    (-16, (2, 3, 5, 7)),
    (-8, (2, 4, 4, 7)),
    (24, (2, 4, 5, 6)),
    (16, (3, 3, 5, 5)),
    (-8, (3, 4, 4, 5)),
    (1, (4, 4, 4, 4)),
)
_C6_TERMS = (  # 103 terms
    (5832, (0, 0, 6, 6, 9, 9)),
    (-3888, (0, 0, 6, 7, 8, 9)),
    (864, (0, 0, 6, 8, 8, 8)),
    (864, (0, 0, 7, 7, 7, 9)),
    (-216, (0, 0, 7, 7, 8, 8)),
    (-3888, (0, 1, 3, 6, 9, 9)),
    (1296, (0, 1, 3, 7, 8, 9)),
    (-288, (0, 1, 3, 8, 8, 8)),
    (1296, (0, 1, 4, 6, 8, 9)),
    (-864, (0, 1, 4, 7, 7, 9)),
    (144, (0, 1, 4, 7, 8, 8)),
    (1296, (0, 1, 5, 6, 7, 9)),
    (-864, (0, 1, 5, 6, 8, 8)),
    (144, (0, 1, 5, 7, 7, 8)),
    (1296, (0, 2, 3, 6, 8, 9)),
    (-864, (0, 2, 3, 7, 7, 9)),
    (144, (0, 2, 3, 7, 8, 8)),
    (1296, (0, 2, 4, 6, 7, 9)),
    (-864, (0, 2, 4, 6, 8, 8)),
    (144, (0, 2, 4, 7, 7, 8)),
    (-3888, (0, 2, 5, 6, 6, 9)),
    (1296, (0, 2, 5, 6, 7, 8)),
    (-288, (0, 2, 5, 7, 7, 7)),
    (864, (0, 3, 3, 3, 9, 9)),
    (-864, (0, 3, 3, 4, 8, 9)),
    (-864, (0, 3, 3, 5, 7, 9)),
    (576, (0, 3, 3, 5, 8, 8)),
    (648, (0, 3, 4, 4, 7, 9)),
    (72, (0, 3, 4, 4, 8, 8)),
    (1296, (0, 3, 4, 5, 6, 9)),
    (-720, (0, 3, 4, 5, 7, 8)),
    (-864, (0, 3, 5, 5, 6, 8)),
    (576, (0, 3, 5, 5, 7, 7)),
    (-540, (0, 4, 4, 4, 6, 9)),
    (-36, (0, 4, 4, 4, 7, 8)),
    (648, (0, 4, 4, 5, 6, 8)),
    (72, (0, 4, 4, 5, 7, 7)),
    (-864, (0, 4, 5, 5, 6, 7)),
    (864, (0, 5, 5, 5, 6, 6)),
    (864, (1, 1, 1, 6, 9, 9)),
    (-288, (1, 1, 1, 7, 8, 9)),
    (64, (1, 1, 1, 8, 8, 8)),
    (-864, (1, 1, 2, 6, 8, 9)),
    (576, (1, 1, 2, 7, 7, 9)),
    (-96, (1, 1, 2, 7, 8, 8)),
    (-216, (1, 1, 3, 3, 9, 9)),
    (144, (1, 1, 3, 4, 8, 9)),
    (144, (1, 1, 3, 5, 7, 9)),
    (-96, (1, 1, 3, 5, 8, 8)),
    (72, (1, 1, 4, 4, 7, 9)),
    (-48, (1, 1, 4, 4, 8, 8)),
    (-864, (1, 1, 4, 5, 6, 9)),
    (144, (1, 1, 4, 5, 7, 8)),
    (576, (1, 1, 5, 5, 6, 8)),
    (-216, (1, 1, 5, 5, 7, 7)),
    (-864, (1, 2, 2, 6, 7, 9)),
    (576, (1, 2, 2, 6, 8, 8)),
    (-96, (1, 2, 2, 7, 7, 8)),
    (144, (1, 2, 3, 3, 8, 9)),
    (-720, (1, 2, 3, 4, 7, 9)),
    (144, (1, 2, 3, 4, 8, 8)),
    (1296, (1, 2, 3, 5, 6, 9)),
    (-48, (1, 2, 3, 5, 7, 8)),
    (648, (1, 2, 4, 4, 6, 9)),
    (-24, (1, 2, 4, 4, 7, 8)),
    (-720, (1, 2, 4, 5, 6, 8)),
    (144, (1, 2, 4, 5, 7, 7)),
    (144, (1, 2, 5, 5, 6, 7)),
    (144, (1, 3, 3, 4, 5, 9)),
    (-96, (1, 3, 3, 5, 5, 8)),
    (-36, (1, 3, 4, 4, 4, 9)),
    (-24, (1, 3, 4, 4, 5, 8)),
    (144, (1, 3, 4, 5, 5, 7)),
    (-288, (1, 3, 5, 5, 5, 6)),
    (12, (1, 4, 4, 4, 4, 8)),
    (-36, (1, 4, 4, 4, 5, 7)),
    (72, (1, 4, 4, 5, 5, 6)),
    (864, (2, 2, 2, 6, 6, 9)),
    (-288, (2, 2, 2, 6, 7, 8)),
    (64, (2, 2, 2, 7, 7, 7)),
    (576, (2, 2, 3, 3, 7, 9)),
    (-216, (2, 2, 3, 3, 8, 8)),
    (-864, (2, 2, 3, 4, 6, 9)),
    (144, (2, 2, 3, 4, 7, 8)),
    (144, (2, 2, 3, 5, 6, 8)),
    (-96, (2, 2, 3, 5, 7, 7)),
    (72, (2, 2, 4, 4, 6, 8)),
    (-48, (2, 2, 4, 4, 7, 7)),
    (144, (2, 2, 4, 5, 6, 7)),
    (-216, (2, 2, 5, 5, 6, 6)),
    (-288, (2, 3, 3, 3, 5, 9)),
    (72, (2, 3, 3, 4, 4, 9)),
    (144, (2, 3, 3, 4, 5, 8)),
    (-96, (2, 3, 3, 5, 5, 7)),
    (-36, (2, 3, 4, 4, 4, 8)),
    (-24, (2, 3, 4, 4, 5, 7)),
    (144, (2, 3, 4, 5, 5, 6)),
    (12, (2, 4, 4, 4, 4, 7)),
    (-36, (2, 4, 4, 4, 5, 6)),
    (64, (3, 3, 3, 5, 5, 5)),
    (-48, (3, 3, 4, 4, 5, 5)),
    (12, (3, 4, 4, 4, 4, 5)),
    (-1, (4, 4, 4, 4, 4, 4)),
)


def _eval_terms(terms, coeffs):
    tot = 0
    for c, mono in terms:
        prod = c
        for n in mono:
            prod *= coeffs[n]
        tot += prod
    return tot


def cubic_invariants(F):
    """(c4, c6, Delta) of a ternary cubic under the xyz normalisation."""
    c4 = _eval_terms(_C4_TERMS, F.coeffs)
    c6 = _eval_terms(_C6_TERMS, F.coeffs)
    disc = _exact_div(c4 ** 3 - c6 ** 2, 1728, "cubic discriminant")
    return c4, c6, disc


@dataclass(frozen=True)
class InvariantSet:
    """Full invariant data of a model with a marked point."""

    c4: int
    c6: int
    disc: int
    a_invariants: tuple  # (a1, a2, a3, a4, a6)
    xi: int
    eta: int
    u: int
    v: int

    @property
    def point(self):
        return (self.xi, self.eta)

    def curve(self):
        from .weierstrass import WeierstrassCurve

        return WeierstrassCurve(*self.a_invariants)


def _a4_a6_from(c4, c6, a1, a2, a3, what):
    b2 = a1 * a1 + 4 * a2
    b4 = _exact_div(b2 * b2 - c4, 24, f"{what} b4 recovery")
    b6 = _exact_div(-(b2 ** 3) + 36 * b2 * b4 - c6, 216, f"{what} b6 recovery")
    a4 = _exact_div(b4 - a1 * a3, 2, f"{what} a4 recovery")
    a6 = _exact_div(b6 - a3 * a3, 4, f"{what} a6 recovery")
    return a4, a6


def _check_syzygy(inv, what):
    lhs = (108 * inv.v) ** 2
    rhs = (3 * inv.u) ** 3 - 27 * inv.c4 * (3 * inv.u) - 54 * inv.c6
    if lhs != rhs:
        raise AssertionError(f"{what}: weight-2/3 syzygy failed")
    a1, a2, a3, a4, a6 = inv.a_invariants
    xi, eta = inv.xi, inv.eta
    if eta * eta + a1 * xi * eta + a3 * eta != xi ** 3 + a2 * xi * xi + a4 * xi + a6:
        raise AssertionError(f"{what}: marked point is not on the curve")


def form22_invariants(F):
    """InvariantSet of a (2,2)-form (exact; both derived quartics must agree)."""
    g1, g2 = quartics_of_22(F)
    i1, j1, _ = quartic_invariants(g1)
    i2, j2, _ = quartic_invariants(g2)
    if (i1, j1) != (i2, j2):
        raise AssertionError("the two quartics of a (2,2)-form disagree on I, J")
    c4 = i1
    c6 = _exact_div(j1, 2, "(2,2) second invariant")
    disc = _exact_div(c4 ** 3 - c6 ** 2, 1728, "(2,2) discriminant")
    a = F.rows
    xi = a[0][0] * a[2][2] + a[0][2] * a[2][0]
    eta = a[0][0] * a[1][1] * a[2][2]
    a1 = -a[1][1]
    a2 = -(a[0][0] * a[2][2] + a[0][1] * a[2][1] + a[0][2] * a[2][0] + a[1][0] * a[1][2])
    a3 = (a[0][1] * a[1][2] * a[2][0] + a[0][2] * a[1][0] * a[2][1]
          - a[0][0] * a[1][2] * a[2][1] - a[0][1] * a[1][0] * a[2][2])
    a4, a6 = _a4_a6_from(c4, c6, a1, a2, a3, "(2,2)-form")
    u = 12 * xi + a1 * a1 + 4 * a2
    v = 2 * eta + a1 * xi + a3
    if v != det_matrix(a):
        raise AssertionError("v of a (2,2)-form must equal det(a_ij)")
    inv = InvariantSet(c4, c6, disc, (a1, a2, a3, a4, a6), xi, eta, u, v)
    _check_syzygy(inv, "(2,2)-form")
    return inv


def _adj3(m):
    out = []
    for i in range(3):
        row = []
        for j in range(3):
            r = [x for x in range(3) if x != j]
            c = [x for x in range(3) if x != i]
            minor = m[r[0]][c[0]] * m[r[1]][c[1]] - m[r[0]][c[1]] * m[r[1]][c[0]]
            row.append(minor if (i + j) % 2 == 0 else -minor)
        out.append(tuple(row))
    return tuple(out)


def _tr(m):
    return m[0][0] + m[1][1] + m[2][2]


def _mat_add(a, b, sign=1):
    return tuple(tuple(x + sign * y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def cube_invariants(S):
    """InvariantSet of a 3x3x3 cube (marked-point data from the first slicing)."""
    f1, f2, f3 = cubics_of_cube(S)
    c4, c6, disc = cubic_invariants(f1)
    for other in (f2, f3):
        if cubic_invariants(other)[:2] != (c4, c6):
            raise AssertionError("cube slicings disagree on c4, c6")
    m0, n0, p0 = S.slices(0)
    # adj(la*N + mu*P) M = la^2 A + la mu B + mu^2 C
    a_mat = mat_mul(_adj3(n0), m0)
    c_mat = mat_mul(_adj3(p0), m0)
    mixed = _mat_add(_mat_add(_adj3(_mat_add(n0, p0)), _adj3(n0), -1), _adj3(p0), -1)
    b_mat = mat_mul(mixed, m0)
    xi = -_tr(mat_mul(a_mat, c_mat))
    eta = -_tr(mat_mul(mat_mul(c_mat, b_mat), a_mat))
    a1 = _tr(b_mat)
    a2 = (_tr(mat_mul(a_mat, c_mat)) + _tr(a_mat) * _tr(c_mat) - _tr(_adj3(b_mat)))
    tr_abc = _tr(mat_mul(mat_mul(a_mat, b_mat), c_mat))
    tr_cba = _tr(mat_mul(mat_mul(c_mat, b_mat), a_mat))
    a3 = tr_abc + tr_cba + _tr(mat_mul(a_mat, c_mat)) * a1
    a4, a6 = _a4_a6_from(c4, c6, a1, a2, a3, "cube")
    u = 12 * xi + a1 * a1 + 4 * a2
    v = 2 * eta + a1 * xi + a3
    if v != tr_abc - tr_cba:
        raise AssertionError("v of a cube must equal tr(ABC) - tr(CBA)")
    inv = InvariantSet(c4, c6, disc, (a1, a2, a3, a4, a6), xi, eta, u, v)
    _check_syzygy(inv, "cube")
    return inv


# the three axis pairings of a hypercube; each pairing gives one marked point
HYPERCUBE_PAIRINGS = (((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2)))


@dataclass(frozen=True)
class HypercubeInvariants:
    c4: int
    c6: int
    disc: int
    pair_invariants: tuple  # three InvariantSets, one per pairing (from the first form)

    @property
    def points_on_common_model(self):
        """The three marked points (3u, 108v) on y^2 = x^3 - 27 c4 x - 54 c6."""
        return tuple((3 * inv.u, 108 * inv.v) for inv in self.pair_invariants)


def hypercube_invariants(H):
    """Common invariants plus the three marked points of a hypercube."""
    forms = forms_of_hypercube(H)
    sets = {pair: form22_invariants(forms[pair]) for pair in HYPERCUBE_PAIRS}
    base = sets[(0, 1)]
    for pair in HYPERCUBE_PAIRS:
        if (sets[pair].c4, sets[pair].c6) != (base.c4, base.c6):
            raise AssertionError("hypercube forms disagree on c4, c6")
    pair_sets = []
    for first, second in HYPERCUBE_PAIRINGS:
        if (sets[first].u, sets[first].v) != (sets[second].u, sets[second].v):
            raise AssertionError(f"paired forms {first}/{second} disagree on (u, v)")
        pair_sets.append(sets[first])
    return HypercubeInvariants(base.c4, base.c6, base.disc, tuple(pair_sets))


def discriminant(m):
    """Delta of any model kind."""
    if isinstance(m, BinaryQuartic):
        return quartic_invariants(m)[2]
    if isinstance(m, TwoTwoForm):
        g1, _ = quartics_of_22(m)
        i1, j1, _ = quartic_invariants(g1)
        c6 = _exact_div(j1, 2, "(2,2) second invariant")
        return _exact_div(i1 ** 3 - c6 ** 2, 1728, "(2,2) discriminant")
    if isinstance(m, TernaryCubic):
        return cubic_invariants(m)[2]
    if isinstance(m, Cube):
        return cubic_invariants(cubics_of_cube(m)[0])[2]
    if isinstance(m, Hypercube):
        return discriminant(forms_of_hypercube(m)[(0, 1)])
    raise TypeError(f"not a model: {m!r}")
