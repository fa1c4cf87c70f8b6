"""Residue-field classification of model reductions mod p.

All searches are exhaustive over small projective spaces and work in every
characteristic (the defining equations and all partial derivatives are checked
directly, so p = 2 and p = 3 need no special casing).  Search sizes are capped
by a prime bound, overridable through the G1MIN_PRIME_BOUND environment
variable: (p+1)^2 points for P^1 x P^1 and p^2+p+1 for P^2 enumerations.
"""

import os
from dataclasses import dataclass

from .exactnum import fp_inv, fp_left_kernel_vector
from .models import Cube, Hypercube, CUBIC_MONOMIALS

P1P1_DEFAULT_BOUND = 1 << 16
P2_DEFAULT_BOUND = 1 << 10


class PrimeBoundError(ValueError):
    """Raised when a residue search would exceed the configured prime bound."""


def _prime_bound(default):
    env = os.environ.get("G1MIN_PRIME_BOUND")
    return int(env) if env else default


def _check_bound(p, default, what):
    bound = _prime_bound(default)
    if p > bound:
        raise PrimeBoundError(f"{what} search needs p <= {bound}, got {p}")


# ---------------------------------------------------------------------------
# binary forms over F_p (coefficient tuples, x1-degree descending)


def projective_line_points(p):
    """All points of P^1(F_p) as normalised pairs (a, b)."""
    return [(1, t) for t in range(p)] + [(0, 1)]


def _root_linear_form(point):
    # (a : b) is the zero of b*x1 - a*x2
    a, b = point
    return (b, -a)


def binary_divide_linear(coeffs, ell, p):
    """Quotient of a binary form by c1*x1 + c2*x2 mod p, or None."""
    c1, c2 = ell[0] % p, ell[1] % p
    d = len(coeffs) - 1
    if c1 % p:
        w = c2 * fp_inv(c1, p) % p
        q = []
        prev = 0
        for i in range(d):
            cur = (coeffs[i] - w * prev) % p
            q.append(cur)
            prev = cur
        rem = (coeffs[d] - w * prev) % p
        if rem:
            return None
        inv = fp_inv(c1, p)
        return tuple(x * inv % p for x in q)
    if coeffs[0] % p:
        return None
    inv = fp_inv(c2, p)
    return tuple(x * inv % p for x in coeffs[1:])


def binary_root_multiplicity(coeffs, point, p):
    ell = _root_linear_form(point)
    mult = 0
    cur = tuple(c % p for c in coeffs)
    while len(cur) >= 1:
        nxt = binary_divide_linear(cur, ell, p) if len(cur) > 1 else None
        if nxt is None:
            break
        mult += 1
        cur = nxt
    return mult


def binary_roots(coeffs, p):
    """[(point, multiplicity)] over F_p for a nonzero binary form."""
    out = []
    for pt in projective_line_points(p):
        m = binary_root_multiplicity(coeffs, pt, p)
        if m:
            out.append((pt, m))
    return out


def _strip_rational_roots(coeffs, p):
    """(roots with multiplicity, rootless cofactor) of a nonzero binary form."""
    roots = binary_roots(coeffs, p)
    cur = tuple(c % p for c in coeffs)
    for pt, m in roots:
        ell = _root_linear_form(pt)
        for _ in range(m):
            cur = binary_divide_linear(cur, ell, p)
    return roots, cur


def _is_square_form(coeffs, p):
    """Whether a rootless binary form is a scalar times the square of a quadratic."""
    d = len(coeffs) - 1
    if d < 2:
        return False
    if d == 2:
        return False  # rootless quadratics are irreducible, hence separable
    assert d == 4
    if p == 2:
        return coeffs[1] % 2 == 0 and coeffs[3] % 2 == 0
    lead = coeffs[0] % p
    if lead == 0:  # rootless quartics have nonzero ends
        return False
    inv = fp_inv(lead, p)
    m3, m2, m1, m0 = (c * inv % p for c in coeffs[1:])
    inv2 = fp_inv(2, p)
    beta = m3 * inv2 % p
    gamma = (m2 - beta * beta) * inv2 % p
    return (2 * beta * gamma - m1) % p == 0 and (gamma * gamma - m0) % p == 0


def repeated_root(coeffs, p):
    """The unique multiple root of a nonzero binary form over the algebraic
    closure, provided it is F_p-rational; None otherwise."""
    if all(c % p == 0 for c in coeffs):
        raise ValueError("zero form")
    roots, cofactor = _strip_rational_roots(coeffs, p)
    multiple = [pt for pt, m in roots if m >= 2]
    if len(multiple) != 1:
        return None
    if _is_square_form(cofactor, p):
        return None  # extra conjugate double roots
    return multiple[0]


# ---------------------------------------------------------------------------
# (2,2)-forms

TAG_ZERO = "zero"
TAG_PRODUCT_BOTH = "product_both_repeated"
TAG_PRODUCT_ONE = "product_one_repeated"
TAG_PRODUCT_NONE = "product_none_repeated"
TAG_UNIQUE_SINGULAR = "unique_singular_point"
TAG_OTHER = "other"


@dataclass(frozen=True)
class Residue22Class:
    tag: str
    x_root: tuple = None
    y_root: tuple = None
    repeated_side: str = None
    point: tuple = None

    def a_rational_singular_point(self):
        """Some F_p-point of the singular locus, when the tag guarantees one."""
        if self.tag == TAG_UNIQUE_SINGULAR:
            return self.point
        if self.tag == TAG_PRODUCT_BOTH:
            return (self.x_root, self.y_root)
        if self.tag == TAG_PRODUCT_ONE:
            if self.repeated_side == "x":
                return (self.x_root, (1, 0))
            return ((1, 0), self.y_root)
        return None


def _form22_residue_rows(F, p):
    return tuple(tuple(x % p for x in row) for row in F.rows)


def _eval_22(rows, xpt, ypt):
    x1, x2 = xpt
    y1, y2 = ypt
    mx = (x1 * x1, x1 * x2, x2 * x2)
    my = (y1 * y1, y1 * y2, y2 * y2)
    return sum(rows[r][c] * mx[r] * my[c] for r in range(3) for c in range(3))


def _singular_points_22(rows, p):
    pts = []
    line = projective_line_points(p)
    for xpt in line:
        x1, x2 = xpt
        dx1 = (2 * x1, x2, 0)
        dx2 = (0, x1, 2 * x2)
        mx = (x1 * x1, x1 * x2, x2 * x2)
        for ypt in line:
            y1, y2 = ypt
            my = (y1 * y1, y1 * y2, y2 * y2)
            dy1 = (2 * y1, y2, 0)
            dy2 = (0, y1, 2 * y2)
            ok = True
            for vx, vy in ((mx, my), (dx1, my), (dx2, my), (mx, dy1), (mx, dy2)):
                tot = sum(rows[r][c] * vx[r] * vy[c] for r in range(3) for c in range(3))
                if tot % p:
                    ok = False
                    break
            if ok:
                pts.append((xpt, ypt))
    return pts


def _quadratic_repeated_point(coeffs, p):
    """The double root of a quadratic form, or None (always rational if any)."""
    if all(c % p == 0 for c in coeffs):
        return None
    roots = binary_roots(coeffs, p)
    for pt, m in roots:
        if m >= 2:
            return pt
    return None


def classify_22_residue(F, ctx):
    """Classify the reduction mod p of a (2,2)-form, with witnesses."""
    p = ctx.p
    rows = _form22_residue_rows(F, p)
    if all(x == 0 for row in rows for x in row):
        return Residue22Class(TAG_ZERO)
    rank = _rank3(rows, p)
    if rank == 1:
        # f = g(x) h(y): witnesses from any nonzero row/column
        r0 = next(r for r in range(3) if any(rows[r]))
        c0 = next(c for c in range(3) if rows[r0][c])
        h = rows[r0]
        inv = fp_inv(rows[r0][c0], p)
        g = tuple(rows[r][c0] * inv % p for r in range(3))
        xr = _quadratic_repeated_point(g, p)
        yr = _quadratic_repeated_point(h, p)
        if xr is not None and yr is not None:
            return Residue22Class(TAG_PRODUCT_BOTH, x_root=xr, y_root=yr)
        if xr is not None:
            return Residue22Class(TAG_PRODUCT_ONE, x_root=xr, repeated_side="x")
        if yr is not None:
            return Residue22Class(TAG_PRODUCT_ONE, y_root=yr, repeated_side="y")
        return Residue22Class(TAG_PRODUCT_NONE)
    _check_bound(p, P1P1_DEFAULT_BOUND, "P1 x P1 singular-point")
    sing = _singular_points_22(rows, p)
    if len(sing) == 1:
        return Residue22Class(TAG_UNIQUE_SINGULAR, point=sing[0])
    return Residue22Class(TAG_OTHER)


def _rank3(rows, p):
    from .exactnum import fp_rank

    return fp_rank(rows, p)


# ---------------------------------------------------------------------------
# ternary cubics

TAG_REPEATED_LINE = "repeated_linear_factor"


@dataclass(frozen=True)
class ResidueCubicClass:
    tag: str
    factor: tuple = None  # linear form (l1, l2, l3)
    point: tuple = None   # projective point (a, b, c)


def projective_plane_points(p):
    pts = [(1, b, c) for b in range(p) for c in range(p)]
    pts += [(0, 1, c) for c in range(p)]
    pts.append((0, 0, 1))
    return pts


def _cubic_residue(F, p):
    return {e: c % p for e, c in zip(CUBIC_MONOMIALS, F.coeffs) if c % p}


def ternary_divide_linear(fdict, ell, p, degree):
    """Quotient of a homogeneous trivariate form by l1 x + l2 y + l3 z, or None."""
    ell = tuple(x % p for x in ell)
    piv = next((i for i in range(3) if ell[i]), None)
    if piv is None:
        raise ValueError("zero linear form")
    inv = fp_inv(ell[piv], p)
    red = [x * inv % p for x in ell]
    rest = [i for i in range(3) if i != piv]
    # divide treating x_piv as the leading variable
    q = {}
    work = dict(fdict)
    for dpiv in range(degree, 0, -1):
        for e in sorted([e for e in work if e[piv] == dpiv]):
            c = work[e] % p
            if not c:
                continue
            qe = list(e)
            qe[piv] -= 1
            q[tuple(qe)] = c
            # subtract c * x^qe * ell
            for i in range(3):
                if red[i] == 0 and i != piv:
                    continue
                te = list(qe)
                te[i] += 1
                te = tuple(te)
                coef = c if i == piv else c * red[i] % p
                work[te] = (work.get(te, 0) - coef) % p
    if any(v % p for e, v in work.items()):
        return None
    return {e: v for e, v in q.items() if v % p}


def projective_linear_forms(p):
    return projective_plane_points(p)


def _linear_factors(fdict, p, degree):
    """All rational linear factors with multiplicities."""
    out = []
    for ell in projective_linear_forms(p):
        cur = fdict
        deg = degree
        mult = 0
        while deg >= 1:
            nxt = ternary_divide_linear(cur, ell, p, deg)
            if nxt is None:
                break
            mult += 1
            cur = nxt
            deg -= 1
        if mult:
            out.append((ell, mult))
    return out


def _eval_trivariate(fdict, pt, p):
    tot = 0
    for e, c in fdict.items():
        tot += c * pt[0] ** e[0] * pt[1] ** e[1] * pt[2] ** e[2]
    return tot % p


def _partial(fdict, var):
    out = {}
    for e, c in fdict.items():
        if e[var] == 0:
            continue
        ne = list(e)
        ne[var] -= 1
        out[tuple(ne)] = out.get(tuple(ne), 0) + c * e[var]
    return out


def _singular_points_trivariate(fdict, p):
    parts = [_partial(fdict, v) for v in range(3)]
    pts = []
    for pt in projective_plane_points(p):
        if _eval_trivariate(fdict, pt, p):
            continue
        if all(_eval_trivariate(q, pt, p) == 0 for q in parts):
            pts.append(pt)
    return pts


def classify_cubic_residue(F, ctx):
    """Classify the reduction mod p of a ternary cubic, with witnesses."""
    p = ctx.p
    f = _cubic_residue(F, p)
    if not f:
        return ResidueCubicClass(TAG_ZERO)
    _check_bound(p, P2_DEFAULT_BOUND, "P^2 residue")
    factors = _linear_factors(f, p, 3)
    for ell, mult in factors:
        if mult >= 2:
            return ResidueCubicClass(TAG_REPEATED_LINE, factor=ell)
    sing = _singular_points_trivariate(f, p)
    if len(sing) != 1:
        return ResidueCubicClass(TAG_OTHER)
    pt = sing[0]
    # certify uniqueness over the closure: the only non-obvious case is a
    # rational line times a conic that is an irrational line pair; then the
    # conic's vertex is the found point and uniqueness needs it to lie on the
    # stripped line as well.
    if len(factors) == 1 and factors[0][1] == 1:
        ell = factors[0][0]
        conic = ternary_divide_linear(f, ell, p, 3)
        if not _linear_factors(conic, p, 2):  # conic irreducible over F_p
            vertex = _conic_singular_point(conic, p)
            if vertex is not None:
                assert vertex == pt, "rational singular point differs from the conic vertex"
                if _eval_trivariate({(1, 0, 0): ell[0], (0, 1, 0): ell[1], (0, 0, 1): ell[2]}, pt, p):
                    return ResidueCubicClass(TAG_OTHER)
    return ResidueCubicClass(TAG_UNIQUE_SINGULAR, point=pt)


def _conic_singular_point(conic, p):
    parts = [_partial(conic, v) for v in range(3)]
    for pt in projective_plane_points(p):
        if _eval_trivariate(conic, pt, p):
            continue
        if all(_eval_trivariate(q, pt, p) == 0 for q in parts):
            return pt
    return None


# ---------------------------------------------------------------------------
# saturation


def saturation_defect(m, ctx):
    """(axis, residue kernel vector) witnessing slice dependence, or None."""
    p = ctx.p
    if isinstance(m, Cube):
        for axis in range(3):
            rows = [tuple(x for row in sl for x in row) for sl in m.slices(axis)]
            ker = fp_left_kernel_vector(rows, p)
            if ker is not None:
                return axis, ker
        return None
    if isinstance(m, Hypercube):
        for axis in range(4):
            rows = m.slice_pair(axis)
            ker = fp_left_kernel_vector(rows, p)
            if ker is not None:
                return axis, ker
        return None
    raise TypeError("saturation is defined for cubes and hypercubes")
