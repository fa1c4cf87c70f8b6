"""Integral Weierstrass equations, the exact group law, local minimal models
(Tate's algorithm at any prime, including 2 and 3), kappa of a marked point,
and the level of a genus-one model.

The level of an integral nonsingular model m with Jacobian data (E, P) is the
integer l >= 0 in

    v(Delta(m)) = v(Delta_min(E)) + 12 kappa(P) + 12 l,

where kappa(P) = 0 if P is integral on a minimal model of E and kappa(P) = r
if v(x_P) = -2r there.  Hypercubes carry three marked points and use the max
of their kappas.
"""

from dataclasses import dataclass
from fractions import Fraction

from .exactnum import INFINITY, LocalContext, fp_inv, fp_sqrt, valuation
from .invariants import cube_invariants, form22_invariants, hypercube_invariants
from .models import Cube, Hypercube, TwoTwoForm


@dataclass(frozen=True)
class WeierstrassCurve:
    a1: int
    a2: int
    a3: int
    a4: int
    a6: int

    @property
    def b2(self):
        return self.a1 * self.a1 + 4 * self.a2

    @property
    def b4(self):
        return self.a1 * self.a3 + 2 * self.a4

    @property
    def b6(self):
        return self.a3 * self.a3 + 4 * self.a6

    @property
    def b8(self):
        return (self.a1 * self.a1 * self.a6 + 4 * self.a2 * self.a6
                - self.a1 * self.a3 * self.a4 + self.a2 * self.a3 * self.a3
                - self.a4 * self.a4)

    @property
    def c4(self):
        return self.b2 * self.b2 - 24 * self.b4

    @property
    def c6(self):
        return -self.b2 ** 3 + 36 * self.b2 * self.b4 - 216 * self.b6

    @property
    def disc(self):
        return (-self.b2 * self.b2 * self.b8 - 8 * self.b4 ** 3
                - 27 * self.b6 * self.b6 + 9 * self.b2 * self.b4 * self.b6)

    def a_invariants(self):
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    def is_integral(self):
        return all(not isinstance(a, Fraction) for a in self.a_invariants())

    def rhs(self, x):
        return x ** 3 + self.a2 * x * x + self.a4 * x + self.a6


@dataclass(frozen=True)
class Point:
    """Affine point or the point at infinity (x = y = None)."""

    x: object = None
    y: object = None

    @classmethod
    def infinity(cls):
        return cls(None, None)

    @property
    def is_infinity(self):
        return self.x is None

    def __iter__(self):
        return iter((self.x, self.y))


def on_curve(E, P):
    if P.is_infinity:
        return True
    x, y = Fraction(P.x), Fraction(P.y)
    return y * y + E.a1 * x * y + E.a3 * y == E.rhs(x)


def point_neg(E, P):
    if P.is_infinity:
        return P
    x, y = Fraction(P.x), Fraction(P.y)
    return Point(x, -y - E.a1 * x - E.a3)


def point_add(E, P, Q):
    """Exact rational addition on a Weierstrass curve in long form."""
    if not on_curve(E, P) or not on_curve(E, Q):
        raise ValueError("point not on curve")
    if P.is_infinity:
        return Q
    if Q.is_infinity:
        return P
    x1, y1 = Fraction(P.x), Fraction(P.y)
    x2, y2 = Fraction(Q.x), Fraction(Q.y)
    if x1 == x2:
        if y2 == -y1 - E.a1 * x1 - E.a3:
            return Point.infinity()
        lam = (3 * x1 * x1 + 2 * E.a2 * x1 + E.a4 - E.a1 * y1) / (2 * y1 + E.a1 * x1 + E.a3)
    else:
        lam = (y2 - y1) / (x2 - x1)
    nu = y1 - lam * x1
    x3 = lam * lam + E.a1 * lam - E.a2 - x1 - x2
    y3 = -(lam + E.a1) * x3 - nu - E.a3
    return Point(x3, y3)


def point_double(E, P):
    return point_add(E, P, P)


def point_mul(E, n, P):
    if n < 0:
        return point_mul(E, -n, point_neg(E, P))
    R = Point.infinity()
    while n:
        if n & 1:
            R = point_add(E, R, P)
        P = point_add(E, P, P)
        n >>= 1
    return R


@dataclass(frozen=True)
class CurveMap:
    """Coordinate change x = u^2 x' + r, y = u^3 y' + s u^2 x' + t."""

    u: Fraction
    r: Fraction
    s: Fraction
    t: Fraction

    @classmethod
    def identity(cls):
        return cls(Fraction(1), Fraction(0), Fraction(0), Fraction(0))

    def apply(self, E):
        u, r, s, t = (Fraction(v) for v in (self.u, self.r, self.s, self.t))
        a1 = (E.a1 + 2 * s) / u
        a2 = (E.a2 - s * E.a1 + 3 * r - s * s) / u ** 2
        a3 = (E.a3 + r * E.a1 + 2 * t) / u ** 3
        a4 = (E.a4 - s * E.a3 + 2 * r * E.a2 - (t + r * s) * E.a1 + 3 * r * r - 2 * s * t) / u ** 4
        a6 = (E.a6 + r * E.a4 + r * r * E.a2 + r ** 3 - t * E.a3 - t * t - r * t * E.a1) / u ** 6
        from .models import _num

        return WeierstrassCurve(*(_num(a) for a in (a1, a2, a3, a4, a6)))

    def apply_point(self, P):
        if P.is_infinity:
            return P
        u, r, s, t = (Fraction(v) for v in (self.u, self.r, self.s, self.t))
        x, y = Fraction(P.x), Fraction(P.y)
        xp = (x - r) / u ** 2
        yp = (y - s * (x - r) - t) / u ** 3
        return Point(xp, yp)

    def then(self, other):
        """The map applying self first, then other."""
        u1, r1, s1, t1 = self.u, self.r, self.s, self.t
        u2, r2, s2, t2 = other.u, other.r, other.s, other.t
        return CurveMap(
            u1 * u2,
            r1 + u1 * u1 * r2,
            s1 + u1 * s2,
            t1 + u1 * u1 * r2 * s1 + u1 ** 3 * t2,
        )


def _translate(E, r=0, s=0, t=0):
    return CurveMap(Fraction(1), Fraction(r), Fraction(s), Fraction(t))


def _fp_quadratic_roots(a, b, p):
    """Roots of Y^2 + a Y + b over F_p (list, possibly with one double root)."""
    a %= p
    b %= p
    if p == 2:
        return [y for y in (0, 1) if (y * y + a * y + b) % 2 == 0]
    disc = (a * a - 4 * b) % p
    r = fp_sqrt(disc, p)
    if r is None:
        return []
    inv2 = fp_inv(2, p)
    if r == 0:
        return [(-a * inv2) % p]
    return sorted({((-a + r) * inv2) % p, ((-a - r) * inv2) % p})


def _fp_cubic_roots(a, b, c, p):
    """Roots with multiplicity of T^3 + a T^2 + b T + c over F_p (trial)."""
    roots = []
    for t in range(p):
        if (((t + a) * t + b) * t + c) % p == 0:
            # synthetic division by (T - t): quotient T^2 + q1 T + q2
            q1 = (a + t) % p
            q2 = (b + t * q1) % p
            mult = 1
            if (q2 + t * (q1 + t)) % p == 0:
                mult = 2
                if (q1 + 2 * t) % p == 0:
                    mult = 3
            roots.append((t, mult))
    return roots


def _singular_point_mod_p(E, p):
    """A singular point of the reduction mod p (exists when p | disc)."""
    for x in range(p):
        # y-partial: 2y + a1 x + a3 = 0; for p = 2 solve directly
        ys = []
        if p == 2:
            ys = [y for y in range(2)
                  if (y * y + E.a1 * x * y + E.a3 * y - E.rhs(x)) % 2 == 0]
        else:
            y = (-(E.a1 * x + E.a3) * fp_inv(2, p)) % p
            ys = [y]
        for y in ys:
            f = (y * y + E.a1 * x * y + E.a3 * y - E.rhs(x)) % p
            fx = (E.a1 * y - 3 * x * x - 2 * E.a2 * x - E.a4) % p
            fy = (2 * y + E.a1 * x + E.a3) % p
            if f == 0 and fx == 0 and fy == 0:
                return x, y
    raise AssertionError("no singular point found although p | disc")


def _step6_normalize(E, p):
    """Translation making p | a1, a2; p^2 | a3, a4; p^3 | a6.

    Deterministic for p >= 3; for p = 2 a short search over (s, t) mod 8.
    """
    if p == 2:
        for s in range(8):
            for t in range(8):
                cand = _translate(E, 0, s, t).apply(E)
                if (cand.a1 % 2 == 0 and cand.a2 % 2 == 0 and cand.a3 % 4 == 0
                        and cand.a4 % 4 == 0 and cand.a6 % 8 == 0):
                    return _translate(E, 0, s, t)
        raise AssertionError("step-6 normalisation failed at p = 2")
    s = (-E.a1 * fp_inv(2, p)) % p
    E1 = _translate(E, 0, s, 0).apply(E)
    t = (-E1.a3 * fp_inv(2, p * p)) % (p * p)
    m = _translate(E, 0, s, 0).then(_translate(E1, 0, 0, t))
    cand = m.apply(E)
    assert (cand.a1 % p == 0 and cand.a2 % p == 0 and cand.a3 % p ** 2 == 0
            and cand.a4 % p ** 2 == 0 and cand.a6 % p ** 3 == 0), "step-6 normalisation failed"
    return m


def tate_minimal(E, p):
    """Local minimal model at p.  Returns (E_min, CurveMap, v(disc_min)).

    Follows the standard reduction-type walk; every branch except the final
    u = p rescaling terminates with a minimal equation.
    """
    if E.disc == 0:
        raise ValueError("singular curve")
    if not E.is_integral():
        raise ValueError("curve must be integral")
    total = CurveMap.identity()
    cur = E
    while True:
        n = valuation(cur.disc, p)
        if n == 0:
            return cur, total, 0
        if n < 12:
            return cur, total, n
        # move the singular point of the reduction to (0, 0)
        x0, y0 = _singular_point_mod_p(cur, p)
        m = _translate(cur, x0, 0, y0)
        cur = m.apply(cur)
        total = total.then(m)
        if cur.b2 % p != 0:  # multiplicative reduction: type I_n, minimal
            return cur, total, n
        if cur.a6 % p ** 2 != 0:  # type II
            return cur, total, n
        if cur.b8 % p ** 3 != 0:  # type III
            return cur, total, n
        if cur.b6 % p ** 3 != 0:  # type IV
            return cur, total, n
        m = _step6_normalize(cur, p)
        cur = m.apply(cur)
        total = total.then(m)
        # P(T) = T^3 + (a2/p) T^2 + (a4/p^2) T + (a6/p^3) mod p
        roots = _fp_cubic_roots(cur.a2 // p, cur.a4 // p ** 2, cur.a6 // p ** 3, p)
        mults = sorted(mult for _, mult in roots)
        if all(mult == 1 for _, mult in roots):  # type I0*
            return cur, total, n
        if mults[-1] == 2:  # type I_m*: subprocedure, always minimal
            r0 = next(t for t, mult in roots if mult == 2)
            m = _translate(cur, p * r0, 0, 0)
            cur = m.apply(cur)
            total = total.then(m)
            cur, total = _type_istar_tail(cur, total, p)
            return cur, total, n
        # triple root
        r0 = roots[0][0]
        m = _translate(cur, p * r0, 0, 0)
        cur = m.apply(cur)
        total = total.then(m)
        ys = _fp_quadratic_roots(cur.a3 // p ** 2, -(cur.a6 // p ** 4), p)
        if len(ys) == 2 or not ys:  # type IV*
            return cur, total, n
        m = _translate(cur, 0, 0, p * p * ys[0])
        cur = m.apply(cur)
        total = total.then(m)
        if valuation(cur.a4, p) < 4:  # type III*
            return cur, total, n
        if valuation(cur.a6, p) < 6:  # type II*
            return cur, total, n
        # non-minimal: rescale by u = p and restart
        m = CurveMap(Fraction(p), Fraction(0), Fraction(0), Fraction(0))
        cur = m.apply(cur)
        assert cur.is_integral()
        total = total.then(m)


def _type_istar_tail(cur, total, p):
    """The I_m* ping-pong: translate until a separable quadratic appears."""
    q = 1
    while True:
        # quadratic in Y: Y^2 + (a3 / p^(q+1)) Y - a6 / p^(2q+2)
        a3q = cur.a3 // p ** (q + 1)
        a6q = cur.a6 // p ** (2 * q + 2)
        ys = _fp_quadratic_roots(a3q, -a6q, p)
        if len(ys) == 2 or not ys:
            return cur, total
        m = _translate(cur, 0, 0, ys[0] * p ** (q + 1))
        cur = m.apply(cur)
        total = total.then(m)
        # quadratic in X: (a2/p) X^2 + (a4/p^(q+2)) X + a6/p^(2q+3)
        a2q = cur.a2 // p
        a4q = cur.a4 // p ** (q + 2)
        a6q = cur.a6 // p ** (2 * q + 3)
        inv = fp_inv(a2q, p)
        xs = _fp_quadratic_roots(a4q * inv, a6q * inv, p)
        if len(xs) == 2 or not xs:
            return cur, total
        m = _translate(cur, xs[0] * p ** (q + 1), 0, 0)
        cur = m.apply(cur)
        total = total.then(m)
        q += 1


def minimal_discriminant_valuation(E, ctx):
    """(v(disc_min), CurveMap) at the context prime."""
    if isinstance(ctx, int):
        ctx = LocalContext(ctx)
    _, cmap, v = tate_minimal(E, ctx.p)
    return v, cmap


def kappa(P, E, ctx):
    """kappa of a point: denominator depth of P on a local minimal model."""
    if isinstance(ctx, int):
        ctx = LocalContext(ctx)
    if P.is_infinity:
        raise ValueError("kappa is undefined at the identity")
    if not on_curve(E, P):
        raise ValueError("point not on curve")
    if E.disc == 0:
        raise ValueError("singular curve")
    _, cmap, _ = tate_minimal(E, ctx.p)
    Pm = cmap.apply_point(P)
    vx = valuation(Fraction(Pm.x), ctx.p)
    vy = valuation(Fraction(Pm.y), ctx.p)
    if (vx is INFINITY or vx >= 0) and (vy is INFINITY or vy >= 0):
        return 0
    assert vx < 0 and vx % 2 == 0 and vy == 3 * (vx // 2), "point denominators are not (-2r, -3r)"
    return -(vx // 2)


@dataclass(frozen=True)
class LevelReport:
    v_disc: int
    v_disc_min: int
    kappa: int
    level: int


def level(m, ctx):
    """LevelReport of an integral nonsingular (2,2)-form, cube or hypercube."""
    if isinstance(ctx, int):
        ctx = LocalContext(ctx)
    p = ctx.p
    if isinstance(m, TwoTwoForm):
        invs = [form22_invariants(m)]
    elif isinstance(m, Cube):
        invs = [cube_invariants(m)]
    elif isinstance(m, Hypercube):
        invs = list(hypercube_invariants(m).pair_invariants)
    else:
        raise TypeError(f"level is defined for (2,2)-forms, cubes and hypercubes, not {m.kind}")
    disc = invs[0].disc
    if disc == 0:
        raise ValueError("singular model")
    v_disc = valuation(disc, p)
    kappas = []
    v_min = None
    for inv in invs:
        E = WeierstrassCurve(*inv.a_invariants)
        vm, cmap = minimal_discriminant_valuation(E, ctx)
        v_min = vm if v_min is None else v_min
        assert vm == v_min, "paired Jacobians disagree on the minimal discriminant"
        kappas.append(kappa(Point(inv.xi, inv.eta), E, ctx))
    kap = max(kappas)
    lvl, rem = divmod(v_disc - v_min - 12 * kap, 12)
    if rem or lvl < 0:
        raise AssertionError("level decomposition failed")
    return LevelReport(v_disc, v_min, kap, lvl)
