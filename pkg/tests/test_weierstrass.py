from fractions import Fraction

import pytest

from g1min import (
    CurveMap, LocalContext, Point, WeierstrassCurve, construct_22, inflate,
    kappa, level, minimal_discriminant_valuation, on_curve, point_add,
    point_double, point_mul, point_neg, scalar_multiply, tate_minimal,
    valuation,
)


def scale_curve(E, u):
    return WeierstrassCurve(E.a1 * u, E.a2 * u ** 2, E.a3 * u ** 3,
                            E.a4 * u ** 4, E.a6 * u ** 6)


def random_curve(rng, bound=6):
    while True:
        E = WeierstrassCurve(*(rng.randint(-bound, bound) for _ in range(5)))
        if E.disc != 0:
            return E


def test_standard_quantities():
    E = WeierstrassCurve(0, 0, 0, 1, 0)
    assert (E.c4, E.disc) == (-48, -64)
    E = WeierstrassCurve(0, 0, 1, 0, 0)
    assert E.disc == -27
    E = WeierstrassCurve(0, -1, 1, -10, -20)
    assert E.disc == -161051  # -11^5


def test_b_relations(rng):
    for _ in range(100):
        E = WeierstrassCurve(*(rng.randint(-9, 9) for _ in range(5)))
        assert 4 * E.b8 == E.b2 * E.b6 - E.b4 ** 2
        assert 1728 * E.disc == E.c4 ** 3 - E.c6 ** 2


def test_group_law_basics():
    E = WeierstrassCurve(0, 0, 1, -1, 0)
    P = Point(0, 0)
    O = Point.infinity()
    assert on_curve(E, P)
    assert point_add(E, P, O) == P
    assert point_add(E, P, point_neg(E, P)).is_infinity
    Q = point_double(E, P)
    assert on_curve(E, Q)
    assert Q == Point(Fraction(1), Fraction(0))
    # associativity on a small chain
    twoP, threeP = point_mul(E, 2, P), point_mul(E, 3, P)
    assert point_add(E, twoP, threeP) == point_mul(E, 5, P)
    assert point_add(E, P, point_add(E, twoP, threeP)) == point_mul(E, 6, P)


def test_point_add_rejects_off_curve():
    E = WeierstrassCurve(0, 0, 0, 1, 0)
    with pytest.raises(ValueError):
        point_add(E, Point(1, 1), Point.infinity())


def test_minimal_discriminant_examples():
    assert minimal_discriminant_valuation(WeierstrassCurve(0, 0, 0, 1, 0), 2)[0] == 6
    assert minimal_discriminant_valuation(WeierstrassCurve(0, 0, 1, 0, 0), 3)[0] == 3


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11])
def test_scaling_recovery_oracle(p, rng):
    ctx = LocalContext(p)
    for _ in range(25):
        E = random_curve(rng)
        v0, _ = minimal_discriminant_valuation(E, ctx)
        for k in (1, 2):
            Es = scale_curve(E, p ** k)
            v1, cmap = minimal_discriminant_valuation(Es, ctx)
            assert v1 == v0
            Emin = cmap.apply(Es)
            assert Emin.is_integral()
            assert valuation(Emin.disc, p) == v0


@pytest.mark.parametrize("p", [2, 3, 5])
def test_invariance_under_integral_changes(p, rng):
    ctx = LocalContext(p)
    for _ in range(25):
        E = random_curve(rng)
        v0, _ = minimal_discriminant_valuation(E, ctx)
        r, s, t = (rng.randint(-6, 6) for _ in range(3))
        Ej = CurveMap(Fraction(1), Fraction(r), Fraction(s), Fraction(t)).apply(E)
        assert minimal_discriminant_valuation(Ej, ctx)[0] == v0


@pytest.mark.parametrize("p", [2, 3])
def test_obfuscated_scaling_recovery(p, rng):
    ctx = LocalContext(p)
    for _ in range(40):
        E = random_curve(rng, bound=4)
        v0, _ = minimal_discriminant_valuation(E, ctx)
        Es = scale_curve(E, p)
        r, s, t = (rng.randint(0, p ** 3) for _ in range(3))
        Ej = CurveMap(Fraction(1), Fraction(r), Fraction(s), Fraction(t)).apply(Es)
        assert minimal_discriminant_valuation(Ej, ctx)[0] == v0


def test_large_prime_minimality_criterion(rng):
    # for p >= 5 a minimal model has v(c4) < 4 or v(Delta) < 12
    for p in (5, 7, 13):
        ctx = LocalContext(p)
        for _ in range(20):
            E = random_curve(rng)
            Emin, _, vmin = tate_minimal(scale_curve(E, p), p)
            assert vmin == valuation(Emin.disc, p)
            assert Emin.c4 == 0 and vmin < 12 or (
                valuation(Emin.c4, p) < 4 or vmin < 12)


def test_tate_rejects_bad_input():
    with pytest.raises(ValueError):
        tate_minimal(WeierstrassCurve(0, 0, 0, 0, 0), 2)
    with pytest.raises(ValueError):
        tate_minimal(WeierstrassCurve(Fraction(1, 2), 0, 0, 1, 0), 2)


def test_kappa_integral_point():
    E = WeierstrassCurve(0, 0, 0, 1, 0)
    assert kappa(Point(0, 0), E, LocalContext(2)) == 0


def test_kappa_from_doubling():
    # double (0,0) on y^2 + y = x^3 - x until the x-coordinate picks up an
    # even denominator, then kappa reads off half the exponent
    E = WeierstrassCurve(0, 0, 1, -1, 0)
    P = Point(0, 0)
    Q = point_mul(E, 5, P)
    vx = valuation(Fraction(Q.x), 2)
    assert vx < 0 and vx % 2 == 0
    assert kappa(Q, E, LocalContext(2)) == -(vx // 2)


def test_kappa_on_scaled_model():
    # same point seen on a p-scaled (non-minimal) model: kappa is unchanged
    E = WeierstrassCurve(0, 0, 1, -1, 0)
    Q = point_mul(E, 5, Point(0, 0))
    Es = scale_curve(E, 2)
    Qs = Point(4 * Fraction(Q.x), 8 * Fraction(Q.y))
    assert on_curve(Es, Qs)
    assert kappa(Qs, Es, LocalContext(2)) == kappa(Q, E, LocalContext(2))


def test_kappa_errors():
    E = WeierstrassCurve(0, 0, 0, 1, 0)
    with pytest.raises(ValueError):
        kappa(Point.infinity(), E, LocalContext(2))
    with pytest.raises(ValueError):
        kappa(Point(5, 5), E, LocalContext(2))


def test_level_of_construction_and_scaling():
    F = construct_22(0, 0, 0, 1)
    ctx = LocalContext(2)
    rep = level(F, ctx)
    assert (rep.v_disc, rep.level) == (6, 0)
    assert rep.v_disc == rep.v_disc_min + 12 * rep.kappa + 12 * rep.level

    scaled = scalar_multiply(F, 2)
    rep2 = level(scaled, ctx)
    assert rep2.level == 1
    assert (rep2.kappa, rep2.v_disc_min) == (rep.kappa, rep.v_disc_min)


def test_level_decomposition_random(rng):
    ctx = LocalContext(3)
    seen = 0
    while seen < 10:
        m, _ = inflate(construct_22(*_random_marked(rng)), ctx, rng, moves=1)
        rep = level(m, ctx)
        assert rep.level >= 0
        assert rep.v_disc == rep.v_disc_min + 12 * rep.kappa + 12 * rep.level
        seen += 1


def _random_marked(rng):
    from g1min import marked_curve

    while True:
        a = [rng.randint(-5, 5) for _ in range(4)]
        if marked_curve(*a).disc != 0:
            return a


def test_level_rejects_wrong_kinds():
    from g1min import BinaryQuartic

    with pytest.raises(TypeError):
        level(BinaryQuartic((1, 0, 0, 0, 1)), LocalContext(2))


def test_hypercube_level_is_minimum_of_form_levels(rng):
    from g1min import forms_of_hypercube
    from conftest import nonzero_disc, random_hypercube

    for p in (2, 3):
        ctx = LocalContext(p)
        for _ in range(6):
            H = nonzero_disc(random_hypercube, rng)
            lH = level(H, ctx).level
            lforms = [level(F, ctx).level for F in forms_of_hypercube(H).values()]
            assert lH == min(lforms)
