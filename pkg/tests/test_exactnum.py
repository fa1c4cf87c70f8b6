import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from g1min.exactnum import (
    INFINITY, LocalContext, complete_primitive_row, det_matrix,
    fp_left_kernel_vector, fp_sqrt, is_prime, lift_primitive, mat_inv, mat_mul,
    smith_like_completion, unimodular_with_row, valuation,
)

PRIMES = (2, 3, 5, 7, 11, 13)


def test_valuation_examples():
    assert valuation(12, 2) == 2
    assert valuation(0, 5) is INFINITY
    assert valuation(Fraction(9, 2), 2) == -1


def test_infinity_sentinel_orders_above_everything():
    assert INFINITY > 10 ** 100
    assert not (INFINITY < 5)
    assert INFINITY >= INFINITY
    assert INFINITY == INFINITY


@given(st.integers(-10**6, 10**6), st.integers(-10**6, 10**6),
       st.sampled_from(PRIMES))
def test_valuation_is_multiplicative_and_ultrametric(x, y, p):
    vx, vy = valuation(x, p), valuation(y, p)
    if x and y:
        assert valuation(x * y, p) == vx + vy
    assert valuation(x + y, p) >= min(vx, vy)


def test_valuation_of_fractions():
    assert valuation(Fraction(4, 9), 3) == -2
    assert valuation(Fraction(4, 9), 2) == 2


def test_fp_sqrt_examples():
    r = fp_sqrt(4, 7)
    assert r in (2, 5)
    assert fp_sqrt(3, 5) is None
    assert fp_sqrt(1, 2) == 1


@given(st.integers(0, 10**4), st.sampled_from(PRIMES))
def test_fp_sqrt_contract(a, p):
    r = fp_sqrt(a, p)
    if r is None:
        assert p > 2 and pow(a, (p - 1) // 2, p) == p - 1
    else:
        assert r * r % p == a % p


def test_is_prime():
    assert [n for n in range(2, 40) if is_prime(n)] == [
        2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]
    assert is_prime(2 ** 61 - 1)
    assert not is_prime(2 ** 61 + 1)


def test_local_context_rejects_composites():
    with pytest.raises(ValueError):
        LocalContext(6)
    assert LocalContext(7).residue(Fraction(1, 3)) == 5


def test_smith_like_completion_examples():
    m = smith_like_completion((0, 1), 3)
    assert det_matrix(m) in (1, -1)
    assert tuple(x % 3 for x in m[0]) == (0, 1)

    assert smith_like_completion((1, 0), 5) == ((1, 0), (0, 1))

    m = smith_like_completion((1, 1, 2), 5)
    assert det_matrix(m) in (1, -1)
    assert tuple(x % 5 for x in m[0]) == (1, 1, 2)


def test_smith_like_completion_rejects_zero_vector():
    with pytest.raises(ValueError):
        smith_like_completion((10, 5), 5)


def test_completion_determinant_is_unit_randomised():
    rng = random.Random(1)
    for _ in range(300):
        p = rng.choice(PRIMES)
        n = rng.choice((2, 3))
        vec = [rng.randrange(-20, 20) for _ in range(n)]
        if all(v % p == 0 for v in vec):
            vec[0] += 1
        m = smith_like_completion(vec, p)
        assert det_matrix(m) in (1, -1)
        assert [x % p for x in m[0]] == [v % p for v in vec]


def test_unimodular_with_row_places_the_row():
    m = unimodular_with_row((2, 4, 1), 5, 2)
    assert det_matrix(m) in (1, -1)
    assert tuple(x % 5 for x in m[2]) == (2, 4, 1)


def test_lift_primitive_gcd_one():
    rng = random.Random(2)
    from math import gcd
    for _ in range(200):
        p = rng.choice(PRIMES)
        n = rng.choice((2, 3))
        vec = [rng.randrange(p) for _ in range(n)]
        if all(v == 0 for v in vec):
            vec[0] = 1
        lifted = lift_primitive(vec, p)
        g = 0
        for x in lifted:
            g = gcd(g, x)
        assert g == 1
        assert all((a - b) % p == 0 for a, b in zip(lifted, vec))


def test_complete_primitive_row():
    m = complete_primitive_row((6, 10, 15))
    assert m[0] == (6, 10, 15)
    assert det_matrix(m) in (1, -1)


def test_left_kernel_vector():
    rows = ((1, 2, 0), (2, 4, 0))
    ker = fp_left_kernel_vector(rows, 5)
    assert ker is not None
    assert all(sum(k * rows[i][c] for i, k in enumerate(ker)) % 5 == 0 for c in range(3))
    assert fp_left_kernel_vector(((1, 0), (0, 1)), 5) is None


def test_mat_inv_exact():
    m = ((3, 1), (5, 2))
    inv = mat_inv(m)
    assert mat_mul(m, inv) == ((1, 0), (0, 1))
