"""Exact arithmetic kernel: p-adic valuations, F_p helpers, unimodular completions.

Everything in this module works with Python ints and fractions.Fraction; there
is no floating point anywhere.  Matrices are tuples of tuples of ints (or
Fractions), vectors are tuples.  All functions are pure.
"""

from fractions import Fraction
from math import gcd


class _Infinity:
    """Sentinel for the valuation of zero.  Compares above every int."""

    __slots__ = ()

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is INFINITY

    def __gt__(self, other):
        return other is not INFINITY

    def __ge__(self, other):
        return True

    def __eq__(self, other):
        return other is INFINITY

    def __hash__(self):
        return hash("g1min-infinity")

    def __add__(self, other):
        return INFINITY

    __radd__ = __add__

    def __repr__(self):
        return "INFINITY"


INFINITY = _Infinity()


def valuation(x, p):
    """p-adic valuation of an int or Fraction; INFINITY for x = 0."""
    if isinstance(x, Fraction):
        if x == 0:
            return INFINITY
        return valuation(x.numerator, p) - valuation(x.denominator, p)
    if x == 0:
        return INFINITY
    x = abs(x)
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n):
    """Deterministic Miller-Rabin for n < 3.3e24, probabilistic beyond."""
    if n < 2:
        return False
    for q in _SMALL_PRIMES:
        if n % q == 0:
            return n == q
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def fp_inv(a, p):
    a %= p
    if a == 0:
        raise ZeroDivisionError(f"inverse of 0 mod {p}")
    return pow(a, -1, p)


def fp_sqrt(a, p):
    """A square root of a mod p, or None if a is a non-residue (Tonelli-Shanks)."""
    a %= p
    if p == 2 or a == 0:
        return a
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    # Tonelli-Shanks
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        t2, i = t * t % p, 1
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


class LocalContext:
    """The working prime p, with uniformiser pi = p and residue field F_p."""

    __slots__ = ("p",)

    def __init__(self, p):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p

    def valuation(self, x):
        return valuation(x, self.p)

    def residue(self, x):
        """Image of x in F_p (x a p-integral int or Fraction)."""
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ValueError(f"{x} is not p-integral at {self.p}")
            return x.numerator * fp_inv(x.denominator, self.p) % self.p
        return x % self.p

    def __repr__(self):
        return f"LocalContext(p={self.p})"

    def __eq__(self, other):
        return isinstance(other, LocalContext) and other.p == self.p

    def __hash__(self):
        return hash(("LocalContext", self.p))


# ---------------------------------------------------------------------------
# F_p linear algebra on tuple-of-tuples matrices


def fp_matrix(rows, p):
    return tuple(tuple(x % p for x in row) for row in rows)


def fp_rank(rows, p):
    return len(_fp_echelon(rows, p)[0])


def _fp_echelon(rows, p):
    """Row echelon form mod p.  Returns (pivot column list, echelon rows)."""
    mat = [list(r) for r in fp_matrix(rows, p)]
    ncols = len(mat[0]) if mat else 0
    pivots = []
    rank = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(mat)) if mat[r][col] % p), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = fp_inv(mat[rank][col], p)
        mat[rank] = [x * inv % p for x in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col] % p:
                f = mat[r][col]
                mat[r] = [(a - f * b) % p for a, b in zip(mat[r], mat[rank])]
        pivots.append(col)
        rank += 1
    return pivots, mat


def fp_left_kernel_vector(rows, p):
    """A nonzero (c_0, ..., c_{m-1}) with sum c_i * rows[i] = 0 mod p, or None.

    Used to detect linear dependence of slices: the rows are flattened slices.
    """
    m = len(rows)
    # transpose and solve for the kernel of rows^T x = 0 over the row space
    aug = [list(row) + [1 if i == j else 0 for j in range(m)] for i, row in enumerate(fp_matrix(rows, p))]
    n = len(rows[0])
    rank = 0
    for col in range(n):
        piv = next((r for r in range(rank, m) if aug[r][col] % p), None)
        if piv is None:
            continue
        aug[rank], aug[piv] = aug[piv], aug[rank]
        inv = fp_inv(aug[rank][col], p)
        aug[rank] = [x * inv % p for x in aug[rank]]
        for r in range(m):
            if r != rank and aug[r][col] % p:
                f = aug[r][col]
                aug[r] = [(a - f * b) % p for a, b in zip(aug[r], aug[rank])]
        rank += 1
        if rank == m:
            return None
    if rank == m:
        return None
    return tuple(aug[rank][n:])


# ---------------------------------------------------------------------------
# unimodular integer matrices realising residue moves


def _gcd_vector(vec):
    g = 0
    for x in vec:
        g = gcd(g, x)
    return g


def complete_primitive_row(vec):
    """Unimodular integer matrix (det +-1) whose first row is the given vector.

    The vector must be a primitive integer vector (gcd 1).  Built by running
    the extended Euclidean column reduction on vec and inverting the recorded
    column operations.
    """
    vec = tuple(int(x) for x in vec)
    n = len(vec)
    if _gcd_vector(vec) != 1:
        raise ValueError(f"{vec} is not primitive")
    # column operations V with vec . V = (1, 0, ..., 0); then first row of
    # V^{-1} is vec, so return V^{-1} built from inverse elementary factors.
    work = list(vec)
    inv_rows = [[1 if i == j else 0 for j in range(n)] for i in range(n)]  # accumulates V^{-1}

    def colop_inverse(i, j, q):
        # work[j] -= q * work[i]  <=>  V factor E; V^{-1} gains row op on left
        inv_rows[i] = [a + q * b for a, b in zip(inv_rows[i], inv_rows[j])]

    def colswap_inverse(i, j):
        inv_rows[i], inv_rows[j] = inv_rows[j], inv_rows[i]

    # make work[0] the gcd via Euclid against each other entry
    for j in range(1, n):
        while work[j] != 0:
            if work[0] == 0 or (work[j] != 0 and abs(work[j]) < abs(work[0])):
                work[0], work[j] = work[j], work[0]
                colswap_inverse(0, j)
            if work[0] != 0 and work[j] != 0:
                q = work[j] // work[0]
                work[j] -= q * work[0]
                colop_inverse(0, j, q)
    if work[0] == -1:
        work[0] = 1
        inv_rows[0] = [-x for x in inv_rows[0]]
    assert work[0] == 1 and all(x == 0 for x in work[1:])
    assert inv_rows[0] == list(vec)
    return tuple(tuple(r) for r in inv_rows)


def lift_primitive(vec, p):
    """Lift a vector that is nonzero mod p to a primitive integer vector."""
    lifted = [int(x) % p for x in vec]
    g = _gcd_vector(lifted)
    if g == 1:
        return tuple(lifted)
    j = next(i for i, x in enumerate(lifted) if x % p)
    for k in range(len(lifted)):
        if k == j:
            continue
        cand = list(lifted)
        cand[k] += p
        if _gcd_vector(cand) == 1:
            return tuple(cand)
    # single nonzero entry u with gcd(u) > 1: adjust another slot by p twice
    cand = list(lifted)
    a = lifted[j]
    k = (j + 1) % len(lifted)
    t = (1 - cand[k]) * fp_inv(p % a, a) % a if a > 1 else 0
    cand[k] += t * p
    assert _gcd_vector(cand) == 1
    return tuple(cand)


def smith_like_completion(vec, p, dim=None):
    """Integer matrix of determinant +-1 whose first row is vec mod p.

    vec must be nonzero mod p.  Realises "move this residue point/root to the
    first coordinate position" steps as explicit unimodular matrices.
    """
    vec = tuple(int(x) for x in vec)
    if dim is not None and len(vec) != dim:
        raise ValueError("dimension mismatch")
    if all(x % p == 0 for x in vec):
        raise ValueError(f"{vec} is zero mod {p}")
    return complete_primitive_row(lift_primitive(vec, p))


def unimodular_with_row(vec, p, row):
    """Determinant +-1 matrix whose given row is congruent to vec mod p."""
    m = smith_like_completion(vec, p)
    n = len(m)
    order = list(range(1, n))
    order.insert(row, 0)
    return tuple(m[order[i]] for i in range(n))


def det_matrix(m):
    """Exact determinant by fraction-free expansion (small matrices only)."""
    n = len(m)
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    tot = 0
    for j in range(n):
        minor = tuple(row[:j] + row[j + 1:] for row in m[1:])
        term = m[0][j] * det_matrix(minor)
        tot += -term if j % 2 else term
    return tot


def mat_mul(a, b):
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0])))
        for i in range(len(a))
    )


def mat_inv(m):
    """Exact inverse with Fraction entries."""
    n = len(m)
    d = det_matrix(m)
    if d == 0:
        raise ZeroDivisionError("singular matrix")
    if n == 1:
        return ((Fraction(1, 1) / Fraction(d),),)
    cof = []
    for i in range(n):
        row = []
        for j in range(n):
            minor = tuple(
                tuple(m[r][c] for c in range(n) if c != j) for r in range(n) if r != i
            )
            sign = -1 if (i + j) % 2 else 1
            row.append(sign * det_matrix(minor))
        cof.append(row)
    return tuple(tuple(Fraction(cof[j][i]) / Fraction(d) for j in range(n)) for i in range(n))


def identity_matrix(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
