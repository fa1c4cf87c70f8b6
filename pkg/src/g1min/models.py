"""The five model kinds, their group actions, and derived-form maps.

Coefficient layouts (fixed once, used by the JSON format as well):

* binary quartic   -- (a, b, c, d, e) for a*x1^4 + b*x1^3*x2 + ... + e*x2^4
* (2,2)-form       -- 3x3 matrix a[r][c], row r <-> x1^(2-r) x2^r,
                      column c <-> y1^(2-c) y2^c
* ternary cubic    -- 10 coefficients in the monomial order CUBIC_MONOMIALS
* cube             -- 3x3x3 array s[i][j][k] (trilinear form sum s_ijk x_i y_j z_k)
* hypercube        -- 2x2x2x2 array h[i][j][k][l]

Row vectors act on the right: a substitution by the matrix A replaces the
variable row (x1, x2) with (x1, x2) A.  Group elements carry a scalar, one
matrix per tensor factor, and (for hypercubes only) a permutation of the four
factors.  Actions may produce Fraction coefficients; `scalar_clear` returns an
integral primitive copy together with the multiplier used.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product

from .exactnum import det_matrix, identity_matrix, mat_inv, mat_mul, valuation, INFINITY


def _num(x):
    """Collapse Fractions with denominator 1 back to int."""
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return x


def _parse_coeff(s):
    f = Fraction(s)
    return _num(f)


# ---------------------------------------------------------------------------
# model kinds


@dataclass(frozen=True)
class BinaryQuartic:
    coeffs: tuple  # (a, b, c, d, e)

    kind = "quartic"

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(_num(c) for c in self.coeffs))
        if len(self.coeffs) != 5:
            raise ValueError("binary quartic needs 5 coefficients")

    def coefficients(self):
        return self.coeffs


@dataclass(frozen=True)
class TwoTwoForm:
    rows: tuple  # 3x3, rows[r][c]

    kind = "form22"

    def __post_init__(self):
        rows = tuple(tuple(_num(x) for x in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        if len(rows) != 3 or any(len(r) != 3 for r in rows):
            raise ValueError("(2,2)-form needs a 3x3 coefficient matrix")

    def coefficients(self):
        return tuple(x for row in self.rows for x in row)

    def entry(self, r, c):
        return self.rows[r][c]

    def x_quadratics(self):
        """(F1, F2, F3) with F = F1(x) y1^2 + F2(x) y1 y2 + F3(x) y2^2."""
        return tuple(tuple(self.rows[r][c] for r in range(3)) for c in range(3))

    def y_quadratics(self):
        return tuple(tuple(self.rows[r][c] for c in range(3)) for r in range(3))

    def transpose(self):
        return TwoTwoForm(tuple(tuple(self.rows[c][r] for c in range(3)) for r in range(3)))


CUBIC_MONOMIALS = (
    (3, 0, 0), (2, 1, 0), (2, 0, 1), (1, 2, 0), (1, 1, 1),
    (1, 0, 2), (0, 3, 0), (0, 2, 1), (0, 1, 2), (0, 0, 3),
)
_CUBIC_INDEX = {e: i for i, e in enumerate(CUBIC_MONOMIALS)}


@dataclass(frozen=True)
class TernaryCubic:
    coeffs: tuple  # 10 coefficients in CUBIC_MONOMIALS order

    kind = "cubic"

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(_num(c) for c in self.coeffs))
        if len(self.coeffs) != 10:
            raise ValueError("ternary cubic needs 10 coefficients")

    def coefficients(self):
        return self.coeffs

    @classmethod
    def from_dict(cls, d):
        return cls(tuple(d.get(e, 0) for e in CUBIC_MONOMIALS))

    def as_dict(self):
        return {e: c for e, c in zip(CUBIC_MONOMIALS, self.coeffs) if c != 0}


@dataclass(frozen=True)
class Cube:
    entries: tuple  # s[i][j][k], 3x3x3

    kind = "cube"

    def __post_init__(self):
        s = tuple(tuple(tuple(_num(x) for x in r) for r in pl) for pl in self.entries)
        object.__setattr__(self, "entries", s)
        if len(s) != 3 or any(len(pl) != 3 or any(len(r) != 3 for r in pl) for pl in s):
            raise ValueError("cube needs a 3x3x3 array")

    def coefficients(self):
        return tuple(x for pl in self.entries for r in pl for x in r)

    def slices(self, axis):
        """The three 3x3 slices along the given axis (0, 1 or 2)."""
        s = self.entries
        if axis == 0:
            return tuple(s[m] for m in range(3))
        if axis == 1:
            return tuple(tuple(s[i][m] for i in range(3)) for m in range(3))
        return tuple(
            tuple(tuple(s[i][j][m] for j in range(3)) for i in range(3)) for m in range(3)
        )


@dataclass(frozen=True)
class Hypercube:
    entries: tuple  # h[i][j][k][l], 2x2x2x2

    kind = "hypercube"

    def __post_init__(self):
        h = tuple(
            tuple(tuple(tuple(_num(x) for x in r) for r in pl) for pl in blk)
            for blk in self.entries
        )
        object.__setattr__(self, "entries", h)
        flat = self.coefficients()
        if len(flat) != 16:
            raise ValueError("hypercube needs a 2x2x2x2 array")

    def coefficients(self):
        return tuple(
            self.entries[i][j][k][l]
            for i in range(2) for j in range(2) for k in range(2) for l in range(2)
        )

    def at(self, i, j, k, l):
        return self.entries[i][j][k][l]

    def slice_pair(self, axis):
        """The two 2x2x2 slices along the given axis, flattened to 8-tuples."""
        out = []
        for m in range(2):
            vals = []
            for idx in product(range(2), repeat=4):
                if idx[axis] == m:
                    vals.append(self.at(*idx))
            out.append(tuple(vals))
        return tuple(out)


MODEL_KINDS = {
    "quartic": BinaryQuartic,
    "form22": TwoTwoForm,
    "cubic": TernaryCubic,
    "cube": Cube,
    "hypercube": Hypercube,
}


# ---------------------------------------------------------------------------
# shared coefficient utilities


def coefficients(m):
    return m.coefficients()


def is_integral(m):
    return all(not isinstance(c, Fraction) for c in m.coefficients())


def content_valuation(m, p):
    """min_p-valuation over the coefficients (INFINITY for the zero model)."""
    v = INFINITY
    for c in m.coefficients():
        w = valuation(c, p)
        if w is INFINITY:
            continue
        if v is INFINITY or w < v:
            v = w
    return v


def scalar_multiply(m, c):
    c = Fraction(c)
    if isinstance(m, BinaryQuartic):
        return BinaryQuartic(tuple(c * x for x in m.coeffs))
    if isinstance(m, TwoTwoForm):
        return TwoTwoForm(tuple(tuple(c * x for x in row) for row in m.rows))
    if isinstance(m, TernaryCubic):
        return TernaryCubic(tuple(c * x for x in m.coeffs))
    if isinstance(m, Cube):
        return Cube(tuple(tuple(tuple(c * x for x in r) for r in pl) for pl in m.entries))
    if isinstance(m, Hypercube):
        return Hypercube(
            tuple(
                tuple(tuple(tuple(c * x for x in r) for r in pl) for pl in blk)
                for blk in m.entries
            )
        )
    raise TypeError(f"not a model: {m!r}")


def scalar_clear(m):
    """Integral primitive copy of m.  Returns (model, mu) with model = mu * m.

    This is ingestion-level normalisation; mu need not be realisable inside
    the model's transformation group (for quartics only square scalings are).
    """
    coeffs = [Fraction(c) for c in m.coefficients()]
    if all(c == 0 for c in coeffs):
        return m, Fraction(1)
    from math import gcd, lcm

    den = 1
    for c in coeffs:
        den = lcm(den, c.denominator)
    num = 0
    for c in coeffs:
        num = gcd(num, c.numerator * (den // c.denominator))
    mu = Fraction(den, num)
    return scalar_multiply(m, mu), mu


# ---------------------------------------------------------------------------
# group elements


def _perm_inverse(perm):
    inv = [0] * len(perm)
    for i, v in enumerate(perm):
        inv[v] = i
    return tuple(inv)


_MATRIX_SHAPE = {
    "quartic": (2,),
    "form22": (2, 2),
    "cube": (3, 3, 3),
    "hypercube": (2, 2, 2, 2),
}


@dataclass(frozen=True)
class GroupElement:
    """A transformation: scalar, one matrix per tensor factor, and for
    hypercubes an optional permutation of the four factors (applied first)."""

    kind: str
    scalar: Fraction
    matrices: tuple
    perm: tuple = None

    def __post_init__(self):
        object.__setattr__(self, "scalar", Fraction(self.scalar))
        mats = tuple(tuple(tuple(Fraction(x) for x in row) for row in m) for m in self.matrices)
        object.__setattr__(self, "matrices", mats)
        shape = _MATRIX_SHAPE[self.kind]
        if tuple(len(m) for m in mats) != shape:
            raise ValueError(f"wrong matrix sizes for kind {self.kind}")
        for m in mats:
            if det_matrix(m) == 0:
                raise ValueError("singular matrix in group element")
        if self.kind != "hypercube":
            if self.perm is not None:
                raise ValueError("permutations only apply to hypercubes")
        else:
            perm = self.perm if self.perm is not None else (0, 1, 2, 3)
            if sorted(perm) != [0, 1, 2, 3]:
                raise ValueError("bad axis permutation")
            object.__setattr__(self, "perm", tuple(perm))

    @classmethod
    def identity(cls, kind):
        shape = _MATRIX_SHAPE[kind]
        return cls(kind, Fraction(1), tuple(identity_matrix(n) for n in shape),
                   (0, 1, 2, 3) if kind == "hypercube" else None)

    @classmethod
    def scaling(cls, kind, scalar):
        g = cls.identity(kind)
        return cls(kind, Fraction(scalar), g.matrices, g.perm)

    def chi(self):
        """The character: Delta(act(g, m)) = chi(g)^12 * Delta(m)."""
        dets = [det_matrix(m) for m in self.matrices]
        prod = Fraction(1)
        for d in dets:
            prod *= d
        la = self.scalar
        power = {"quartic": 1, "form22": 1, "cube": 3, "hypercube": 2}[self.kind]
        return la ** power * prod

    def compose(self, other):
        """Element acting as self after other: act(result, m) = act(self, act(other, m))."""
        if self.kind != other.kind:
            raise ValueError("kind mismatch")
        if self.kind == "hypercube":
            s2, s1 = self.perm, other.perm
            perm = tuple(s2[s1[a]] for a in range(4))
            inv2 = _perm_inverse(s2)
            mats = tuple(mat_mul(self.matrices[a], other.matrices[inv2[a]]) for a in range(4))
            return GroupElement(self.kind, self.scalar * other.scalar, mats, perm)
        mats = tuple(mat_mul(a, b) for a, b in zip(self.matrices, other.matrices))
        return GroupElement(self.kind, self.scalar * other.scalar, mats)

    def inverse(self):
        if self.kind == "hypercube":
            inv_perm = _perm_inverse(self.perm)
            mats = tuple(mat_inv(self.matrices[self.perm[a]]) for a in range(4))
            return GroupElement(self.kind, 1 / self.scalar, mats, inv_perm)
        return GroupElement(self.kind, 1 / self.scalar, tuple(mat_inv(m) for m in self.matrices))

    def is_identity(self):
        return self == GroupElement.identity(self.kind)


# ---------------------------------------------------------------------------
# actions


def _binary_power(u, v, k):
    """Coefficients of (u*x1 + v*x2)^k, descending in x1."""
    out = [0] * (k + 1)
    from math import comb

    for i in range(k + 1):
        out[i] = comb(k, i) * u ** (k - i) * v ** i
    return out


def _binary_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def binary_form_substitute(coeffs, A):
    """Substitute (x1, x2) -> (x1, x2) A into a binary form."""
    n = len(coeffs) - 1
    out = [0] * (n + 1)
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        term = _binary_mul(
            _binary_power(A[0][0], A[1][0], n - i), _binary_power(A[0][1], A[1][1], i)
        )
        for j, t in enumerate(term):
            out[j] += c * t
    return out


def sym2_matrix(A):
    """3x3 matrix S with m((x) A) = S m(x) for m(x) = (x1^2, x1x2, x2^2)^T."""
    a, b = A[0][0], A[0][1]
    c, d = A[1][0], A[1][1]
    return (
        (a * a, 2 * a * c, c * c),
        (a * b, a * d + b * c, c * d),
        (b * b, 2 * b * d, d * d),
    )


def _mode_apply(tensor, M, axis, ndim):
    """Mode product: combine the slices along `axis` by the rows of M."""
    dims = _tensor_dims(tensor, ndim)

    def get(idx):
        v = tensor
        for i in idx:
            v = v[i]
        return v

    def build(idx):
        tot = 0
        for n in range(dims[axis]):
            src = list(idx)
            src[axis] = n
            tot += M[idx[axis]][n] * get(src)
        return tot

    return _nest([build(idx) for idx in product(*(range(d) for d in dims))], dims)


def _tensor_dims(tensor, ndim):
    dims = []
    v = tensor
    for _ in range(ndim):
        dims.append(len(v))
        v = v[0]
    return tuple(dims)


def _nest(flat, dims):
    if len(dims) == 1:
        return tuple(flat)
    step = 1
    for d in dims[1:]:
        step *= d
    return tuple(_nest(flat[i * step:(i + 1) * step], dims[1:]) for i in range(dims[0]))


def _permute_axes(tensor, perm, ndim):
    """(perm . T)[j_0, ..., j_{n-1}] = T[j_perm[0], ..., j_perm[n-1]]."""
    dims = _tensor_dims(tensor, ndim)
    new_dims = tuple(dims[perm[a]] for a in range(ndim))

    def get(idx):
        v = tensor
        for i in idx:
            v = v[i]
        return v

    flat = []
    for idx in product(*(range(d) for d in new_dims)):
        flat.append(get([idx[perm[a]] for a in range(ndim)]))
    return _nest(flat, new_dims)


def act(g, m):
    """Apply a group element to a model, exactly."""
    if g.kind != m.kind:
        raise ValueError(f"group element for {g.kind} applied to {m.kind}")
    la = g.scalar
    if isinstance(m, BinaryQuartic):
        coeffs = binary_form_substitute(m.coeffs, g.matrices[0])
        return BinaryQuartic(tuple(la * la * c for c in coeffs))
    if isinstance(m, TwoTwoForm):
        sa = sym2_matrix(g.matrices[0])
        sb = sym2_matrix(g.matrices[1])
        sat = tuple(tuple(sa[r][c] for r in range(3)) for c in range(3))
        rows = mat_mul(mat_mul(sat, m.rows), sb)
        return TwoTwoForm(tuple(tuple(la * x for x in row) for row in rows))
    if isinstance(m, Cube):
        t = m.entries
        for axis in range(3):
            t = _mode_apply(t, g.matrices[axis], axis, 3)
        return Cube(_scale_tensor(t, la, 3))
    if isinstance(m, Hypercube):
        t = _permute_axes(m.entries, g.perm, 4)
        for axis in range(4):
            t = _mode_apply(t, g.matrices[axis], axis, 4)
        return Hypercube(_scale_tensor(t, la, 4))
    raise TypeError(f"cannot act on {m!r}")


def _scale_tensor(t, c, ndim):
    if ndim == 0:
        return c * t
    return tuple(_scale_tensor(x, c, ndim - 1) for x in t)


def ternary_substitute(F, A):
    """F((x,y,z) A) for a ternary cubic; used by tests and invariant checks."""
    out = {}
    for e, c in zip(CUBIC_MONOMIALS, F.coeffs):
        if c == 0:
            continue
        terms = {(0, 0, 0): c}
        for var in range(3):
            for _ in range(e[var]):
                nxt = {}
                for mono, cc in terms.items():
                    for m in range(3):
                        if A[m][var] == 0:
                            continue
                        key = list(mono)
                        key[m] += 1
                        key = tuple(key)
                        nxt[key] = nxt.get(key, 0) + cc * A[m][var]
                terms = nxt
        for mono, cc in terms.items():
            out[mono] = out.get(mono, 0) + cc
    return TernaryCubic.from_dict(out)


# ---------------------------------------------------------------------------
# derived forms


def quartics_of_22(F):
    """The pair of binary quartics (G1 in x, G2 in y) of a (2,2)-form."""
    f1, f2, f3 = F.x_quadratics()
    g1 = _bsub(_binary_mul(f2, f2), _scale_list(_binary_mul(f1, f3), 4))
    r1, r2, r3 = F.y_quadratics()
    g2 = _bsub(_binary_mul(r2, r2), _scale_list(_binary_mul(r1, r3), 4))
    return BinaryQuartic(tuple(g1)), BinaryQuartic(tuple(g2))


def _scale_list(a, c):
    return [c * x for x in a]


def _bsub(a, b):
    return [x - y for x, y in zip(a, b)]


def cubics_of_cube(S):
    """The three determinantal ternary cubics, one per slicing."""
    out = []
    for axis in range(3):
        M, N, P = S.slices(axis)
        out.append(_det_linear_pencil(M, N, P))
    return tuple(out)


def _det_linear_pencil(M, N, P):
    """det(M x + N y + P z) as a TernaryCubic."""
    acc = {}
    for perm in permutations(range(3)):
        sign = _perm_sign(perm)
        # product of three linear forms (M[r][perm[r]], N[..], P[..]) . (x,y,z)
        terms = {(0, 0, 0): sign}
        for r in range(3):
            c = perm[r]
            vec = (M[r][c], N[r][c], P[r][c])
            nxt = {}
            for mono, cc in terms.items():
                for var in range(3):
                    if vec[var] == 0:
                        continue
                    key = list(mono)
                    key[var] += 1
                    key = tuple(key)
                    nxt[key] = nxt.get(key, 0) + cc * vec[var]
            terms = nxt
        for mono, cc in terms.items():
            acc[mono] = acc.get(mono, 0) + cc
    return TernaryCubic.from_dict(acc)


def _perm_sign(perm):
    sign = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


HYPERCUBE_PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


def form_of_hypercube(H, a, b):
    """The (2,2)-form F_ab: determinant of H read as bilinear in the other axes."""
    c, d = (t for t in range(4) if t not in (a, b))

    def bil(k, l):
        # 2x2 coefficient matrix of the (1,1)-form in (axis-a, axis-b) variables
        rows = []
        for i in range(2):
            row = []
            for j in range(2):
                idx = [0, 0, 0, 0]
                idx[a], idx[b], idx[c], idx[d] = i, j, k, l
                row.append(H.at(*idx))
            rows.append(tuple(row))
        return tuple(rows)

    q00, q01, q10, q11 = bil(0, 0), bil(0, 1), bil(1, 0), bil(1, 1)
    return TwoTwoForm(_sub22(_mul_11(q00, q11), _mul_11(q01, q10)))


def _mul_11(bm, cm):
    out = [[0] * 3 for _ in range(3)]
    for i in range(2):
        for j in range(2):
            if bm[i][j] == 0:
                continue
            for k in range(2):
                for l in range(2):
                    out[i + k][j + l] += bm[i][j] * cm[k][l]
    return tuple(tuple(r) for r in out)


def _sub22(a, b):
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def forms_of_hypercube(H):
    """All six F_ab, keyed by the axis pair (a, b) with a < b."""
    return {pair: form_of_hypercube(H, *pair) for pair in HYPERCUBE_PAIRS}


def quartics_of_hypercube(H):
    """The four binary quartics, one per axis; checks internal agreement."""
    forms = forms_of_hypercube(H)
    out = []
    for axis in range(4):
        cands = []
        for (a, b), F in forms.items():
            g1, g2 = quartics_of_22(F)
            if a == axis:
                cands.append(g1)
            elif b == axis:
                cands.append(g2)
        first = cands[0]
        if any(c != first for c in cands[1:]):
            raise AssertionError(f"axis-{axis} quartics of a hypercube disagree")
        out.append(first)
    return tuple(out)


# ---------------------------------------------------------------------------
# JSON-facing serialisation

_COEFF_COUNT = {"quartic": 5, "form22": 9, "cube": 27, "hypercube": 16, "cubic": 10}


def model_to_dict(m, meta=None):
    d = {"kind": m.kind, "coeffs": [str(c) for c in m.coefficients()]}
    if meta:
        d["meta"] = meta
    return d


def model_from_dict(d):
    kind = d.get("kind")
    if kind not in MODEL_KINDS:
        raise ValueError(f"unknown model kind: {kind!r}")
    raw = d.get("coeffs")
    if not isinstance(raw, list) or len(raw) != _COEFF_COUNT[kind]:
        raise ValueError(f"kind {kind} expects {_COEFF_COUNT[kind]} coefficients")
    coeffs = [_parse_coeff(str(s)) for s in raw]
    if kind == "quartic":
        return BinaryQuartic(tuple(coeffs))
    if kind == "cubic":
        return TernaryCubic(tuple(coeffs))
    if kind == "form22":
        return TwoTwoForm(tuple(tuple(coeffs[3 * r + c] for c in range(3)) for r in range(3)))
    if kind == "cube":
        return Cube(
            tuple(
                tuple(tuple(coeffs[9 * i + 3 * j + k] for k in range(3)) for j in range(3))
                for i in range(3)
            )
        )
    return Hypercube(
        tuple(
            tuple(
                tuple(tuple(coeffs[8 * i + 4 * j + 2 * k + l] for l in range(2)) for k in range(2))
                for j in range(2)
            )
            for i in range(2)
        )
    )


def group_element_to_dict(g):
    d = {
        "kind": g.kind,
        "scalar": str(g.scalar),
        "matrices": [[[str(x) for x in row] for row in m] for m in g.matrices],
    }
    if g.kind == "hypercube":
        d["perm"] = list(g.perm)
    return d


def group_element_from_dict(d):
    mats = tuple(
        tuple(tuple(_parse_coeff(x) for x in row) for row in m) for m in d["matrices"]
    )
    perm = tuple(d["perm"]) if "perm" in d else None
    return GroupElement(d["kind"], Fraction(d["scalar"]), mats, perm)
