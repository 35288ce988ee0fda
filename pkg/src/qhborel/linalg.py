"""Exact scalars and dense matrices over the rationals or a prime field.

Matrices are python-flint objects (``fmpq_mat`` over Q, ``nmod_mat`` over
F_p).  The :class:`Field` object knows how to build them; the free functions
below implement the handful of routines the rest of the package relies on.
Vectors are column matrices unless stated otherwise.
"""
from __future__ import annotations

import random
from fractions import Fraction

import flint


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    k = 2
    while k * k <= p:
        if p % k == 0:
            return False
        k += 1
    return True


class Field:
    """The base field: Q when ``p == 0``, otherwise F_p."""

    def __init__(self, p: int = 0):
        if p and not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p

    @classmethod
    def parse(cls, text: str) -> "Field":
        text = text.strip()
        if text in ("rational", "Q", "QQ"):
            return cls(0)
        if text.startswith("fp:"):
            return cls(int(text[3:]))
        raise ValueError(f"unknown field {text!r} (use 'rational' or 'fp:<p>')")

    @property
    def name(self) -> str:
        return "rational" if self.p == 0 else f"fp:{self.p}"

    def __repr__(self):
        return f"Field({self.name})"

    def __eq__(self, other):
        return isinstance(other, Field) and other.p == self.p

    def __hash__(self):
        return hash(self.p)

    # scalars
    def __call__(self, x):
        if self.p:
            if isinstance(x, flint.nmod):
                return x
            if isinstance(x, (Fraction, flint.fmpq)):
                num, den = (x.numerator, x.denominator) if isinstance(x, Fraction) else (int(x.p), int(x.q))
                return flint.nmod(num, self.p) / flint.nmod(den, self.p)
            return flint.nmod(int(x), self.p)
        if isinstance(x, flint.fmpq):
            return x
        if isinstance(x, Fraction):
            return flint.fmpq(x.numerator, x.denominator)
        if isinstance(x, str):
            f = Fraction(x)
            return flint.fmpq(f.numerator, f.denominator)
        return flint.fmpq(int(x))

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def to_int_pair(self, x):
        """(numerator, denominator) of a scalar; F_p values use [0, p)."""
        if self.p:
            return int(x), 1
        return int(x.p), int(x.q)

    def to_str(self, x) -> str:
        n, d = self.to_int_pair(x)
        return str(n) if d == 1 else f"{n}/{d}"

    def random_scalar(self, rng: random.Random, lo: int = -3, hi: int = 3):
        if self.p:
            return self(rng.randrange(self.p))
        return self(rng.randint(lo, hi))

    # matrices
    def zeros(self, r: int, c: int):
        if self.p:
            return flint.nmod_mat(r, c, self.p)
        return flint.fmpq_mat(r, c)

    def identity(self, n: int):
        m = self.zeros(n, n)
        for i in range(n):
            m[i, i] = 1
        return m

    def matrix(self, rows, ncols: int | None = None):
        rows = [list(r) for r in rows]
        r = len(rows)
        c = ncols if ncols is not None else (len(rows[0]) if rows else 0)
        flat = [self(x) for row in rows for x in row]
        return self.from_flat(r, c, flat)

    def from_flat(self, r: int, c: int, flat):
        if self.p:
            return flint.nmod_mat(r, c, [int(x) for x in flat], self.p)
        return flint.fmpq_mat(r, c, [x if type(x) is flint.fmpq else self(x) for x in flat])

    def column(self, values):
        values = list(values)
        return self.from_flat(len(values), 1, values)

    def random_matrix(self, rng: random.Random, r: int, c: int, lo: int = -3, hi: int = 3):
        return self.from_flat(r, c, [self.random_scalar(rng, lo, hi) for _ in range(r * c)])


def field_of(m) -> Field:
    if isinstance(m, flint.nmod_mat):
        return Field(m.modulus())
    return Field(0)


def shape(m):
    return m.nrows(), m.ncols()


def is_zero(m) -> bool:
    return all(x == 0 for x in m.entries())


def entries_rows(m):
    r, c = shape(m)
    e = m.entries()
    return [e[i * c:(i + 1) * c] for i in range(r)]


def col(m, j: int):
    return [m[i, j] for i in range(m.nrows())]


def rref(m):
    """Reduced row echelon form, pivot columns and rank."""
    r, c = shape(m)
    if r == 0 or c == 0:
        return m, [], 0
    red, rank = m.rref()
    pivots = []
    row = 0
    for j in range(c):
        if row < rank and red[row, j] != 0:
            pivots.append(j)
            row += 1
    return red, pivots, rank


def rank(m) -> int:
    r, c = shape(m)
    if r == 0 or c == 0:
        return 0
    return m.rank()


def kernel(m):
    """Matrix whose columns form a basis of {v : m v = 0} (free-column basis)."""
    F = field_of(m)
    r, c = shape(m)
    red, pivots, rk = rref(m)
    free = [j for j in range(c) if j not in set(pivots)]
    K = F.zeros(c, len(free))
    for k, j in enumerate(free):
        K[j, k] = 1
        for row, pj in enumerate(pivots):
            K[pj, k] = -red[row, j]
    return K


def kernel_basis(m):
    K = kernel(m)
    return [col(K, j) for j in range(K.ncols())]


def solve(m, b):
    """Some x with m x = b, or None when the system is inconsistent."""
    F = field_of(m)
    r, c = shape(m)
    if b.nrows() != r:
        raise ValueError("dimension mismatch in solve")
    k = b.ncols()
    if r == 0:
        return F.zeros(c, k)
    aug = hstack([m, b])
    red, pivots, rk = rref(aug)
    if any(p >= c for p in pivots):
        return None
    x = F.zeros(c, k)
    for row, pj in enumerate(pivots):
        for t in range(k):
            x[pj, t] = red[row, c + t]
    return x


def hstack(mats):
    mats = list(mats)
    r = mats[0].nrows()
    if any(x.nrows() != r for x in mats):
        raise ValueError("hstack row mismatch")
    return vstack([x.transpose() for x in mats]).transpose()


def vstack(mats):
    mats = list(mats)
    F = field_of(mats[0])
    c = mats[0].ncols()
    flat = []
    r = 0
    for x in mats:
        if x.ncols() != c:
            raise ValueError("vstack column mismatch")
        flat.extend(x.entries())
        r += x.nrows()
    return F.from_flat(r, c, flat)


def block_diag(mats):
    mats = list(mats)
    F = field_of(mats[0])
    R = sum(x.nrows() for x in mats)
    C = sum(x.ncols() for x in mats)
    out = F.zeros(R, C)
    ro = co = 0
    for x in mats:
        xr, xc = shape(x)
        e = x.entries()
        for i in range(xr):
            for j in range(xc):
                v = e[i * xc + j]
                if v != 0:
                    out[ro + i, co + j] = v
        ro += xr
        co += xc
    return out


def submatrix(m, rows, cols):
    F = field_of(m)
    rows, cols = list(rows), list(cols)
    if 4 * len(rows) * len(cols) < m.nrows() * m.ncols():
        flat = [m[i, j] for i in rows for j in cols]
    else:
        c = m.ncols()
        e = m.entries()
        flat = [e[i * c + j] for i in rows for j in cols]
    return F.from_flat(len(rows), len(cols), flat)


def select_columns(m, cols):
    return submatrix(m, range(m.nrows()), cols)


def select_rows(m, rows):
    return submatrix(m, rows, range(m.ncols()))


def column_space(m):
    """Canonical basis (columns) of the column space: transpose of nonzero rref rows."""
    F = field_of(m)
    r, c = shape(m)
    if c == 0 or r == 0:
        return F.zeros(r, 0)
    red, pivots, rk = rref(m.transpose())
    return select_rows(red, range(rk)).transpose()


def independent_columns(m):
    """Indices of the pivot columns (a maximal independent subset, greedy from the left)."""
    return rref(m)[1]


def span_sum(a, b):
    return column_space(hstack([a, b]))


def span_intersection(a, b):
    F = field_of(a)
    n = a.nrows()
    if a.ncols() == 0 or b.ncols() == 0:
        return F.zeros(n, 0)
    K = kernel(hstack([a, -b]))
    if K.ncols() == 0:
        return F.zeros(n, 0)
    return column_space(a * select_rows(K, range(a.ncols())))


def span_contains(a, v) -> bool:
    if v.ncols() == 0:
        return True
    if a.ncols() == 0:
        return is_zero(v)
    return rank(hstack([a, v])) == rank(a)


def complement(sub, whole):
    """Columns of ``whole`` (a subset) spanning a complement of span(sub) inside span(whole)."""
    k = sub.ncols()
    m = hstack([sub, whole])
    piv = rref(m)[1]
    base = rank(sub) if k else 0
    # pivots among the first k columns span sub; keep pivots from ``whole``
    picked = [p - k for p in piv if p >= k]
    if len([p for p in piv if p < k]) != base:
        raise AssertionError("complement: inconsistent rank")
    return select_columns(whole, picked)


def quotient_complement(big, small):
    """Standard-basis-vector complement of span(small) inside span(big)."""
    return complement(small, big)


def coordinates(basis, v):
    """Coordinates of the columns of v in the column basis ``basis`` (must exist)."""
    x = solve(basis, v)
    if x is None:
        raise ValueError("vector not in span")
    return x


def inverse(m):
    if m.nrows() == 0:
        return m
    return m.inv()


def is_invertible_matrix(m) -> bool:
    r, c = shape(m)
    return r == c and (r == 0 or m.rank() == r)


def det(m):
    F = field_of(m)
    if m.nrows() == 0:
        return F.one
    return m.det()


def charpoly_coeffs(m):
    """Coefficients (constant term first) of det(t - m)."""
    F = field_of(m)
    if m.nrows() == 0:
        return [F.one]
    cp = m.charpoly()
    return [F(c) for c in cp.coeffs()]


def apply_to_vector(m, v):
    """m times a python list, returned as a list."""
    F = field_of(m)
    return col(m * F.column(v), 0)


def kron(a, b):
    F = field_of(a)
    ar, ac = shape(a)
    br, bc = shape(b)
    out = F.zeros(ar * br, ac * bc)
    be = b.entries()
    for i in range(ar):
        for j in range(ac):
            x = a[i, j]
            if x == 0:
                continue
            for k in range(br):
                for l in range(bc):
                    y = be[k * bc + l]
                    if y != 0:
                        out[i * br + k, j * bc + l] = x * y
    return out


def equal(a, b) -> bool:
    return shape(a) == shape(b) and a.entries() == b.entries()
