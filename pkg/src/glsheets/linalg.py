"""Dense exact linear algebra over the rationals.

Scalars are `fractions.Fraction` values (always reduced, denominator
positive) and matrices are immutable row-major `RatMatrix` objects.
Rank-style eliminations run fraction-free (Bareiss) on an integer
rescaling of the input, which keeps intermediate growth polynomial.
Questions with no answer inside Q -- an irrational spectrum, an
inconsistent linear system -- are reported as values (`None`) instead
of exceptions, so callers may probe freely.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

Rational = Fraction
Vector = tuple[Fraction, ...]

_ZERO = Fraction(0)
_ONE = Fraction(1)


class RatMatrix:
    """Immutable dense matrix with exact rational entries."""

    __slots__ = ("rows", "nrows", "ncols", "_hash")

    def __init__(self, rows: Iterable[Iterable]):
        data = tuple(tuple(Fraction(v) for v in row) for row in rows)
        if not data or not data[0]:
            raise ValueError("matrix needs at least one row and one column")
        width = len(data[0])
        if any(len(row) != width for row in data):
            raise ValueError("rows of unequal length")
        self.rows = data
        self.nrows = len(data)
        self.ncols = width
        self._hash = None

    @classmethod
    def _raw(cls, data: tuple, nrows: int, ncols: int) -> "RatMatrix":
        m = object.__new__(cls)
        m.rows = data
        m.nrows = nrows
        m.ncols = ncols
        m._hash = None
        return m

    @classmethod
    def zeros(cls, nrows: int, ncols: int | None = None) -> "RatMatrix":
        ncols = nrows if ncols is None else ncols
        row = (_ZERO,) * ncols
        return cls._raw(tuple(row for _ in range(nrows)), nrows, ncols)

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        data = tuple(
            tuple(_ONE if i == j else _ZERO for j in range(n)) for i in range(n)
        )
        return cls._raw(data, n, n)

    @classmethod
    def diagonal(cls, values: Sequence) -> "RatMatrix":
        vals = [Fraction(v) for v in values]
        n = len(vals)
        data = tuple(
            tuple(vals[i] if i == j else _ZERO for j in range(n)) for i in range(n)
        )
        return cls._raw(data, n, n)

    @classmethod
    def from_flat(cls, nrows: int, ncols: int, entries: Sequence) -> "RatMatrix":
        vals = [Fraction(v) for v in entries]
        if len(vals) != nrows * ncols:
            raise ValueError("entry count does not match shape")
        data = tuple(
            tuple(vals[r * ncols + c] for c in range(ncols)) for r in range(nrows)
        )
        return cls._raw(data, nrows, ncols)

    # -- basic queries ------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        r, c = key
        return self.rows[r][c]

    def row(self, i: int) -> Vector:
        return self.rows[i]

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.rows)

    def diagonal_entries(self) -> Vector:
        return tuple(self.rows[i][i] for i in range(min(self.nrows, self.ncols)))

    def trace(self) -> Fraction:
        if not self.is_square:
            raise ValueError("trace of a non-square matrix")
        return sum((self.rows[i][i] for i in range(self.nrows)), _ZERO)

    def is_zero(self) -> bool:
        return all(not v for row in self.rows for v in row)

    def to_lists(self) -> list[list[Fraction]]:
        return [list(row) for row in self.rows]

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: "RatMatrix") -> "RatMatrix":
        if not isinstance(other, RatMatrix):
            return NotImplemented
        if self.shape != other.shape:
            raise ValueError("shape mismatch in addition")
        data = tuple(
            tuple(a + b for a, b in zip(ra, rb))
            for ra, rb in zip(self.rows, other.rows)
        )
        return RatMatrix._raw(data, self.nrows, self.ncols)

    def __sub__(self, other: "RatMatrix") -> "RatMatrix":
        if not isinstance(other, RatMatrix):
            return NotImplemented
        if self.shape != other.shape:
            raise ValueError("shape mismatch in subtraction")
        data = tuple(
            tuple(a - b for a, b in zip(ra, rb))
            for ra, rb in zip(self.rows, other.rows)
        )
        return RatMatrix._raw(data, self.nrows, self.ncols)

    def __neg__(self) -> "RatMatrix":
        data = tuple(tuple(-v for v in row) for row in self.rows)
        return RatMatrix._raw(data, self.nrows, self.ncols)

    def scaled(self, s) -> "RatMatrix":
        s = Fraction(s)
        data = tuple(tuple(s * v for v in row) for row in self.rows)
        return RatMatrix._raw(data, self.nrows, self.ncols)

    def __mul__(self, s) -> "RatMatrix":
        if isinstance(s, RatMatrix):
            return NotImplemented
        return self.scaled(s)

    __rmul__ = __mul__

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if not isinstance(other, RatMatrix):
            return NotImplemented
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch in product")
        orows = other.rows
        out = []
        for row in self.rows:
            acc = [_ZERO] * other.ncols
            for j, v in enumerate(row):
                if not v:
                    continue
                orow = orows[j]
                for c, w in enumerate(orow):
                    if w:
                        acc[c] = acc[c] + v * w
            out.append(tuple(acc))
        return RatMatrix._raw(tuple(out), self.nrows, other.ncols)

    def __pow__(self, k: int) -> "RatMatrix":
        if not self.is_square or k < 0:
            raise ValueError("power needs a square matrix and k >= 0")
        result = RatMatrix.identity(self.nrows)
        for _ in range(k):
            result = result @ self
        return result

    def transpose(self) -> "RatMatrix":
        data = tuple(
            tuple(self.rows[r][c] for r in range(self.nrows))
            for c in range(self.ncols)
        )
        return RatMatrix._raw(data, self.ncols, self.nrows)

    def apply(self, vec: Sequence) -> Vector:
        v = [Fraction(x) for x in vec]
        if len(v) != self.ncols:
            raise ValueError("vector length mismatch")
        out = []
        for row in self.rows:
            acc = _ZERO
            for a, b in zip(row, v):
                if a and b:
                    acc += a * b
            out.append(acc)
        return tuple(out)

    # -- comparisons --------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.rows)
        return self._hash

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(v) for v in row) for row in self.rows)
        return f"RatMatrix[{self.nrows}x{self.ncols}: {body}]"


def bracket(x: RatMatrix, y: RatMatrix) -> RatMatrix:
    """Commutator x@y - y@x of two square matrices of equal size."""
    if not (x.is_square and y.is_square and x.nrows == y.nrows):
        raise ValueError("bracket needs square matrices of equal size")
    return x @ y - y @ x


# -- eliminations -----------------------------------------------------


def _int_rows(x: RatMatrix) -> list[list[int]]:
    """Integer copy of x, each row rescaled by its denominator lcm."""
    out = []
    for row in x.rows:
        den = lcm(*(v.denominator for v in row))
        out.append([int(v * den) for v in row])
    return out


def rank(x: RatMatrix) -> int:
    """Rank over Q, by fraction-free (Bareiss) elimination."""
    m = _int_rows(x)
    nrows, ncols = x.nrows, x.ncols
    prev = 1
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c]), None)
        if piv is None:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, nrows):
            mic = m[i][c]
            mrc = m[r][c]
            if mic:
                row_i, row_r = m[i], m[r]
                for j in range(c + 1, ncols):
                    row_i[j] = (mrc * row_i[j] - mic * row_r[j]) // prev
                row_i[c] = 0
            elif prev != 1 or mrc != 1:
                row_i = m[i]
                for j in range(c + 1, ncols):
                    row_i[j] = (mrc * row_i[j]) // prev
        prev = m[r][c]
        r += 1
        if r == nrows:
            break
    return r


def _rref(m: list[list[Fraction]]) -> list[int]:
    """In-place reduced row echelon form; returns pivot column indices."""
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c]), None)
        if piv is None:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        inv = _ONE / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(nrows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


def kernel_basis(x: RatMatrix) -> list[Vector]:
    """Basis of the right null space; empty list when injective."""
    m = [list(row) for row in x.rows]
    pivots = _rref(m)
    pivot_set = set(pivots)
    basis = []
    for j in range(x.ncols):
        if j in pivot_set:
            continue
        v = [_ZERO] * x.ncols
        v[j] = _ONE
        for r, pc in enumerate(pivots):
            v[pc] = -m[r][j]
        basis.append(tuple(v))
    return basis


def solve_linear(a: RatMatrix, b: Sequence) -> Vector | None:
    """Any solution of a @ x = b, or None when the system is inconsistent."""
    rhs = [Fraction(v) for v in b]
    if len(rhs) != a.nrows:
        raise ValueError("right-hand side length mismatch")
    m = [list(row) + [bv] for row, bv in zip(a.rows, rhs)]
    pivots = _rref(m)
    if pivots and pivots[-1] == a.ncols:
        return None
    x = [_ZERO] * a.ncols
    for r, pc in enumerate(pivots):
        x[pc] = m[r][a.ncols]
    return tuple(x)


def inverse(a: RatMatrix) -> RatMatrix:
    """Exact inverse of a square matrix; raises ValueError when singular."""
    if not a.is_square:
        raise ValueError("inverse of a non-square matrix")
    n = a.nrows
    ident = RatMatrix.identity(n)
    m = [list(row) + list(irow) for row, irow in zip(a.rows, ident.rows)]
    pivots = _rref(m)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    data = tuple(tuple(m[r][n:]) for r in range(n))
    return RatMatrix._raw(data, n, n)


# -- characteristic polynomial and spectrum ---------------------------
#
# Polynomials are tuples of Fractions in descending degree order, with
# no leading zeros; () is the zero polynomial.


def _int_matmul(a: list[list[int]], b: list[list[int]], n: int) -> list[list[int]]:
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        arow = a[i]
        orow = out[i]
        for k in range(n):
            v = arow[k]
            if v:
                brow = b[k]
                for j in range(n):
                    if brow[j]:
                        orow[j] += v * brow[j]
    return out


def char_poly(x: RatMatrix) -> tuple[Fraction, ...]:
    """Monic characteristic polynomial, descending coefficients.

    Computed by the trace recursion (Faddeev-LeVerrier) on an integer
    rescaling of the matrix, so every division is exact.
    """
    if not x.is_square:
        raise ValueError("characteristic polynomial of a non-square matrix")
    n = x.nrows
    den = lcm(*(v.denominator for row in x.rows for v in row))
    a = [[int(v * den) for v in row] for row in x.rows]
    coeffs = [1]
    m = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for k in range(1, n + 1):
        am = _int_matmul(a, m, n)
        ck = -sum(am[i][i] for i in range(n)) // k
        coeffs.append(ck)
        if k < n:
            m = [
                [am[i][j] + (ck if i == j else 0) for j in range(n)]
                for i in range(n)
            ]
    return tuple(Fraction(c, den**k) for k, c in enumerate(coeffs))


def _poly_normalize(p: Sequence[Fraction]) -> tuple[Fraction, ...]:
    i = 0
    while i < len(p) and not p[i]:
        i += 1
    return tuple(p[i:])


def _poly_deriv(p: Sequence[Fraction]) -> tuple[Fraction, ...]:
    n = len(p) - 1
    if n <= 0:
        return ()
    return _poly_normalize(tuple(p[k] * (n - k) for k in range(n)))


def _poly_divmod(a, b):
    a = list(_poly_normalize(a))
    b = _poly_normalize(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = []
    while a and len(a) >= len(b):
        coef = a[0] / b[0]
        q.append(coef)
        for i in range(1, len(b)):
            a[i] -= coef * b[i]
        a.pop(0)
    return tuple(q), _poly_normalize(a)


def _poly_gcd(a, b):
    a = _poly_normalize(a)
    b = _poly_normalize(b)
    while b:
        _, r = _poly_divmod(a, b)
        a, b = b, r
    if not a:
        return ()
    lead = a[0]
    return tuple(c / lead for c in a)


def _poly_eval(p: Sequence, v: Fraction) -> Fraction:
    acc = _ZERO
    for c in p:
        acc = acc * v + c
    return acc


def _divisors(n: int) -> list[int]:
    n = abs(n)
    out = []
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            if i != n // i:
                out.append(n // i)
        i += 1
    return out


def _rational_roots(p: tuple[Fraction, ...]) -> list[Fraction]:
    """Distinct rational roots of a squarefree polynomial."""
    if len(p) <= 1:
        return []
    den = lcm(*(c.denominator for c in p))
    ip = [int(c * den) for c in p]
    roots = []
    while ip and ip[-1] == 0:
        if not roots:
            roots.append(_ZERO)
        ip.pop()
    if len(ip) <= 1:
        return sorted(roots)
    lead, const = ip[0], ip[-1]
    for u in _divisors(const):
        for v in _divisors(lead):
            if gcd(u, v) != 1:
                continue
            for cand in (Fraction(u, v), Fraction(-u, v)):
                if _poly_eval(ip, cand) == 0:
                    roots.append(cand)
    return sorted(set(roots))


def rational_spectrum(x: RatMatrix) -> dict[Fraction, int] | None:
    """Eigenvalues with algebraic multiplicities, when all are rational.

    Returns None when the characteristic polynomial does not split over
    Q.  That is an answer, not an error: callers probe with it.
    """
    p = char_poly(x)
    g = _poly_gcd(p, _poly_deriv(p))
    radical, rem = _poly_divmod(p, g) if g else (p, ())
    if rem:
        raise AssertionError("radical division must be exact")
    radical = _poly_normalize(radical)
    roots = _rational_roots(radical)
    if len(roots) < len(radical) - 1:
        return None
    mults: dict[Fraction, int] = {}
    q = p
    for c in roots:
        m = 0
        while True:
            qq, r = _poly_divmod(q, (_ONE, -c))
            if r:
                break
            q = qq
            m += 1
        mults[c] = m
    if sum(mults.values()) != x.nrows:
        raise AssertionError("split spectrum must account for the full degree")
    return mults


# -- nilpotent exponentials -------------------------------------------


def exp_nilpotent(n: RatMatrix) -> RatMatrix:
    """exp(n) by the finite series; raises ValueError unless n^N = 0."""
    if not n.is_square:
        raise ValueError("exponential of a non-square matrix")
    acc = RatMatrix.identity(n.nrows)
    term = acc
    for k in range(1, n.nrows + 1):
        term = (term @ n).scaled(Fraction(1, k))
        if term.is_zero():
            return acc
        acc = acc + term
    raise ValueError("matrix is not nilpotent")


def conjugate_by_exp(n: RatMatrix, x: RatMatrix) -> RatMatrix:
    """exp(n) @ x @ exp(-n) for nilpotent n, all exact."""
    if n.shape != x.shape or not n.is_square:
        raise ValueError("conjugation needs square matrices of equal size")
    e = exp_nilpotent(n)
    e_inv = exp_nilpotent(-n)
    return e @ x @ e_inv
