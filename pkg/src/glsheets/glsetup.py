"""Standard matrix apparatus attached to a nilpotent Jordan type.

For a partition (lambda_1 >= ... >= lambda_d) of N this module builds,
in the fixed block-major basis v^(1)_1..v^(1)_{lambda_1}, v^(2)_1, ...:

* the block upper-shift nilpotent e, the integer diagonal h and the
  lower companion f forming an sl2-triple,
* the ad-h grading of gl_N and projections onto its weight spaces,
* the centralizer of f (kernel of ad f),
* the torus of sheet parameters: diagonal matrices constant along the
  j-th column across all blocks, parametrized by lambda_1 coordinates,
* the distinguished +1/-1 coordinate pairs spanning the subspace of
  torus elements whose block spectra are symmetric under negation.

The block-major enumeration is fixed once here and shared by every
other module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from glsheets.linalg import RatMatrix, bracket, kernel_basis
from glsheets.partitions import Partition

_ZERO = Fraction(0)


class BasisIndex(NamedTuple):
    block: int  # 1-based block number
    position: int  # 1-based position inside the block
    flat: int  # 0-based index into the full basis


def block_offsets(lam: Partition) -> tuple[int, ...]:
    """Flat index of the first vector of each block."""
    offs = []
    acc = 0
    for p in lam.parts:
        offs.append(acc)
        acc += p
    return tuple(offs)


def basis_indices(lam: Partition) -> tuple[BasisIndex, ...]:
    """Block-major enumeration of the basis."""
    out = []
    flat = 0
    for i, p in enumerate(lam.parts, start=1):
        for j in range(1, p + 1):
            out.append(BasisIndex(i, j, flat))
            flat += 1
    return tuple(out)


def flat_index(lam: Partition, block: int, position: int) -> int:
    if not (1 <= block <= lam.length and 1 <= position <= lam.parts[block - 1]):
        raise ValueError("basis index out of range")
    return block_offsets(lam)[block - 1] + position - 1


@dataclass(frozen=True)
class SL2Triple:
    """An (e, h, f) triple with the standard commutation relations."""

    e: RatMatrix
    h: RatMatrix
    f: RatMatrix
    lam: Partition

    def __post_init__(self):
        if bracket(self.h, self.e) != self.e.scaled(2):
            raise ValueError("[h,e] != 2e")
        if bracket(self.h, self.f) != self.f.scaled(-2):
            raise ValueError("[h,f] != -2f")
        if bracket(self.e, self.f) != self.h:
            raise ValueError("[e,f] != h")

    @property
    def size(self) -> int:
        return self.e.nrows


def build_triple(lam: Partition) -> SL2Triple:
    """Block-diagonal standard triple for the given Jordan type.

    Per block of size L: e shifts v_j to v_{j-1}, h has diagonal
    L-1, L-3, ..., -L+1, and f maps v_j to j(L-j) v_{j+1}, the unique
    completion of (e, h) to a triple.
    """
    n = lam.size
    e = [[_ZERO] * n for _ in range(n)]
    h = [[_ZERO] * n for _ in range(n)]
    f = [[_ZERO] * n for _ in range(n)]
    for off, part in zip(block_offsets(lam), lam.parts):
        for k in range(part - 1):
            e[off + k][off + k + 1] = Fraction(1)
        for k in range(part):
            h[off + k][off + k] = Fraction(part - 1 - 2 * k)
        for j in range(1, part):
            f[off + j][off + j - 1] = Fraction(j * (part - j))
    return SL2Triple(RatMatrix(e), RatMatrix(h), RatMatrix(f), lam)


@dataclass(frozen=True)
class TorusElement:
    """Sheet-parameter torus point: column j carries coordinate x_j."""

    lam: Partition
    coords: tuple[Fraction, ...]

    def __post_init__(self):
        coords = tuple(Fraction(v) for v in self.coords)
        object.__setattr__(self, "coords", coords)
        if len(coords) != self.lam.width:
            raise ValueError("coordinate count must equal the largest part")

    def matrix(self) -> RatMatrix:
        return torus_matrix(self.lam, self.coords)

    def blocks(self) -> tuple[tuple[Fraction, ...], ...]:
        """Per-block diagonal values."""
        return tuple(self.coords[:p] for p in self.lam.parts)


def torus_matrix(lam: Partition, coords: Sequence) -> RatMatrix:
    """Diagonal matrix with entry x_j at position j of every block."""
    vals = [Fraction(v) for v in coords]
    if len(vals) != lam.width:
        raise ValueError("coordinate count must equal the largest part")
    diag = []
    for p in lam.parts:
        diag.extend(vals[:p])
    return RatMatrix.diagonal(diag)


def _integer_diagonal(h: RatMatrix) -> list[int]:
    if not h.is_square:
        raise ValueError("grading element must be square")
    for r in range(h.nrows):
        for c in range(h.ncols):
            v = h.rows[r][c]
            if r != c and v:
                raise ValueError("grading element must be diagonal")
            if r == c and v.denominator != 1:
                raise ValueError("grading element must have integer diagonal")
    return [int(h.rows[i][i]) for i in range(h.nrows)]


def grading_component(x: RatMatrix, h: RatMatrix, w: int) -> RatMatrix:
    """Projection of x onto the ad-h weight space of weight w."""
    d = _integer_diagonal(h)
    if x.shape != h.shape:
        raise ValueError("shape mismatch")
    data = tuple(
        tuple(v if d[r] - d[c] == w else _ZERO for c, v in enumerate(row))
        for r, row in enumerate(x.rows)
    )
    return RatMatrix._raw(data, x.nrows, x.ncols)


def grading_decomposition(x: RatMatrix, h: RatMatrix) -> dict[int, RatMatrix]:
    """Nonzero weight components of x, keyed by ad-h weight."""
    d = _integer_diagonal(h)
    if x.shape != h.shape:
        raise ValueError("shape mismatch")
    buckets: dict[int, list[list[Fraction]]] = {}
    for r, row in enumerate(x.rows):
        for c, v in enumerate(row):
            if v:
                w = d[r] - d[c]
                if w not in buckets:
                    buckets[w] = [[_ZERO] * x.ncols for _ in range(x.nrows)]
                buckets[w][r][c] = v
    return {w: RatMatrix(rows) for w, rows in sorted(buckets.items())}


def ad_matrix(m: RatMatrix) -> RatMatrix:
    """Matrix of ad(m) = [m, .] on gl_n in the elementary basis.

    Coordinates are row-major: the matrix unit E_{rc} sits at r*n + c.
    """
    if not m.is_square:
        raise ValueError("ad of a non-square matrix")
    n = m.nrows
    rows = [[_ZERO] * (n * n) for _ in range(n * n)]
    for r in range(n):
        for c in range(n):
            out = rows[r * n + c]
            for k in range(n):
                if m.rows[r][k]:
                    out[k * n + c] += m.rows[r][k]
                if m.rows[k][c]:
                    out[r * n + k] -= m.rows[k][c]
    return RatMatrix(rows)


def centralizer_of_f(triple: SL2Triple) -> list[RatMatrix]:
    """Basis of the kernel of ad f, as n x n matrices."""
    n = triple.size
    vectors = kernel_basis(ad_matrix(triple.f))
    return [RatMatrix.from_flat(n, n, v) for v in vectors]


def c_basis(lam: Partition) -> list[TorusElement]:
    """Adjacent +1/-1 coordinate pairs packed into each column gap.

    For block index i, floor((lambda_i - lambda_{i+1}) / 2) generators
    fit strictly between the column counts of rows i and i+1; their
    supports are pairwise disjoint, so every linear combination has
    per-block spectra symmetric under negation.
    """
    parts = lam.parts
    width = lam.width
    out = []
    for i in range(lam.length):
        nxt = parts[i + 1] if i + 1 < lam.length else 0
        for j in range((parts[i] - nxt) // 2):
            coords = [_ZERO] * width
            coords[nxt + 2 * j] = Fraction(1)
            coords[nxt + 2 * j + 1] = Fraction(-1)
            out.append(TorusElement(lam, tuple(coords)))
    return out
