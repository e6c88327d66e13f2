"""Projection onto the transverse slice through a nilpotent element.

Given the standard triple (e, h, f), any point e + z with z in the
non-positive even part of the ad-h grading is conjugate to a unique
point of the affine slice e + ker(ad f).  The projection is computed
weight by weight: at target weight w the space g_w splits as
[e, g_{w-2}] + (ker ad f cap g_w); the component of the running point
at weight w is corrected by conjugating with exp(eta) for the unique
eta in g_{w-2} with [e, eta] equal to the first summand's part.  Each
conjugation only touches weights at or below w, so one sweep from
weight 0 down lands exactly on the slice.

The per-weight splitting data depends only on the triple and is cached;
evaluating the projection at a point costs one small linear solve and
one nilpotent conjugation per weight.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from glsheets.errors import InternalInconsistencyError
from glsheets.glsetup import (
    SL2Triple,
    _integer_diagonal,
    grading_decomposition,
    torus_matrix,
)
from glsheets.linalg import (
    RatMatrix,
    bracket,
    conjugate_by_exp,
    inverse,
    kernel_basis,
    rank,
    rational_spectrum,
)

_ZERO = Fraction(0)


@dataclass(frozen=True)
class GradedPoint:
    """A point e + z with z supported on non-positive even weights."""

    triple: SL2Triple
    z: RatMatrix

    def __post_init__(self):
        if self.z.shape != self.triple.e.shape:
            raise ValueError("shape mismatch")
        d = _integer_diagonal(self.triple.h)
        for r, row in enumerate(self.z.rows):
            for c, v in enumerate(row):
                if not v:
                    continue
                w = d[r] - d[c]
                if w > 0 or w % 2 != 0:
                    raise ValueError(
                        f"component at weight {w}; only non-positive even "
                        "weights are allowed"
                    )

    @classmethod
    def from_torus(cls, triple: SL2Triple, coords: Sequence) -> "GradedPoint":
        return cls(triple, torus_matrix(triple.lam, coords))

    @property
    def point(self) -> RatMatrix:
        return self.triple.e + self.z


def _ad_elem_coords(
    m: RatMatrix, r: int, c: int, pos: dict[tuple[int, int], int]
) -> list[Fraction]:
    """Coordinates of [m, E_rc] in the coordinate chart `pos`."""
    acc: dict[tuple[int, int], Fraction] = {}
    n = m.nrows
    for i in range(n):
        a = m.rows[i][r]
        if a:
            key = (i, c)
            acc[key] = acc.get(key, _ZERO) + a
        b = m.rows[c][i]
        if b:
            key = (r, i)
            acc[key] = acc.get(key, _ZERO) - b
    out = [_ZERO] * len(pos)
    for key, val in acc.items():
        if not val:
            continue
        idx = pos.get(key)
        if idx is None:
            raise InternalInconsistencyError(
                "bracket left the expected weight space"
            )
        out[idx] = val
    return out


class _SliceProjector:
    """Per-triple splitting data for the weight-by-weight projection."""

    def __init__(self, triple: SL2Triple):
        self.triple = triple
        n = triple.size
        d = _integer_diagonal(triple.h)
        by_weight: dict[int, list[tuple[int, int]]] = {}
        for r in range(n):
            for c in range(n):
                by_weight.setdefault(d[r] - d[c], []).append((r, c))
        lowest = -2 * triple.lam.width
        steps = []
        for w in range(0, lowest - 1, -2):
            target = by_weight.get(w, [])
            domain = by_weight.get(w - 2, [])
            if not target or not domain:
                continue
            pos_target = {rc: i for i, rc in enumerate(target)}
            pos_domain = {rc: i for i, rc in enumerate(domain)}
            # kernel of ad f restricted to the target weight space
            adf_cols = [
                _ad_elem_coords(triple.f, r, c, pos_domain) for (r, c) in target
            ]
            adf = RatMatrix(
                [[adf_cols[j][i] for j in range(len(target))]
                 for i in range(len(domain))]
            )
            lker = kernel_basis(adf)
            img_cols = [
                _ad_elem_coords(triple.e, r, c, pos_target) for (r, c) in domain
            ]
            ncols = len(img_cols) + len(lker)
            if ncols != len(target):
                raise InternalInconsistencyError(
                    "weight space does not split as image plus kernel"
                )
            m = RatMatrix(
                [
                    [img_cols[j][i] for j in range(len(img_cols))]
                    + [lker[j][i] for j in range(len(lker))]
                    for i in range(len(target))
                ]
            )
            try:
                m_inv = inverse(m)
            except ValueError as exc:
                raise InternalInconsistencyError(
                    "degenerate splitting at a weight space"
                ) from exc
            steps.append((target, domain, m_inv))
        self.steps = steps

    def project(self, z: RatMatrix) -> RatMatrix:
        e = self.triple.e
        x = e + z
        n = x.nrows
        for target, domain, m_inv in self.steps:
            wvec = [x.rows[r][c] for (r, c) in target]
            if not any(wvec):
                continue
            u = m_inv.apply(wvec)
            if not any(u[: len(domain)]):
                continue
            eta = [[_ZERO] * n for _ in range(n)]
            for coeff, (r, c) in zip(u, domain):
                if coeff:
                    eta[r][c] = coeff
            x = conjugate_by_exp(RatMatrix(eta), x)
        if not bracket(self.triple.f, x - e).is_zero():
            raise InternalInconsistencyError("projection missed the slice")
        return x


@lru_cache(maxsize=None)
def _projector(triple: SL2Triple) -> _SliceProjector:
    return _SliceProjector(triple)


def epsilon(pt: GradedPoint) -> RatMatrix:
    """The unique slice point conjugate to e + z."""
    return _projector(pt.triple).project(pt.z)


def slice_contains(triple: SL2Triple, x: RatMatrix) -> bool:
    """Membership in the affine slice e + ker(ad f)."""
    if x.shape != triple.e.shape:
        raise ValueError("shape mismatch")
    return bracket(triple.f, x - triple.e).is_zero()


def rank_profile(x: RatMatrix, c) -> tuple[int, ...]:
    """Ranks of (x - c I)^k for k = 1, 2, ... until they stabilize."""
    c = Fraction(c)
    m = x - RatMatrix.identity(x.nrows).scaled(c)
    ranks = [rank(m)]
    power = m
    for _ in range(x.nrows):
        power = power @ m
        r = rank(power)
        if r == ranks[-1]:
            break
        ranks.append(r)
    return tuple(ranks)


def same_rank_profile(x: RatMatrix, y: RatMatrix) -> bool:
    """Conjugacy test for matrices whose spectra split over Q.

    Two such matrices are conjugate exactly when, for every rational c,
    all ranks of (. - c I)^k agree.  Raises ValueError when a spectrum
    does not split.
    """
    if x.shape != y.shape or not x.is_square:
        raise ValueError("profiles need square matrices of equal size")
    sx = rational_spectrum(x)
    sy = rational_spectrum(y)
    if sx is None or sy is None:
        raise ValueError("spectrum does not split over the rationals")
    if sx != sy:
        return False
    return all(rank_profile(x, c) == rank_profile(y, c) for c in sx)


def scaling_action(s, triple: SL2Triple, x: RatMatrix) -> RatMatrix:
    """One-parameter contraction: weight-w components scale by s^(w-2).

    Fixes e, preserves the slice, and flows every slice point to e as
    s goes to 0.
    """
    s = Fraction(s)
    if not s:
        raise ValueError("scale must be nonzero")
    parts = grading_decomposition(x, triple.h)
    out = RatMatrix.zeros(x.nrows, x.ncols)
    for w, comp in parts.items():
        out = out + comp.scaled(s ** (w - 2))
    return out
