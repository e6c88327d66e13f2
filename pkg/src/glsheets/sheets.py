"""Sheet-level classification built on top of the slice machinery.

Everything here is combinatorial in the partition and, for the
block-split case, in the admissible diagrams: Jordan types of slice
points, the per-block negation-symmetry condition on torus spectra,
dimension formulas, the two orbit tests (contains a semisimple point /
is a whole sheet by itself), and the grouping of admissible diagrams
into irreducible components of the slice-through-the-odd-part locus by
their rigidified diagrams.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from glsheets.abdiagrams import ABDiagram, enumerate_admissible, rigidify
from glsheets.glsetup import TorusElement, build_triple
from glsheets.involutions import (
    PairingViolation,
    build_AI,
    build_AII,
    build_AIII,
)
from glsheets.linalg import RatMatrix
from glsheets.partitions import Partition
from glsheets.slices import GradedPoint, epsilon, slice_contains

PAIRS = ("AI", "AII", "AIII")

BlockValues = tuple[tuple[Fraction, ...], ...]


def _require_pair(pair: str) -> str:
    if pair not in PAIRS:
        raise ValueError(f"unknown pair type {pair!r}")
    return pair


def _require_aii_pairing(lam: Partition) -> None:
    if lam.length % 2 != 0 or any(
        lam.parts[2 * i] != lam.parts[2 * i + 1] for i in range(lam.length // 2)
    ):
        raise PairingViolation(
            f"partition {lam} has an unpaired part; no symplectic form fixes it"
        )


def _blocks_of(lam: Partition, t) -> BlockValues:
    """Per-block diagonal values from a torus point or explicit blocks."""
    if isinstance(t, TorusElement):
        if t.lam != lam:
            raise ValueError("torus element belongs to a different partition")
        return t.blocks()
    blocks = tuple(tuple(Fraction(v) for v in blk) for blk in t)
    if len(blocks) != lam.length or any(
        len(blk) != p for blk, p in zip(blocks, lam.parts)
    ):
        raise ValueError("block values do not match the partition")
    return blocks


def multiplicities(lam: Partition, t) -> tuple[dict[Fraction, int], ...]:
    """Per-block eigenvalue multiplicity tables."""
    return tuple(dict(Counter(blk)) for blk in _blocks_of(lam, t))


def satisfies_mitc(lam: Partition, t) -> bool:
    """Every block's eigenvalue multiset is symmetric under negation."""
    for table in multiplicities(lam, t):
        if any(count != table.get(-value, 0) for value, count in table.items()):
            return False
    return True


@dataclass(frozen=True)
class JordanType:
    """Spectrum of the semisimple part plus the nilpotent partition."""

    semisimple_spectrum: tuple[tuple[Fraction, int], ...]
    nilpotent_partition: Partition


def jordan_type_on_slice(lam: Partition, t) -> JordanType:
    """Jordan type of e + t read off the block multiplicity tables.

    The semisimple part of e + t is conjugate to t itself, and the
    nilpotent part has one Jordan block per (block, eigenvalue) pair,
    of size equal to that eigenvalue's multiplicity in the block.
    """
    tables = multiplicities(lam, t)
    total: Counter = Counter()
    parts = []
    for table in tables:
        for value, count in table.items():
            total[value] += count
            parts.append(count)
    spectrum = tuple(sorted(total.items()))
    return JordanType(
        semisimple_spectrum=spectrum,
        nilpotent_partition=Partition(tuple(sorted(parts, reverse=True))),
    )


def slice_p_dimension(lam: Partition, pair: str) -> int:
    """Dimension of the odd part of the slice through the orbit."""
    _require_pair(pair)
    if pair == "AII":
        _require_aii_pairing(lam)
    if pair in ("AI", "AII"):
        return lam.width
    return sum(g // 2 for g in lam.gaps())


def intersection_dimension(lam: Partition, pair: str) -> int:
    """Dimension of the sheet's intersection with the odd part."""
    return lam.dim_k_orbit() + slice_p_dimension(lam, pair)


def is_dixmier(lam: Partition, pair: str) -> bool:
    """Does the sheet through this orbit contain a semisimple point?

    Always in the AI/AII families; for the block-split family exactly
    when at most one consecutive gap of the partition is odd.
    """
    _require_pair(pair)
    if pair == "AII":
        _require_aii_pairing(lam)
    if pair in ("AI", "AII"):
        return True
    return sum(1 for g in lam.gaps() if g % 2 == 1) <= 1


def is_rigid_orbit(lam: Partition, pair: str) -> bool:
    """Is the nilpotent orbit a whole sheet by itself?

    For AI/AII only the zero orbit; for the block-split family exactly
    when all consecutive gaps are at most 1 (zero slice dimension).
    """
    _require_pair(pair)
    if pair == "AII":
        _require_aii_pairing(lam)
    if pair in ("AI", "AII"):
        return all(p == 1 for p in lam.parts)
    return all(g <= 1 for g in lam.gaps())


@dataclass(frozen=True)
class SheetComponent:
    rigidified: ABDiagram
    orbits: tuple[ABDiagram, ...]


@dataclass(frozen=True)
class SheetDims:
    dim_g_orbit: int
    dim_k_orbit: int
    dim_slice_p: int
    dim_intersection: int


@dataclass(frozen=True)
class SheetFlags:
    dixmier: bool
    rigid_orbits: bool


@dataclass(frozen=True)
class SheetReport:
    lam: Partition
    pair: str
    signature: tuple[int, int] | None
    components: tuple[SheetComponent, ...]
    dims: SheetDims
    flags: SheetFlags


def k_sheet_components(lam: Partition, na: int, nb: int) -> SheetReport:
    """Decompose the admissible orbits into sheet components.

    Two orbits lie in the same irreducible component exactly when their
    rigidified diagrams agree, so the components are the fibers of
    rigidify over the admissible diagrams.
    """
    diagrams = enumerate_admissible(lam, na, nb)
    groups: dict[ABDiagram, list[ABDiagram]] = {}
    for d in diagrams:
        groups.setdefault(rigidify(d), []).append(d)
    components = tuple(
        SheetComponent(rigid, tuple(sorted(members, key=lambda d: d.rows)))
        for rigid, members in sorted(groups.items(), key=lambda kv: kv[0].rows)
    )
    dims = SheetDims(
        dim_g_orbit=lam.dim_g_orbit(),
        dim_k_orbit=lam.dim_k_orbit(),
        dim_slice_p=slice_p_dimension(lam, "AIII"),
        dim_intersection=intersection_dimension(lam, "AIII"),
    )
    flags = SheetFlags(
        dixmier=is_dixmier(lam, "AIII"),
        rigid_orbits=is_rigid_orbit(lam, "AIII"),
    )
    return SheetReport(
        lam=lam,
        pair="AIII",
        signature=(na, nb),
        components=components,
        dims=dims,
        flags=flags,
    )


@dataclass(frozen=True)
class SliceMembership:
    """Outcome of projecting e + t and testing the odd-part membership."""

    lam: Partition
    pair: str
    point: RatMatrix
    in_slice: bool
    expected_in_p: bool
    observed_in_p: bool

    @property
    def consistent(self) -> bool:
        return self.in_slice and self.expected_in_p == self.observed_in_p


def verify_slice_membership(
    lam: Partition, pair: str, coords: Sequence, phi=None
) -> SliceMembership:
    """Project e + t onto the slice and compare odd-part membership
    against the prediction (always for AI/AII; the negation-symmetry
    condition for the block-split family)."""
    _require_pair(pair)
    triple = build_triple(lam)
    t = TorusElement(lam, tuple(Fraction(v) for v in coords))
    x = epsilon(GradedPoint(triple, t.matrix()))
    if pair == "AI":
        inv = build_AI(lam)
        expected = True
    elif pair == "AII":
        inv = build_AII(lam)
        expected = True
    else:
        inv = build_AIII(lam, phi if phi is not None else "a" * lam.length)
        expected = satisfies_mitc(lam, t)
    return SliceMembership(
        lam=lam,
        pair=pair,
        point=x,
        in_slice=slice_contains(triple, x),
        expected_in_p=expected,
        observed_in_p=inv.in_p(x),
    )
