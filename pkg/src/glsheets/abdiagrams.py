"""Labeled Young diagrams with rows alternating between two letters.

A diagram is a multiset of alternating strings over {a, b}; two labeled
pictures are the same diagram when they differ only by permuting rows
of equal length.  The canonical form sorts rows by length (descending)
and then lexicographically, which also fixes the serialization used by
the CLI: rows joined by "/".

These diagrams classify the nilpotent orbits of the block-split
involution's action: the diagram of a nilpotent x interchanging the
two summands is read off a Jordan string basis whose vectors each lie
wholly in one summand, and the rigidified diagram (drop as many
adjacent equal-length column pairs as possible) decides which orbits
share an irreducible sheet component.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from glsheets.errors import InternalInconsistencyError
from glsheets.involutions import Involution
from glsheets.linalg import RatMatrix, kernel_basis
from glsheets.partitions import Partition

_ZERO = Fraction(0)
_ONE = Fraction(1)


def alternating_row(start: str, length: int) -> str:
    """The alternating string of the given length starting with `start`."""
    if start not in ("a", "b"):
        raise ValueError("start letter must be 'a' or 'b'")
    other = "b" if start == "a" else "a"
    return "".join(start if i % 2 == 0 else other for i in range(length))


def _is_alternating(row: str) -> bool:
    return (
        len(row) > 0
        and all(ch in ("a", "b") for ch in row)
        and all(row[i] != row[i + 1] for i in range(len(row) - 1))
    )


@dataclass(frozen=True)
class ABDiagram:
    """Canonical multiset of alternating rows; may be empty."""

    rows: tuple[str, ...]

    def __post_init__(self):
        rows = tuple(sorted(self.rows, key=lambda s: (-len(s), s)))
        object.__setattr__(self, "rows", rows)
        for row in rows:
            if not _is_alternating(row):
                raise ValueError(f"row {row!r} does not alternate over a/b")

    @classmethod
    def parse(cls, text: str) -> "ABDiagram":
        if not text:
            return cls(())
        return cls(tuple(text.split("/")))

    @property
    def row_lengths(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    @property
    def total_size(self) -> int:
        return sum(self.row_lengths)

    def label_count(self, letter: str) -> int:
        return sum(r.count(letter) for r in self.rows)

    @property
    def signature(self) -> tuple[int, int]:
        return (self.label_count("a"), self.label_count("b"))

    @property
    def is_empty(self) -> bool:
        return not self.rows

    def shape(self) -> Partition:
        if self.is_empty:
            raise ValueError("empty diagram has no shape")
        return Partition(self.row_lengths)

    def __str__(self) -> str:
        return "/".join(self.rows)


def delta_of_phi(lam: Partition, phi) -> ABDiagram:
    """Diagram of shape lam whose row i starts with the i-th label."""
    labels = _phi_labels(lam, phi)
    return ABDiagram(
        tuple(alternating_row(s, p) for s, p in zip(labels, lam.parts))
    )


def _phi_labels(lam: Partition, phi) -> tuple[str, ...]:
    labels = tuple(phi)
    if len(labels) != lam.length:
        raise ValueError("label sequence must have one letter per part")
    if any(letter not in ("a", "b") for letter in labels):
        raise ValueError("labels must be 'a' or 'b'")
    return labels


def signature_of_phi(lam: Partition, phi) -> tuple[int, int]:
    """Letter counts of the labeled diagram: row i contributes
    ceil(lambda_i/2) of its start letter and floor(lambda_i/2) of the
    other."""
    labels = _phi_labels(lam, phi)
    na = 0
    for letter, p in zip(labels, lam.parts):
        na += (p + 1) // 2 if letter == "a" else p // 2
    return (na, lam.size - na)


def is_admissible(d: ABDiagram, na: int, nb: int) -> bool:
    """Exactly na labels a and nb labels b."""
    return d.signature == (na, nb)


def enumerate_admissible(lam: Partition, na: int, nb: int) -> tuple[ABDiagram, ...]:
    """All distinct diagrams of shape lam with the given letter counts.

    Every such diagram arises from some start-label assignment, so the
    2^delta assignments are swept and deduplicated.
    """
    if na + nb != lam.size:
        raise ValueError("letter counts must sum to the matrix size")
    seen = set()
    for bits in range(1 << lam.length):
        labels = tuple(
            "a" if (bits >> i) & 1 == 0 else "b" for i in range(lam.length)
        )
        if signature_of_phi(lam, labels) != (na, nb):
            continue
        seen.add(delta_of_phi(lam, labels))
    return tuple(sorted(seen, key=lambda d: d.rows))


# -- diagram of a nilpotent element ------------------------------------


def _graded_kernel(power: RatMatrix, indices: tuple[int, ...]) -> list[tuple]:
    """Basis of ker(power) intersected with the span of `indices`."""
    if not indices:
        return []
    n = power.nrows
    sub = RatMatrix(
        [[power.rows[r][c] for c in indices] for r in range(n)]
    )
    out = []
    for small in kernel_basis(sub):
        v = [_ZERO] * n
        for idx, val in zip(indices, small):
            v[idx] = val
        out.append(tuple(v))
    return out


class _Echelon:
    """Incremental row-echelon bookkeeping for independence tests."""

    def __init__(self):
        self.reduced: list[tuple[int, list[Fraction]]] = []

    def insert(self, vec: Sequence[Fraction]) -> bool:
        v = list(vec)
        for piv, w in self.reduced:
            coef = v[piv]
            if coef:
                v = [x - coef * y for x, y in zip(v, w)]
        piv = next((i for i, x in enumerate(v) if x), None)
        if piv is None:
            return False
        inv = _ONE / v[piv]
        self.reduced.append((piv, [x * inv for x in v]))
        return True


def gamma_of_nilpotent(inv: Involution, x: RatMatrix) -> ABDiagram:
    """Diagram of a nilpotent x exchanging the two summands.

    Because x swaps the summands, each kernel ker(x^k) is spanned by
    vectors lying wholly in one summand, and a Jordan string basis can
    be chosen homogeneous.  Rows are read along strings starting at a
    generator (a vector outside the image of x), whose letters then
    alternate; the result does not depend on the choices.
    """
    if inv.kind != "AIII":
        raise ValueError("diagrams require a block-split involution")
    n = inv.size
    if x.shape != (n, n):
        raise ValueError("shape mismatch")
    if inv.apply(x) != -x:
        raise ValueError("matrix does not exchange the two summands")
    classes = {"a": inv.a_indices, "b": inv.b_indices}
    kernels = [{"a": [], "b": []}]
    power = RatMatrix.identity(n)
    k = 0
    while True:
        total = len(kernels[-1]["a"]) + len(kernels[-1]["b"])
        if total == n:
            break
        k += 1
        if k > n:
            raise ValueError("matrix is not nilpotent")
        power = power @ x
        kernels.append(
            {cls: _graded_kernel(power, idx) for cls, idx in classes.items()}
        )
    depth = k
    rows: list[str] = []
    frontier: list[tuple[tuple, str]] = []
    for k in range(depth, 0, -1):
        new_gens = []
        for cls in ("a", "b"):
            ech = _Echelon()
            for v in kernels[k - 1][cls]:
                if not ech.insert(v):
                    raise InternalInconsistencyError("dependent kernel basis")
            for v, c in frontier:
                if c == cls and not ech.insert(v):
                    raise InternalInconsistencyError("dependent string image")
            for v in kernels[k][cls]:
                if ech.insert(v):
                    new_gens.append((v, cls))
                    rows.append(alternating_row(cls, k))
        frontier.extend(new_gens)
        if k > 1:
            frontier = [
                (x.apply(v), "b" if c == "a" else "a") for v, c in frontier
            ]
    return ABDiagram(tuple(rows))


# -- rigidification -----------------------------------------------------


def _column_counts(lengths: Sequence[int]) -> list[int]:
    """count[c] = number of rows of length > c (0-based column index)."""
    if not lengths:
        return []
    width = max(lengths)
    return [sum(1 for ln in lengths if ln > c) for c in range(width)]


def removable_column_pairs(d: ABDiagram) -> list[int]:
    """0-based columns c where columns c and c+1 have equal lengths."""
    counts = _column_counts(d.row_lengths)
    return [
        c
        for c in range(len(counts) - 1)
        if counts[c] == counts[c + 1] and counts[c] > 0
    ]


def remove_column_pair(d: ABDiagram, c: int) -> ABDiagram:
    """Delete columns c and c+1 (equal lengths required).

    Equal column lengths force every row meeting column c to also meet
    column c+1, so each affected row just shrinks by two boxes; since
    the removed boxes are one a and one b and the remaining positions
    shift by exactly two, the row keeps its start letter and stays
    alternating.
    """
    if c not in removable_column_pairs(d):
        raise ValueError("columns are not an equal-length adjacent pair")
    rows = []
    for row in d.rows:
        if len(row) > c:
            if len(row) - 2 > 0:
                rows.append(row[: len(row) - 2])
        else:
            rows.append(row)
    return ABDiagram(tuple(rows))


def rigidify(d: ABDiagram) -> ABDiagram:
    """Remove adjacent equal-length column pairs, leftmost first, to a
    fixpoint."""
    while True:
        options = removable_column_pairs(d)
        if not options:
            return d
        d = remove_column_pair(d, options[0])


def diagrams_of_shape(shape: Sequence[int]) -> Iterator[ABDiagram]:
    """All distinct diagrams with the given row lengths."""
    lengths = tuple(sorted(shape, reverse=True))
    if not lengths:
        yield ABDiagram(())
        return
    groups: list[tuple[int, int]] = []
    for ln in lengths:
        if groups and groups[-1][0] == ln:
            groups[-1] = (ln, groups[-1][1] + 1)
        else:
            groups.append((ln, 1))

    def rec(i: int, rows: list[str]) -> Iterator[ABDiagram]:
        if i == len(groups):
            yield ABDiagram(tuple(rows))
            return
        ln, count = groups[i]
        for n_a in range(count + 1):
            more = [alternating_row("a", ln)] * n_a
            more += [alternating_row("b", ln)] * (count - n_a)
            yield from rec(i + 1, rows + more)

    yield from rec(0, [])
