"""Partition arithmetic for Jordan types of nilpotent N x N matrices.

Partitions index both the nilpotent orbits and the sheets they sit in,
so everything downstream keys on this type.  Parts are stored weakly
decreasing; out-of-order input is rejected rather than silently sorted.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator


@dataclass(frozen=True, order=True)
class Partition:
    """Weakly decreasing positive integers."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if not parts:
            raise ValueError("partition needs at least one part")
        if any(p <= 0 for p in parts):
            raise ValueError("parts must be positive")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError("parts must be weakly decreasing")

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse comma-separated parts, e.g. "4,3,1"."""
        try:
            parts = tuple(int(tok) for tok in text.split(","))
        except ValueError:
            raise ValueError(f"cannot parse partition from {text!r}") from None
        return cls(parts)

    @property
    def size(self) -> int:
        """Total number of boxes, usually called N."""
        return sum(self.parts)

    @property
    def length(self) -> int:
        """Number of parts."""
        return len(self.parts)

    @property
    def width(self) -> int:
        """Largest part."""
        return self.parts[0]

    def transpose(self) -> "Partition":
        """Column lengths of the Young diagram; an involution."""
        cols = [0] * self.width
        for p in self.parts:
            for j in range(p):
                cols[j] += 1
        return Partition(tuple(cols))

    def gaps(self) -> tuple[int, ...]:
        """Consecutive differences, the last part compared against 0."""
        ps = self.parts
        return tuple(
            ps[i] - (ps[i + 1] if i + 1 < len(ps) else 0) for i in range(len(ps))
        )

    def dim_g_orbit(self) -> int:
        """Dimension of the conjugation orbit of a nilpotent of this type."""
        return self.size**2 - sum(c**2 for c in self.transpose().parts)

    def dim_k_orbit(self) -> int:
        """Half the full orbit dimension (always an even split)."""
        d = self.dim_g_orbit()
        assert d % 2 == 0
        return d // 2

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)


def _descending_parts(n: int, max_part: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in _descending_parts(n - first, first):
            yield (first, *rest)


def partitions_of(n: int) -> Iterator[Partition]:
    """All partitions of n, descending lexicographic order."""
    if n <= 0:
        raise ValueError("n must be positive")
    for parts in _descending_parts(n, n):
        yield Partition(parts)
