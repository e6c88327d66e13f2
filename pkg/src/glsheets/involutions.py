"""Involutions of gl_N adapted to the standard block triple.

Three families are built, all fixing the standard (e, h, f) as a
normal triple (e, f in the -1 eigenspace, h in the +1 eigenspace):

* AI   -- x |-> -S^{-1} x^T S for the block-antidiagonal symmetric
          Gram matrix S; fixed space isomorphic to so_N.
* AII  -- same formula for a symplectic Gram matrix pairing blocks
          2i-1 and 2i; requires consecutive parts to match in pairs.
* AIII -- conjugation by a +/-1 diagonal J splitting the basis into
          two groups that alternate along each block; fixed space
          gl(V_a) + gl(V_b).

The descriptor stores whatever realizes theta cheaply (Gram matrix and
its inverse, or the index split) and applies it as a pure function.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from glsheets.glsetup import SL2Triple, block_offsets
from glsheets.linalg import RatMatrix, inverse
from glsheets.partitions import Partition

_ZERO = Fraction(0)
_ONE = Fraction(1)

PAIR_KINDS = ("AI", "AII", "AIII")


class PairingViolation(ValueError):
    """The partition cannot carry a symplectic-type involution."""


@dataclass(frozen=True)
class Involution:
    """Descriptor of an involutive Lie-algebra automorphism of gl_N."""

    kind: str
    lam: Partition
    gram: RatMatrix | None = None
    gram_inv: RatMatrix | None = None
    phi: tuple[str, ...] | None = None
    a_indices: tuple[int, ...] | None = None
    b_indices: tuple[int, ...] | None = None
    signature: tuple[int, int] | None = None

    @property
    def size(self) -> int:
        return self.lam.size

    def apply(self, x: RatMatrix) -> RatMatrix:
        """theta(x)."""
        if x.shape != (self.size, self.size):
            raise ValueError("shape mismatch")
        if self.kind == "AIII":
            a_set = set(self.a_indices)
            sign = [1 if i in a_set else -1 for i in range(self.size)]
            data = tuple(
                tuple(v if sign[r] == sign[c] else -v for c, v in enumerate(row))
                for r, row in enumerate(x.rows)
            )
            return RatMatrix._raw(data, x.nrows, x.ncols)
        return -(self.gram_inv @ x.transpose() @ self.gram)

    def k_part(self, x: RatMatrix) -> RatMatrix:
        return (x + self.apply(x)).scaled(Fraction(1, 2))

    def p_part(self, x: RatMatrix) -> RatMatrix:
        return (x - self.apply(x)).scaled(Fraction(1, 2))

    def in_k(self, x: RatMatrix) -> bool:
        return self.apply(x) == x

    def in_p(self, x: RatMatrix) -> bool:
        return self.apply(x) == -x


def build_AI(lam: Partition) -> Involution:
    """Orthogonal-type involution from block antidiagonal-ones forms."""
    n = lam.size
    gram = [[_ZERO] * n for _ in range(n)]
    for off, part in zip(block_offsets(lam), lam.parts):
        for j in range(1, part + 1):
            gram[off + j - 1][off + part - j] = _ONE
    s = RatMatrix(gram)
    return Involution(kind="AI", lam=lam, gram=s, gram_inv=inverse(s))


def build_AII(lam: Partition) -> Involution:
    """Symplectic-type involution; parts must match in consecutive pairs."""
    if lam.length % 2 != 0 or any(
        lam.parts[2 * i] != lam.parts[2 * i + 1] for i in range(lam.length // 2)
    ):
        raise PairingViolation(
            f"partition {lam} has an unpaired part; no symplectic form fixes it"
        )
    n = lam.size
    offs = block_offsets(lam)
    gram = [[_ZERO] * n for _ in range(n)]
    for i in range(0, lam.length, 2):
        part = lam.parts[i]
        lo, hi = offs[i], offs[i + 1]
        for j in range(1, part + 1):
            k = part + 1 - j
            gram[lo + j - 1][hi + k - 1] = _ONE
            gram[hi + j - 1][lo + k - 1] = -_ONE
    s = RatMatrix(gram)
    return Involution(kind="AII", lam=lam, gram=s, gram_inv=inverse(s))


def _normalize_phi(lam: Partition, phi) -> tuple[str, ...]:
    labels = tuple(phi)
    if len(labels) != lam.length:
        raise ValueError("label sequence must have one letter per part")
    if any(letter not in ("a", "b") for letter in labels):
        raise ValueError("labels must be 'a' or 'b'")
    return labels


def build_AIII(lam: Partition, phi) -> Involution:
    """Block-diagonal involution from an a/b start label per block.

    Basis vector j of block i goes to the 'a' group when the label of
    its row-end parity class matches: label a with lambda_i - j even,
    or label b with lambda_i - j odd.
    """
    labels = _normalize_phi(lam, phi)
    a_idx, b_idx = [], []
    flat = 0
    for i, part in enumerate(lam.parts):
        for j in range(1, part + 1):
            even = (part - j) % 2 == 0
            if (labels[i] == "a") == even:
                a_idx.append(flat)
            else:
                b_idx.append(flat)
            flat += 1
    return Involution(
        kind="AIII",
        lam=lam,
        phi=labels,
        a_indices=tuple(a_idx),
        b_indices=tuple(b_idx),
        signature=(len(a_idx), len(b_idx)),
    )


def is_normal_triple(inv: Involution, triple: SL2Triple) -> bool:
    """True when theta(e) = -e, theta(f) = -f and theta(h) = h."""
    return inv.in_p(triple.e) and inv.in_p(triple.f) and inv.in_k(triple.h)


def fixed_space_dims(inv: Involution) -> tuple[int, int]:
    """(dim k, dim p) from the trace of theta on gl_N."""
    n = inv.size
    if inv.kind == "AIII":
        na, nb = inv.signature
        tr = (na - nb) ** 2
    else:
        s, si = inv.gram, inv.gram_inv
        tr = -sum(
            si.rows[r][c] * s.rows[r][c] for r in range(n) for c in range(n)
        )
    dim_k = (n * n + tr) // 2
    return int(dim_k), n * n - int(dim_k)
