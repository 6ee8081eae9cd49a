"""Support-vector recursion shared by the cycle-basis and homology-basis drivers.

The driver keeps ``dim`` support vectors ``S_0 .. S_{dim-1}`` (ints over
GF(2)).  The cycle chosen for ``S_j`` is the cheapest one whose signature
has odd inner product with ``S_j``; afterwards the pending vectors are
corrected so they become orthogonal to every chosen signature.  Updates are
batched: after a block of ``h`` selections the next ``k - h`` vectors are
fixed with one matrix product ``A = Y X^-1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .surface import EmbeddedGraph
from .gf2 import BitMatrix, bits_of, mat_inverse, mat_mul, parity, rank


class InvariantError(AssertionError):
    """A support-vector invariant failed; this is a bug, not bad input."""


def extend_basis(
    dim: int,
    select: Callable[[int], int],
    signature: Callable[[int], int],
    recursion: str = "balanced",
    check: bool = False,
) -> tuple[list[int], list[int], list[int]]:
    """Run the recursion; returns ``(cycles, signatures, support_vectors)``."""
    if recursion not in ("balanced", "simple"):
        raise ValueError(f"unknown recursion {recursion!r}")
    S = [1 << i for i in range(dim)]
    cycles = [0] * dim
    sigs = [0] * dim

    def verify(committed: int, lo: int, hi: int) -> None:
        if rank(S) != dim:
            raise InvariantError("support vectors lost full rank")
        for j in range(lo, hi):
            for c in range(committed):
                if parity(S[j] & sigs[c]):
                    raise InvariantError(f"support vector {j} not orthogonal to cycle {c}")

    def update(j: int, h: int, k: int) -> None:
        X = BitMatrix(h, h, [
            sum(parity(S[j + a] & sigs[j + b]) << b for b in range(h)) for a in range(h)
        ])
        Y = BitMatrix(k - h, h, [
            sum(parity(S[j + h + a] & sigs[j + b]) << b for b in range(h)) for a in range(k - h)
        ])
        A = mat_mul(Y, mat_inverse(X))
        for a, row in enumerate(A.rows):
            acc = 0
            for b in bits_of(row):
                acc ^= S[j + b]
            S[j + h + a] ^= acc
        if check:
            verify(j + h, j + h, j + k)

    def leaf(j: int) -> None:
        s = S[j]
        if not s:
            raise InvariantError(f"support vector {j} is zero")
        cyc = select(s)
        sig = signature(cyc)
        if not parity(s & sig):
            raise InvariantError(f"selected cycle {j} misses its support vector")
        cycles[j], sigs[j] = cyc, sig

    def extend(j: int, k: int) -> None:
        # the second recursive call is a tail call; loop instead so the
        # simple (h = 1) variant does not recurse dim levels deep
        while k > 1:
            h = k // 2 if recursion == "balanced" else 1
            extend(j, h)
            update(j, h, k)
            j, k = j + h, k - h
        leaf(j)

    if dim:
        extend(0, dim)
        if check and rank(sigs) != dim:
            raise InvariantError("selected cycles are dependent")
    return cycles, sigs, S


@dataclass
class Basis:
    """An ordered list of cycles (edge masks) of ``graph``."""

    graph: EmbeddedGraph
    cycles: list
    forced: int = 0  # how many leading cycles came from the sparsifier

    @property
    def weights(self) -> list:
        return [self.graph.weight(bits_of(c)) for c in self.cycles]

    @property
    def total(self):
        return sum(self.weights)

    def edge_lists(self) -> list[list[int]]:
        return [list(bits_of(c)) for c in self.cycles]

    def __len__(self) -> int:
        return len(self.cycles)
