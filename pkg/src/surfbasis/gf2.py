"""Bit vectors and bit matrices over GF(2).

Rows are packed into Python integers (bit ``j`` of a row is column ``j``),
so XOR and AND act on whole machine words at a time.
"""

from __future__ import annotations

from typing import Iterable, Sequence


class SingularMatrixError(ArithmeticError):
    pass


def parity(x: int) -> int:
    return x.bit_count() & 1


def bits_of(x: int):
    """Yield the indices of set bits in increasing order."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


class BitVec:
    __slots__ = ("length", "bits")

    def __init__(self, length: int, bits: int = 0):
        if length < 0:
            raise ValueError("negative length")
        if bits >> length:
            raise ValueError("bits set beyond the vector length")
        self.length = length
        self.bits = bits

    @classmethod
    def from_list(cls, values: Sequence[int]) -> BitVec:
        bits = 0
        for i, b in enumerate(values):
            if b & 1:
                bits |= 1 << i
        return cls(len(values), bits)

    @classmethod
    def from_string(cls, s: str) -> BitVec:
        """``"1010"`` -> bit 0 is 1, bit 2 is 1."""
        return cls.from_list([int(c) for c in s])

    def to_list(self) -> list[int]:
        return [(self.bits >> i) & 1 for i in range(self.length)]

    def __str__(self) -> str:
        return "".join(map(str, self.to_list()))

    def __repr__(self) -> str:
        return f"BitVec({str(self)!r})"

    def __len__(self) -> int:
        return self.length

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.length:
            raise IndexError(i)
        return (self.bits >> i) & 1

    def _check(self, other: BitVec) -> None:
        if self.length != other.length:
            raise ValueError(f"length mismatch: {self.length} != {other.length}")

    def __xor__(self, other: BitVec) -> BitVec:
        self._check(other)
        return BitVec(self.length, self.bits ^ other.bits)

    def __eq__(self, other) -> bool:
        return isinstance(other, BitVec) and self.length == other.length and self.bits == other.bits

    def __hash__(self) -> int:
        return hash((self.length, self.bits))

    def dot(self, other: BitVec) -> int:
        self._check(other)
        return parity(self.bits & other.bits)

    def any(self) -> bool:
        return self.bits != 0


def dot(u: BitVec, v: BitVec) -> int:
    return u.dot(v)


class BitMatrix:
    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, nrows: int, ncols: int, rows: Iterable[int] | None = None):
        self.nrows = nrows
        self.ncols = ncols
        self.rows = list(rows) if rows is not None else [0] * nrows
        if len(self.rows) != nrows:
            raise ValueError("row count mismatch")
        limit = 1 << ncols
        for r in self.rows:
            if r < 0 or r >= limit:
                raise ValueError("row has bits beyond the column count")

    @classmethod
    def identity(cls, n: int) -> BitMatrix:
        return cls(n, n, [1 << i for i in range(n)])

    @classmethod
    def from_lists(cls, lists: Sequence[Sequence[int]]) -> BitMatrix:
        ncols = len(lists[0]) if lists else 0
        rows = []
        for row in lists:
            if len(row) != ncols:
                raise ValueError("ragged matrix")
            rows.append(BitVec.from_list(row).bits)
        return cls(len(lists), ncols, rows)

    def to_lists(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.ncols)] for r in self.rows]

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return (self.rows[i] >> j) & 1

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BitMatrix)
            and (self.nrows, self.ncols) == (other.nrows, other.ncols)
            and self.rows == other.rows
        )

    def __repr__(self) -> str:
        return f"BitMatrix({self.to_lists()!r})"

    def __matmul__(self, other: BitMatrix) -> BitMatrix:
        return mat_mul(self, other)

    def transpose(self) -> BitMatrix:
        cols = [0] * self.ncols
        for i, r in enumerate(self.rows):
            for j in bits_of(r):
                cols[j] |= 1 << i
        return BitMatrix(self.ncols, self.nrows, cols)

    def inverse(self) -> BitMatrix:
        return mat_inverse(self)

    def rank(self) -> int:
        return rank(self.rows)


def mat_mul(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    if a.ncols != b.nrows:
        raise ValueError(f"dimension mismatch: {a.nrows}x{a.ncols} @ {b.nrows}x{b.ncols}")
    out = []
    brows = b.rows
    for r in a.rows:
        acc = 0
        for j in bits_of(r):
            acc ^= brows[j]
        out.append(acc)
    return BitMatrix(a.nrows, b.ncols, out)


def mat_inverse(a: BitMatrix) -> BitMatrix:
    """Gauss-Jordan inverse; pivots are taken from the first row with the bit set."""
    if a.nrows != a.ncols:
        raise ValueError("only square matrices are invertible")
    n = a.nrows
    work = list(a.rows)
    inv = [1 << i for i in range(n)]
    for col in range(n):
        bit = 1 << col
        pivot = next((r for r in range(col, n) if work[r] & bit), None)
        if pivot is None:
            raise SingularMatrixError(f"matrix is singular (no pivot in column {col})")
        if pivot != col:
            work[col], work[pivot] = work[pivot], work[col]
            inv[col], inv[pivot] = inv[pivot], inv[col]
        prow, pinv = work[col], inv[col]
        for r in range(n):
            if r != col and work[r] & bit:
                work[r] ^= prow
                inv[r] ^= pinv
    return BitMatrix(n, n, inv)


def rank(rows: Iterable[int]) -> int:
    """Rank of a set of packed rows."""
    pivots: dict[int, int] = {}
    for r in rows:
        while r:
            top = r.bit_length() - 1
            if top in pivots:
                r ^= pivots[top]
            else:
                pivots[top] = r
                break
    return len(pivots)


class XorBasis:
    """Incremental GF(2) basis; ``add`` reports whether a vector was independent."""

    def __init__(self):
        self.pivots: dict[int, int] = {}

    def reduce(self, v: int) -> int:
        pivots = self.pivots
        while v:
            top = v.bit_length() - 1
            p = pivots.get(top)
            if p is None:
                return v
            v ^= p
        return 0

    def add(self, v: int) -> bool:
        v = self.reduce(v)
        if not v:
            return False
        self.pivots[v.bit_length() - 1] = v
        return True

    def __len__(self) -> int:
        return len(self.pivots)
