from __future__ import annotations

import random

import pytest
from hypothesis import given, settings, strategies as st

from surfbasis.gf2 import (
    BitMatrix, BitVec, SingularMatrixError, XorBasis, bits_of, dot, mat_inverse, mat_mul, parity, rank,
)


def naive_mul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    return [
        [sum(a[i][k] & b[k][j] for k in range(len(b))) % 2 for j in range(len(b[0]))]
        for i in range(len(a))
    ]


def random_invertible(n: int, rng: random.Random) -> BitMatrix:
    # product of a random unit lower and unit upper triangular matrix, then a row shuffle
    lower = [(rng.getrandbits(n) & ((1 << i) - 1)) | (1 << i) for i in range(n)]
    upper = [(rng.getrandbits(n) & ~((1 << (i + 1)) - 1) & ((1 << n) - 1)) | (1 << i) for i in range(n)]
    m = mat_mul(BitMatrix(n, n, lower), BitMatrix(n, n, upper))
    rows = m.rows[:]
    rng.shuffle(rows)
    return BitMatrix(n, n, rows)


def test_bitvec_examples():
    v = BitVec.from_string("1010")
    assert v.bits == 0b0101 and v.to_list() == [1, 0, 1, 0] and str(v) == "1010"
    w = BitVec.from_list([1, 1, 0, 0])
    assert str(v ^ w) == "0110"
    assert dot(v, w) == 1 and v.dot(BitVec.from_string("0101")) == 0
    assert v[0] == 1 and v[1] == 0 and len(v) == 4


def test_bitvec_length_checks():
    with pytest.raises(ValueError):
        BitVec(2, 0b100)
    with pytest.raises(ValueError):
        BitVec(3) ^ BitVec(4)


def test_small_inverse():
    a = BitMatrix.from_lists([[1, 1], [0, 1]])
    assert mat_inverse(a).to_lists() == [[1, 1], [0, 1]]
    b = BitMatrix.from_lists([[0, 1, 0], [1, 0, 0], [1, 1, 1]])
    assert (b @ b.inverse()) == BitMatrix.identity(3)


def test_singular():
    with pytest.raises(SingularMatrixError):
        mat_inverse(BitMatrix.from_lists([[1, 1], [1, 1]]))
    with pytest.raises(ValueError):
        mat_inverse(BitMatrix(2, 3))


def test_mul_dimension_mismatch():
    with pytest.raises(ValueError):
        mat_mul(BitMatrix(2, 3), BitMatrix(2, 3))


def test_transpose_and_rank():
    a = BitMatrix.from_lists([[1, 0, 1], [0, 1, 1]])
    assert a.transpose().to_lists() == [[1, 0], [0, 1], [1, 1]]
    assert a.rank() == 2 and rank([0b11, 0b11, 0]) == 1


def test_inverse_random_up_to_128():
    rng = random.Random(7)
    sizes = [1, 2, 3, 5, 8, 16, 31, 64, 100, 128]
    for t in range(100):
        n = sizes[t % len(sizes)]
        a = random_invertible(n, rng)
        assert a @ mat_inverse(a) == BitMatrix.identity(n)
        assert mat_inverse(a) @ a == BitMatrix.identity(n)


def test_mul_matches_naive():
    rng = random.Random(11)
    for _ in range(50):
        p, q, r = rng.randint(1, 20), rng.randint(1, 20), rng.randint(1, 20)
        a = [[rng.randint(0, 1) for _ in range(q)] for _ in range(p)]
        b = [[rng.randint(0, 1) for _ in range(r)] for _ in range(q)]
        assert mat_mul(BitMatrix.from_lists(a), BitMatrix.from_lists(b)).to_lists() == naive_mul(a, b)


@settings(max_examples=100)
@given(st.lists(st.integers(0, 2**12 - 1), max_size=16))
def test_xor_basis_matches_rank(rows):
    xb = XorBasis()
    for r in rows:
        xb.add(r)
    assert len(xb) == rank(rows)
    for r in rows:
        assert xb.reduce(r) == 0


@given(st.integers(0, 2**64))
def test_bits_and_parity(x):
    bits = list(bits_of(x))
    assert sum(1 << b for b in bits) == x and bits == sorted(bits)
    assert parity(x) == len(bits) % 2


@settings(max_examples=50)
@given(st.integers(1, 24), st.integers(0, 2**32))
def test_rank_is_transpose_invariant(n, seed):
    rng = random.Random(seed)
    a = BitMatrix(n, n + 3, [rng.getrandbits(n + 3) for _ in range(n)])
    assert a.rank() == a.transpose().rank()
