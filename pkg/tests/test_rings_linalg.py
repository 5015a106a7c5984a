import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gvand.linalg import (
    fraction_rank,
    identity,
    integer_det,
    integer_rank,
    mat_mul,
    solve_affine,
    solve_linear,
    vec_mat,
)
from gvand.rings import GF, ZZ, CoefficientRing, is_prime


def test_ring_validation():
    assert ZZ.characteristic == 0
    assert GF(7).characteristic == 7
    with pytest.raises(ValueError):
        CoefficientRing(6)
    with pytest.raises(ValueError):
        CoefficientRing(-3)
    with pytest.raises(ValueError):
        GF(0)


def test_is_prime_small():
    primes = [p for p in range(60) if is_prime(p)]
    assert primes == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]


def test_normalize_and_invert():
    ring = GF(5)
    assert ring.normalize(-1) == 4
    assert ring.normalize(12) == 2
    assert ring.invert(2) == 3
    assert ZZ.normalize(-7) == -7
    with pytest.raises(ZeroDivisionError):
        ring.invert(0)
    with pytest.raises(ZeroDivisionError):
        ZZ.invert(2)


def test_divide_exact():
    assert ZZ.divide_exact(6, 3) == 2
    assert ZZ.divide_exact(7, 3) is None
    assert GF(5).divide_exact(3, 2) == 4  # 3 * inv(2) = 3 * 3 = 9 = 4
    with pytest.raises(ZeroDivisionError):
        ZZ.divide_exact(1, 0)


def _naive_det(m):
    n = len(m)
    if n == 1:
        return m[0][0]
    total = 0
    for j in range(n):
        minor = [row[:j] + row[j + 1 :] for row in m[1:]]
        total += (-1) ** j * m[0][j] * _naive_det(minor)
    return total


@given(st.lists(st.lists(st.integers(-9, 9), min_size=3, max_size=3), min_size=3, max_size=3))
def test_integer_det_matches_cofactor_recursion(m):
    assert integer_det(m) == _naive_det(m)


def test_integer_rank_examples():
    assert integer_rank([[1, 2], [2, 4]]) == 1
    assert integer_rank([[1, 2], [3, 4]]) == 2
    assert integer_rank([[0, 0], [0, 0]]) == 0
    assert integer_rank([[1, 1, 1]]) == 1


def test_rank_is_transpose_invariant():
    rng = random.Random(5)
    for _ in range(25):
        rows, cols = rng.randint(1, 4), rng.randint(1, 4)
        m = [[rng.randint(-6, 6) for _ in range(cols)] for _ in range(rows)]
        mt = [list(col) for col in zip(*m)]
        assert integer_rank(m) == integer_rank(mt) == fraction_rank(m)


def test_mat_mul_identity():
    m = [[1, 2, 3], [4, 5, 6]]
    assert mat_mul(m, identity(3)) == m
    assert vec_mat((1, 1), m) == (5, 7, 9)


def test_solve_linear_and_affine():
    sol = solve_linear([[2, 0], [1, 1]], [4, 3])
    assert sol == [Fraction(2), Fraction(1)]
    assert solve_linear([[1, 1], [2, 2]], [1, 2]) is None

    normal, offset = solve_affine([(0, 0), (1, 0), (0, 1)], [1, 3, 5])
    assert normal == (Fraction(2), Fraction(4))
    assert offset == Fraction(1)
    assert solve_affine([(0, 0), (1, 1), (2, 2)], [0, 1, 2]) is None
