import random
from fractions import Fraction

import numpy as np
import pytest

from laurentfft.rational import (RationalMatrix, ZeroMatrixError, matmul_exact,
                                 matvec_exact, rank, rank_factor, rref, vstack)
from oracles import sympy_rank, sympy_rref


def test_constructor_and_accessors():
    m = RationalMatrix([[1, 2], [3, "1/2"]])
    assert (m.rows, m.cols) == (2, 2)
    assert m.entry(1, 1) == Fraction(1, 2)
    assert m.row(0) == (1, 2)
    assert m.column(0) == (1, 3)


def test_constructor_rejects_ragged_rows():
    with pytest.raises(ValueError):
        RationalMatrix([[1, 2], [3]])


def test_empty_matrix_needs_explicit_cols():
    with pytest.raises(ValueError):
        RationalMatrix([])
    m = RationalMatrix([], cols=5)
    assert (m.rows, m.cols) == (0, 5)
    assert m.is_zero()


def test_zero_columns_rejected():
    with pytest.raises(ValueError):
        RationalMatrix([], cols=0)


def test_from_int_matrix_roundtrip():
    arr = np.array([[0, 1, -1], [2, 0, 0]])
    m = RationalMatrix.from_int_matrix(arr)
    assert np.array_equal(m.to_int_array(), arr)


def test_to_int_array_rejects_fractions():
    with pytest.raises(ValueError):
        RationalMatrix([["1/2"]]).to_int_array()


def test_identity_and_zeros():
    assert rank(RationalMatrix.identity(4)) == 4
    assert RationalMatrix.zeros(2, 3).is_zero()


def test_rref_simple_example():
    m = RationalMatrix([[2, 4], [1, 2]])
    result = rref(m)
    assert result.rank == 1
    assert result.pivot_cols == (0,)
    assert result.rref.entries == ((Fraction(1), Fraction(2)),)


def test_rref_of_zero_matrix_is_empty():
    result = rref(RationalMatrix.zeros(3, 3))
    assert result.rank == 0
    assert result.rref.rows == 0
    assert result.pivot_cols == ()


def test_rref_idempotent():
    m = RationalMatrix([[1, 2, 3], [4, 5, 6], [7, 8, 9]])
    once = rref(m).rref
    again = rref(once)
    assert again.rref == once


def _random_int_matrix(rng: random.Random):
    rows = rng.randint(1, 7)
    cols = rng.randint(1, 7)
    data = [[rng.randint(-3, 3) for _ in range(cols)] for _ in range(rows)]
    # often fold in a dependent row so low rank gets exercised
    if rows >= 2 and rng.random() < 0.5:
        i, j = rng.randrange(rows), rng.randrange(rows)
        if i != j:
            scale = rng.choice([-2, -1, 1, 2])
            data[i] = [scale * x for x in data[j]]
    return data


def test_rref_matches_sympy_on_random_matrices():
    rng = random.Random(20260822)
    for _ in range(200):
        data = _random_int_matrix(rng)
        m = RationalMatrix(data)
        result = rref(m)
        expected_rows, expected_pivots = sympy_rref(data)
        assert result.rank == sympy_rank(data)
        assert result.pivot_cols == expected_pivots
        assert [list(row) for row in result.rref.entries] == expected_rows


def test_rank_factor_reconstructs_exactly():
    rng = random.Random(99)
    checked = 0
    while checked < 100:
        data = _random_int_matrix(rng)
        m = RationalMatrix(data)
        if m.is_zero():
            continue
        c, r = rank_factor(m)
        assert matmul_exact(c, r) == m
        assert r.rows == rank(m)
        assert c.cols == r.rows
        checked += 1


def test_rank_factor_rejects_zero_matrix():
    with pytest.raises(ZeroMatrixError):
        rank_factor(RationalMatrix.zeros(2, 2))


def test_vstack():
    a = RationalMatrix([[1, 0]])
    b = RationalMatrix([[0, 1], [1, 1]])
    assert vstack(a, b).entries == ((Fraction(1), Fraction(0)),
                                    (Fraction(0), Fraction(1)),
                                    (Fraction(1), Fraction(1)))
    with pytest.raises(ValueError):
        vstack(a, RationalMatrix([[1, 2, 3]]))


def test_vstack_rank_is_subadditive():
    rng = random.Random(7)
    for _ in range(50):
        a = RationalMatrix(_random_int_matrix(rng))
        b_data = [[rng.randint(-3, 3) for _ in range(a.cols)]
                  for _ in range(rng.randint(1, 4))]
        b = RationalMatrix(b_data)
        stacked = rank(vstack(a, b))
        assert max(rank(a), rank(b)) <= stacked <= rank(a) + rank(b)


def test_matvec_exact():
    m = RationalMatrix([[1, -1, 0], [0, "1/2", 2]])
    assert matvec_exact(m, [3, 1, "1/4"]) == (2, 1)
    with pytest.raises(ValueError):
        matvec_exact(m, [1, 2])


def test_matmul_shape_check():
    with pytest.raises(ValueError):
        matmul_exact(RationalMatrix([[1, 2]]), RationalMatrix([[1, 2]]))


def test_float_array_conversion():
    m = RationalMatrix([["1/2", 1], [0, "-3/4"]])
    assert np.allclose(m.to_float_array(), [[0.5, 1.0], [0.0, -0.75]])
    empty = rref(RationalMatrix.zeros(2, 2)).rref
    assert empty.to_float_array().shape == (0, 2)
