"""
Tests for GF(2) elimination
"""

import itertools

import hypothesis.strategies as st
import numpy as np
import pytest
from hypothesis import given, settings

from core.enums import Gf2Status
from core.exceptions import DimensionMismatchError
from linalg.gf2 import Gf2Matrix, gf2_rank, gf2_solve, pack_bits, unpack_bits


def test_pack_and_unpack():
    assert pack_bits([1, 0, 1]) == 5
    assert unpack_bits(5, 4) == (1, 0, 1, 0)


def test_unique_solution():
    A = Gf2Matrix.from_dense([[1, 0], [1, 1]])
    solution = gf2_solve(A, [1, 0])
    assert solution.status is Gf2Status.UNIQUE
    assert solution.particular == (1, 1)
    assert solution.count() == 1


def test_affine_solution():
    solution = gf2_solve(Gf2Matrix.from_dense([[1, 1]]), [1])
    assert solution.status is Gf2Status.AFFINE
    assert solution.kernel_basis == ((1, 1),)
    assert solution.count() == 2
    assert sorted(solution.iter_solutions()) == [(0, 1), (1, 0)]


def test_inconsistent_system():
    A = Gf2Matrix.from_dense([[1, 1], [1, 1]])
    solution = gf2_solve(A, [0, 1])
    assert not solution.is_consistent()
    assert solution.count() == 0
    assert list(solution.iter_solutions()) == []


def test_packed_right_hand_side():
    A = Gf2Matrix.from_dense([[1, 0], [0, 1]])
    assert gf2_solve(A, 0b10).particular == (0, 1)


def test_dimension_mismatch():
    A = Gf2Matrix.from_dense([[1, 0], [0, 1]])
    with pytest.raises(DimensionMismatchError):
        gf2_solve(A, [1, 0, 1])
    with pytest.raises(DimensionMismatchError):
        A.multiply([1])


def test_rank_of_dependent_rows():
    A = Gf2Matrix.from_dense([[1, 1, 0], [0, 1, 1], [1, 0, 1]])
    assert gf2_rank(A) == 2


@pytest.mark.parametrize("seed", range(20))
def test_every_enumerated_vector_solves(seed):
    rng = np.random.default_rng(seed)
    dense = rng.integers(0, 2, size=(5, 6))
    A = Gf2Matrix.from_dense(dense)
    b = A.multiply(rng.integers(0, 2, size=6).tolist())
    solution = gf2_solve(A, b)
    assert solution.is_consistent()
    found = set(solution.iter_solutions())
    assert len(found) == solution.count()
    brute = {x for x in itertools.product((0, 1), repeat=6) if A.multiply(x) == b}
    assert found == brute


def test_dense_round_trip():
    dense = [[0, 1, 1], [1, 0, 0]]
    A = Gf2Matrix.from_dense(dense)
    assert A.get(0, 2) == 1
    assert A.to_dense().tolist() == dense


@st.composite
def gf2_systems(draw):
    """Random A (up to 12 × 12) with b either in the column space or arbitrary"""
    rows = draw(st.integers(1, 12))
    cols = draw(st.integers(1, 12))
    dense = draw(st.lists(st.lists(st.integers(0, 1), min_size=cols, max_size=cols), min_size=rows, max_size=rows))
    A = Gf2Matrix.from_dense(dense)
    if draw(st.booleans()):
        b = A.multiply(draw(st.lists(st.integers(0, 1), min_size=cols, max_size=cols)))
    else:
        b = tuple(draw(st.lists(st.integers(0, 1), min_size=rows, max_size=rows)))
    return A, tuple(b)


@given(gf2_systems())
@settings(max_examples=100, deadline=None)
def test_count_matches_exhaustive_search(system):
    A, b = system
    n = A.shape[1]
    solution = gf2_solve(A, b)
    brute = {x for x in itertools.product((0, 1), repeat=n) if A.multiply(x) == b}
    assert solution.count() == len(brute)
    assert solution.is_consistent() == bool(brute)
    assert set(solution.iter_solutions()) == brute
    assert solution.kernel_dimension == n - gf2_rank(A)
    for vector in solution.kernel_basis:
        assert not any(A.multiply(vector))
