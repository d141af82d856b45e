from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from e67lie import linalg


def test_rank_and_nullity_small():
    m = linalg.matrix([[1, 2, 3], [2, 4, 6], [0, 1, 1]])
    assert linalg.rank(m) == 2
    assert linalg.nullity(m) == 1


def test_nullspace_vectors_annihilate():
    m = linalg.matrix([[1, 2, 0, 1], [0, 0, 1, 2]])
    basis = linalg.nullspace(m)
    assert len(basis) == 2
    for v in basis:
        assert all(x == 0 for x in linalg.mat_vec(m, v))


def test_solve_consistent_and_inconsistent():
    m = linalg.matrix([[1, 1], [1, -1], [2, 0]])
    x = linalg.solve(m, [Fraction(3), Fraction(1), Fraction(4)])
    assert x == [Fraction(2), Fraction(1)]
    assert linalg.solve(m, [Fraction(3), Fraction(1), Fraction(5)]) is None


def test_prepared_solver_matches_solve():
    m = linalg.matrix([[1, 2], [3, 4], [5, 6]])
    ps = linalg.PreparedSolver(m)
    b = [Fraction(3), Fraction(7), Fraction(11)]
    assert ps.solve(b) == linalg.solve(m, b)
    assert ps.solve([Fraction(1), Fraction(0), Fraction(0)]) is None


def test_signature_diagonal_cases():
    assert linalg.signature(linalg.matrix([[2, 0], [0, -3]])) == (1, 1, 0)
    assert linalg.signature(linalg.matrix([[0, 1], [1, 0]])) == (1, 1, 0)
    assert linalg.signature(linalg.matrix([[0, 0], [0, 0]])) == (0, 0, 2)


def test_signature_rejects_asymmetric():
    with pytest.raises(ValueError):
        linalg.signature(linalg.matrix([[0, 1], [2, 0]]))


def test_clear_denominators():
    m = [[Fraction(1, 2), Fraction(3, 4)], [Fraction(0), Fraction(5)]]
    assert linalg.clear_denominators(m) == [[2, 3], [0, 1]]


small_int = st.integers(min_value=-6, max_value=6)


@settings(max_examples=150, deadline=None)
@given(
    rows=st.integers(1, 5),
    cols=st.integers(1, 5),
    data=st.data(),
)
def test_bareiss_rank_agrees_with_fraction_rank(rows, cols, data):
    """Two independent eliminations (fraction-free integer Bareiss and full
    Fraction Gauss-Jordan) must agree on the rank."""
    entries = data.draw(
        st.lists(st.lists(small_int, min_size=cols, max_size=cols), min_size=rows, max_size=rows)
    )
    m = linalg.matrix(entries)
    assert linalg.bareiss_rank(entries) == linalg.rank(m)


@settings(max_examples=100, deadline=None)
@given(n=st.integers(1, 4), data=st.data())
def test_signature_counts_sum_to_dimension(n, data):
    entries = data.draw(
        st.lists(st.lists(small_int, min_size=n, max_size=n), min_size=n, max_size=n)
    )
    sym = [[entries[i][j] + entries[j][i] for j in range(n)] for i in range(n)]
    pos, neg, zero = linalg.signature(linalg.matrix(sym))
    assert pos + neg + zero == n
    assert pos + neg == linalg.rank(linalg.matrix(sym))
