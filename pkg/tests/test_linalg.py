"""Exact sparse linear algebra: RREF, nullspaces, interior projections.

The property tests compare against a deliberately naive dense elimination
written inline, so the two implementations share no code.
"""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gradedlie.linalg import (LinalgError, SparseMatrix, VectorBasis,
                              nullspace, project_basis, rank,
                              rank_of_projection, rref)


def F(x):
    return Fraction(x)


# ---------------------------------------------------------------------------
# matrix container


def test_sparse_matrix_never_stores_zeros():
    m = SparseMatrix(2, 2, {(0, 0): 1, (0, 1): 0, (1, 1): F("1/2")})
    assert m.nnz == 2
    assert m.entries == {(0, 0): F(1), (1, 1): F("1/2")}
    assert m.row(0) == {0: F(1)}


def test_sparse_matrix_bounds_and_shape_checks():
    with pytest.raises(LinalgError):
        SparseMatrix(2, 2, {(2, 0): 1})
    with pytest.raises(LinalgError):
        SparseMatrix(-1, 2)
    with pytest.raises(LinalgError):
        SparseMatrix.from_dense([[1, 2], [3]])


def test_mul_vec_matches_hand_computation():
    m = SparseMatrix.from_dense([[1, 2], [3, 4]])
    assert m.mul_vec([F(1), F("1/2")]) == [F(2), F(5)]
    with pytest.raises(LinalgError):
        m.mul_vec([F(1)])


# ---------------------------------------------------------------------------
# rref and rank, frozen examples


def test_rref_normalizes_a_single_row():
    reduced, pivots = rref(SparseMatrix.from_dense([[2, -4]]))
    assert pivots == [0]
    assert reduced.row(0) == {0: F(1), 1: F(-2)}


def test_rref_collapses_duplicate_rows():
    m = SparseMatrix.from_dense([[1, 1], [1, 1]])
    assert rank(m) == 1
    assert nullspace(m).vectors == [(F(-1), F(1))]


def test_rref_of_invertible_matrix_is_identity():
    m = SparseMatrix.from_dense([[2, 0, 1], [1, 3, 0], [0, 1, 1]])
    reduced, pivots = rref(m)
    assert pivots == [0, 1, 2]
    assert reduced.to_dense() == [
        [F(1), F(0), F(0)], [F(0), F(1), F(0)], [F(0), F(0), F(1)]]
    assert nullspace(m).vectors == []


def test_rref_handles_fractional_dependent_rows():
    m = SparseMatrix.from_dense([[F("1/2"), F("1/3")], [F("1/4"), F("1/6")]])
    assert rank(m) == 1
    assert nullspace(m).vectors == [(F("-2/3"), F(1))]


def test_rref_is_idempotent():
    m = SparseMatrix.from_dense([[0, 2, 4], [1, 1, 1], [1, 3, 5]])
    reduced, pivots = rref(m)
    again, pivots2 = rref(reduced)
    assert pivots2 == pivots
    assert again.to_dense()[:len(pivots)] == reduced.to_dense()[:len(pivots)]


def test_zero_matrix_has_full_nullspace():
    m = SparseMatrix(3, 2)
    assert rank(m) == 0
    assert nullspace(m).vectors == [(F(1), F(0)), (F(0), F(1))]


# ---------------------------------------------------------------------------
# independent dense oracle


def _dense_rank(data):
    """Textbook dense elimination, no pivot strategy, no sparsity."""
    rows = [list(map(Fraction, r)) for r in data]
    if not rows:
        return 0
    cols = len(rows[0])
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r


small_fractions = st.builds(
    Fraction, st.integers(-6, 6), st.integers(1, 4))
dense_matrices = st.integers(1, 5).flatmap(
    lambda cols: st.lists(
        st.lists(small_fractions, min_size=cols, max_size=cols),
        min_size=1, max_size=6))


@given(dense_matrices)
def test_rank_agrees_with_dense_oracle(data):
    assert rank(SparseMatrix.from_dense(data)) == _dense_rank(data)


@given(dense_matrices)
def test_rank_nullity_theorem(data):
    m = SparseMatrix.from_dense(data)
    assert rank(m) + len(nullspace(m)) == m.cols


@given(dense_matrices)
def test_nullspace_vectors_satisfy_the_system(data):
    m = SparseMatrix.from_dense(data)
    for v in nullspace(m).vectors:
        assert not any(m.mul_vec(v))


@given(dense_matrices)
def test_rref_preserves_the_row_space_dimension(data):
    m = SparseMatrix.from_dense(data)
    reduced, pivots = rref(m)
    assert rank(reduced) == len(pivots) == rank(m)


# ---------------------------------------------------------------------------
# projections


def test_projection_rank_and_basis():
    basis = VectorBasis(3, [(F(1), F(0), F(2)), (F(0), F(1), F(3))])
    assert rank_of_projection(basis, [0, 1]) == 2
    assert rank_of_projection(basis, [2]) == 1
    proj = project_basis(basis, [2])
    assert proj.dimension == 1
    assert proj.vectors == [(F(1),)]


def test_projection_is_row_reduced_and_canonical():
    basis = VectorBasis(3, [(F(2), F(2), F(1)), (F(0), F(2), F(1))])
    proj = project_basis(basis, [0, 1])
    # span{(2,2),(0,2)} is the whole plane; canonical basis is the identity
    assert proj.vectors == [(F(1), F(0)), (F(0), F(1))]


def test_projection_coordinate_bounds():
    basis = VectorBasis(2, [(F(1), F(0))])
    with pytest.raises(LinalgError):
        rank_of_projection(basis, [5])


def test_vector_basis_length_check():
    with pytest.raises(LinalgError):
        VectorBasis(2, [(F(1),)])
