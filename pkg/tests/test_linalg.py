from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from linalg import (
    AffineEquation,
    AffineTerm,
    Matrix,
    ShapeError,
    affine_solution_space,
    kernel_basis,
    parse_scalar,
    rank,
    solve_affine_system,
    solve_linear,
)


@st.composite
def matrices(draw, max_side: int = 4) -> Matrix:
    rows = draw(st.integers(0, max_side))
    cols = draw(st.integers(0, max_side))
    entries = draw(
        st.lists(
            st.lists(st.integers(-3, 3), min_size=cols, max_size=cols), min_size=rows, max_size=rows
        )
    )
    return Matrix(rows, cols, entries)


def test_rank_examples():
    assert rank(Matrix.identity(2)) == 2
    assert rank(Matrix(0, 0)) == 0
    assert rank(Matrix(2, 2, [[1, 2], [2, 4]])) == 1


def test_kernel_basis_examples():
    assert kernel_basis(Matrix.identity(3)).cols == 0
    whole = kernel_basis(Matrix.zeros(2, 3))
    assert whole.cols == 3
    assert rank(whole) == 3
    line = kernel_basis(Matrix(1, 2, [[1, 1]]))
    assert line.cols == 1
    assert line.entry(0, 0) == -line.entry(1, 0) != 0


def test_solve_linear_examples():
    rhs = Matrix(2, 1, [[3], [-1]])
    assert solve_linear(Matrix.identity(2), rhs) == rhs
    assert solve_linear(Matrix.zeros(1, 1), Matrix(1, 1, [[1]])) is None
    assert solve_linear(Matrix(1, 1, [[2]]), Matrix(1, 1, [[1]])) == Matrix(1, 1, [[Fraction(1, 2)]])


def test_solve_linear_rejects_row_mismatch():
    with pytest.raises(ShapeError):
        solve_linear(Matrix.identity(2), Matrix.identity(3))


def test_affine_system_examples():
    one = Matrix(1, 1, [[1]])
    assert solve_affine_system([(1, 1)], [AffineEquation([AffineTerm(0, left=one)], one)]) == [one]

    clash = [
        AffineEquation([AffineTerm(0)], Matrix.zeros(1, 1)),
        AffineEquation([AffineTerm(0)], one),
    ]
    assert solve_affine_system([(1, 1)], clash) is None

    # p s = id for p = [[1, 0]]
    p = Matrix(1, 2, [[1, 0]])
    space = affine_solution_space([(2, 1)], [AffineEquation([AffineTerm(0, left=p)], one)])
    assert space is not None
    assert p @ space.particular[0] == one
    assert len(space.kernel) == 1
    assert Matrix(2, 1, [[1], [0]]) - space.particular[0] in (
        space.kernel[0][0].scale(c) for c in range(-3, 4)
    )


def test_affine_system_shape_mismatch():
    with pytest.raises(ShapeError):
        solve_affine_system([(2, 2)], [AffineEquation([AffineTerm(0)], Matrix.zeros(1, 1))])
    with pytest.raises(ShapeError):
        solve_affine_system([(1, 1)], [AffineEquation([AffineTerm(1)], Matrix.zeros(1, 1))])


def test_multiply_shape_mismatch():
    with pytest.raises(ShapeError):
        Matrix.identity(2) @ Matrix.identity(3)


def test_scalar_literals():
    assert parse_scalar("6/4") == Fraction(3, 2)
    assert parse_scalar("-4/2") == -2
    with pytest.raises(ValueError):
        parse_scalar("1/0")
    assert Matrix.from_strings(1, 2, [["1/2", "3"]]).to_strings() == [["1/2", "3"]]
    with pytest.raises(ShapeError):
        Matrix.from_strings(2, 2, [["1", "2"]])


@given(matrices())
def test_rank_nullity(m):
    kb = kernel_basis(m)
    assert rank(m) + kb.cols == m.cols
    assert (m @ kb).is_zero()
    assert rank(kb) == kb.cols


@given(matrices())
def test_rank_of_transpose(m):
    assert rank(m) == rank(m.transpose())


@settings(max_examples=60)
@given(matrices(), st.integers(1, 3), st.data())
def test_solve_linear_consistent_rhs(m, k, data):
    x = Matrix(
        m.cols,
        k,
        data.draw(
            st.lists(st.lists(st.integers(-2, 2), min_size=k, max_size=k), min_size=m.cols, max_size=m.cols)
        ),
    )
    solution = solve_linear(m, m @ x)
    assert solution is not None
    assert m @ solution == m @ x


@given(matrices())
def test_solve_linear_detects_inconsistency(m):
    if m.rows == 0 or rank(m) == m.rows:
        return
    # some standard basis vector leaves the column space
    outside = [
        Matrix.from_columns([[1 if i == j else 0 for i in range(m.rows)]], m.rows) for j in range(m.rows)
    ]
    assert any(solve_linear(m, e) is None for e in outside)
