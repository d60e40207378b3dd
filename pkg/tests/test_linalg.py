from fractions import Fraction as F

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from homlie.linalg import (
    Matrix, ShapeError, SingularMatrixError, det, format_rational, image_basis,
    kernel_basis, mat_inverse, mat_mul, mat_power, parse_rational, rank, solve,
)

M = Matrix.from_rows


def test_mat_mul_examples():
    m = M([[1, 2], [3, 4]])
    assert mat_mul(Matrix.identity(2), m) == m
    assert mat_mul(m, M([[0, 1], [1, 0]])) == M([[2, 1], [4, 3]])
    assert mat_mul(M([[F(1, 2)]]), M([[F(2, 3)]])) == M([[F(1, 3)]])


def test_mat_mul_shape_error():
    with pytest.raises(ShapeError):
        mat_mul(M([[1, 2]]), M([[1, 2]]))


def test_inverse_examples():
    assert mat_inverse(Matrix.identity(3)) == Matrix.identity(3)
    assert mat_inverse(M([[2, 0], [0, F(1, 2)]])) == M([[F(1, 2), 0], [0, 2]])
    assert mat_inverse(M([[1, 1], [0, 1]])) == M([[1, -1], [0, 1]])


def test_inverse_singular():
    with pytest.raises(SingularMatrixError):
        mat_inverse(M([[1, 2], [2, 4]]))


def test_power_examples():
    a = M([[1, 2], [3, 5]])
    assert mat_power(a, 0) == Matrix.identity(2)
    assert mat_power(M([[2]]), -3) == M([[F(1, 8)]])
    assert mat_power(M([[1, 1], [0, 1]]), 2) == M([[1, 2], [0, 1]])
    with pytest.raises(SingularMatrixError):
        mat_power(M([[0, 1], [0, 0]]), -1)


def test_kernel_examples():
    K = kernel_basis(Matrix.zeros(2, 3))
    assert K.shape == (3, 3) and rank(K) == 3
    assert kernel_basis(Matrix.identity(3)).shape == (3, 0)
    K = kernel_basis(M([[1, 1]]))
    assert K.cols == 1 and K[0, 0] == -K[1, 0] != 0


def test_rank_examples():
    assert rank(Matrix.zeros(3, 2)) == 0
    assert rank(Matrix.identity(4)) == 4
    assert rank(M([[1, 2], [2, 4]])) == 1


def test_solve_examples():
    b = M([[1], [F(-2, 3)]])
    assert solve(Matrix.identity(2), b) == b
    assert solve(M([[2]]), M([[3]])) == M([[F(3, 2)]])
    assert solve(M([[1], [1]]), M([[1], [2]])) is None
    with pytest.raises(ShapeError):
        solve(M([[1, 0]]), M([[1], [2]]))


def test_empty_shapes():
    top = Matrix.zeros(0, 3)
    assert rank(top) == 0
    assert kernel_basis(top).shape == (3, 3)
    assert (top @ Matrix.identity(3)).shape == (0, 3)


@pytest.mark.parametrize("text,value", [("3", F(3)), ("-1/2", F(-1, 2)), ("4/6", F(2, 3)), (" 7 ", F(7))])
def test_parse_rational(text, value):
    assert parse_rational(text) == value
    assert parse_rational(format_rational(value)) == value


@pytest.mark.parametrize("text", ["1/0", "x", "1.5", "", "1/2/3"])
def test_parse_rational_rejects(text):
    with pytest.raises(ValueError):
        parse_rational(text)


def test_matrix_rejects_floats():
    with pytest.raises(TypeError):
        Matrix(1, 1, [0.5])


small = st.fractions(min_value=-3, max_value=3, max_denominator=3)


@st.composite
def matrices(draw, rows=None, cols=None):
    r = draw(st.integers(1, 4)) if rows is None else rows
    c = draw(st.integers(1, 4)) if cols is None else cols
    entries = draw(st.lists(st.sampled_from([0, 0, 0, 1, -1, 2]) | small,
                            min_size=r * c, max_size=r * c))
    return Matrix(r, c, entries)


@st.composite
def invertible(draw):
    n = draw(st.integers(1, 4))
    a = draw(matrices(n, n))
    if rank(a) < n:
        a = a + Matrix.identity(n).scale(7)
    if rank(a) < n:
        a = Matrix.identity(n)
    return a


def _sympy(a: Matrix):
    return sympy.Matrix(a.rows, a.cols, [sympy.Rational(x.numerator, x.denominator) for x in a.entries])


@settings(max_examples=80, deadline=None)
@given(matrices())
def test_rank_matches_sympy_and_kernel_is_complement(a):
    assert rank(a) == _sympy(a).rank()
    K = kernel_basis(a)
    assert (a @ K).is_zero()
    assert rank(K) == K.cols == a.cols - rank(a)
    assert rank(image_basis(a)) == image_basis(a).cols == rank(a)


@settings(max_examples=60, deadline=None)
@given(invertible())
def test_inverse_is_two_sided(a):
    b = mat_inverse(a)
    I = Matrix.identity(a.rows)
    assert a @ b == I and b @ a == I
    assert det(a) * det(b) == 1


@settings(max_examples=40, deadline=None)
@given(invertible(), st.integers(-3, 3), st.integers(-3, 3))
def test_power_law(a, i, j):
    assert mat_power(a, i + j) == mat_power(a, i) @ mat_power(a, j)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_rank_of_product(data):
    a = data.draw(matrices())
    b = data.draw(matrices(rows=a.cols))
    assert rank(a @ b) <= min(rank(a), rank(b))


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_solve_consistent_systems(data):
    a = data.draw(matrices())
    x = data.draw(matrices(rows=a.cols, cols=1))
    b = a @ x
    sol = solve(a, b)
    assert sol is not None and a @ sol == b
