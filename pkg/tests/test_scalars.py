from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from walg.scalars import (DimensionError, SingularMatrixError, identity,
                          mat_vec, matrix, rational, rational_str,
                          solve_linear, vector)

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)


def test_basic_arithmetic():
    assert F(1, 2) + F(1, 3) == F(5, 6)
    assert F(-3, 4) * F(-4, 3) == 1


def test_level_scalar_hand_oracle():
    # 2k/(theta_1|theta_1) with k = -3/4 and square length -1/2 gives 3,
    # the chi-free part of the affine level for spo2-3
    k = F(-3, 4)
    assert 2 * k / F(-1, 2) == 3


def test_rational_parsing_and_rendering():
    assert rational("3/4") == F(3, 4)
    assert rational("-7") == -7
    assert rational(F(2, 6)) == F(1, 3)
    assert rational_str(F(5, 10)) == "1/2"
    assert rational_str(F(-4, 2)) == "-2"
    assert rational_str(7) == "7"


def test_rational_rejects_floats():
    with pytest.raises(TypeError):
        rational(0.5)


def test_division_by_zero_raises():
    with pytest.raises(ZeroDivisionError):
        F(1, 2) / F(0)


def test_solve_identity_returns_rhs():
    b = vector([F(1, 3), -2, F(7, 5)])
    assert solve_linear(identity(3), b) == b


def test_solve_one_by_one():
    assert solve_linear(matrix([[2]]), vector([3])) == (F(3, 2),)


def test_solve_d21_cone_system():
    # cone basis {(-a2, 0), (-a3, 0), ((a2+a3)/2, 1/2)} against
    # (mq a2, mq) - (nq a3, nq) at (m, n, q) = (2, 1, 1)
    h = F(1, 2)
    a = matrix([[-1, 0, h], [0, -1, h], [0, 0, h]])
    b = vector([2, -1, 1])
    assert solve_linear(a, b) == (F(-1), F(2), F(2))


def test_solve_singular_reports_rank():
    a = matrix([[1, 2], [2, 4]])
    with pytest.raises(SingularMatrixError) as err:
        solve_linear(a, vector([1, 1]))
    assert err.value.rank == 1


def test_dimension_checks():
    with pytest.raises(DimensionError):
        solve_linear(matrix([[1, 2]]), vector([1]))
    with pytest.raises(DimensionError):
        solve_linear(identity(2), vector([1]))
    with pytest.raises(DimensionError):
        mat_vec(identity(2), vector([1, 2, 3]))
    with pytest.raises(DimensionError):
        matrix([[1, 2], [3]])


@given(rationals, rationals, rationals)
def test_addition_associative(a, b, c):
    assert (a + b) + c == a + (b + c)


@given(rationals.filter(lambda x: x != 0))
def test_multiplicative_inverse(a):
    assert a * (1 / a) == 1


@settings(max_examples=40)
@given(st.integers(1, 4).flatmap(lambda n: st.tuples(
    st.lists(st.lists(rationals, min_size=n, max_size=n), min_size=n, max_size=n),
    st.lists(rationals, min_size=n, max_size=n))))
def test_solve_resubstitution(data):
    rows, rhs = data
    a = matrix(rows)
    b = vector(rhs)
    try:
        x = solve_linear(a, b)
    except SingularMatrixError:
        return
    assert mat_vec(a, x) == b
