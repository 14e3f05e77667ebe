"""Truncated power series: caps, products, geometric inverses."""

import pytest
from hypothesis import given, settings

from flc.polyring import ONE, ZERO, pa, px
from flc.series import (
    CapMismatch,
    IndexOutOfRange,
    series_coeff,
    series_geometric,
    series_linear,
    series_mul,
    series_one,
)

from conftest import polys

x1, a1 = px(1), pa(1)


def test_series_one():
    s = series_one(3)
    assert series_coeff(s, 0) == ONE
    assert all(series_coeff(s, d) == ZERO for d in (1, 2, 3))


def test_linear_product():
    s = series_mul(series_linear(x1, 2), series_linear(a1, 2))
    assert series_coeff(s, 0) == ONE
    assert series_coeff(s, 1) == x1 + a1
    assert series_coeff(s, 2) == x1 * a1


def test_geometric_coefficients():
    s = series_geometric(x1, 2)
    assert [series_coeff(s, d) for d in range(3)] == [ONE, x1, x1 * x1]
    z = series_geometric(ZERO, 2)
    assert [series_coeff(z, d) for d in range(3)] == [ONE, ZERO, ZERO]


@settings(max_examples=50)
@given(polys())
def test_geometric_inverse_property(v):
    cap = 3
    one_minus = series_linear(-v, cap)  # 1 - t*v
    prod = series_mul(series_geometric(v, cap), one_minus)
    assert series_coeff(prod, 0) == ONE
    assert all(series_coeff(prod, d) == ZERO for d in range(1, cap + 1))


@settings(max_examples=30)
@given(polys(), polys(), polys())
def test_mul_commutative_associative(p, q, r):
    cap = 2
    sp, sq, sr = (series_linear(v, cap) for v in (p, q, r))
    assert series_mul(sp, sq).coeffs == series_mul(sq, sp).coeffs
    left = series_mul(series_mul(sp, sq), sr)
    right = series_mul(sp, series_mul(sq, sr))
    assert left.coeffs == right.coeffs


def test_cap_mismatch():
    with pytest.raises(CapMismatch):
        series_mul(series_one(2), series_one(3))


def test_coeff_out_of_range():
    with pytest.raises(IndexOutOfRange):
        series_coeff(series_one(2), 3)
    with pytest.raises(IndexOutOfRange):
        series_coeff(series_one(2), -1)
