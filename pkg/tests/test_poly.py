"""Exact polynomial arithmetic in the monomial and falling-factorial bases."""

from fractions import Fraction as F

import pytest

from meshpoly import MONOMIAL, POCHHAMMER, Polynomial


def test_construct_and_props():
    p = Polynomial([1, -3, 2])
    assert p.degree == 2
    assert p.leading_coefficient == 2
    assert not p.is_zero
    assert Polynomial([]).is_zero
    assert Polynomial([0, 0]).is_zero
    assert Polynomial.constant(F(5, 2)).degree == 0


def test_evaluate():
    p = Polynomial([1, -3, 2])  # (2x - 1)(x - 1)
    assert p.evaluate(F(1, 2)) == 0
    assert p.evaluate(1) == 0
    assert p.evaluate(3) == 10
    assert p.evaluate(F(-1, 2)) == 3


def test_derivative_and_shift():
    p = Polynomial([1, -3, 2])
    assert p.derivative().monomial_coeffs() == (F(-3), F(4))
    # shift(a) is p(x - a): roots move right by a
    assert p.shift(1).monomial_coeffs() == (F(6), F(-7), F(2))
    assert p.shift(1).evaluate(F(3, 2)) == 0
    assert p.shift(F(-1, 2)).evaluate(0) == 0


def test_from_roots():
    p = Polynomial.from_roots([0, 2, 5], lead=F(1, 2))
    assert p.monomial_coeffs() == (F(0), F(5), F(-7, 2), F(1, 2))
    assert p.degree == 3
    assert p.leading_coefficient == F(1, 2)
    for r in (0, 2, 5):
        assert p.evaluate(r) == 0


def test_falling_factorial():
    assert Polynomial.falling_factorial(0).monomial_coeffs() == (F(1),)
    ff3 = Polynomial.falling_factorial(3)
    assert ff3.monomial_coeffs() == (F(0), F(2), F(-3), F(1))
    assert ff3.evaluate(5) == 5 * 4 * 3


def test_basis_conversion_round_trip():
    p = Polynomial([1, 1, 1])  # x^2 + x + 1 = (x)_2 + 2(x)_1 + 1
    q = p.to_basis(POCHHAMMER)
    assert q.basis == POCHHAMMER
    assert q.coeffs == (F(1), F(2), F(1))
    assert q.to_basis(MONOMIAL).monomial_coeffs() == p.monomial_coeffs()
    ff = Polynomial.falling_factorial(3).to_basis(POCHHAMMER)
    assert ff.coeffs == (F(0), F(0), F(0), F(1))


def test_basis_conversion_rejects_unknown():
    with pytest.raises(ValueError):
        Polynomial([1]).to_basis("chebyshev")


def test_delta_and_nabla():
    x3 = Polynomial([0, 0, 0, 1])
    # delta p = p(x) - p(x - 1): x^3 - (x-1)^3 = 3x^2 - 3x + 1
    assert x3.delta().monomial_coeffs() == (F(1), F(-3), F(3))
    assert x3.nabla().monomial_coeffs() == (F(1), F(3), F(3))
    # delta lowers degree by exactly one
    assert x3.delta().degree == 2
    assert Polynomial.constant(7).delta().is_zero


def test_equality_is_basis_free():
    p = Polynomial([0, 2, -3, 1])
    assert p == Polynomial.falling_factorial(3)
    assert p == p.to_basis(POCHHAMMER)
