"""Finite difference operators, symbols, and diagonal sequences."""

from fractions import Fraction as F

import pytest

from meshpoly import (
    DiagonalSequence,
    FiniteDifferenceOperator,
    Polynomial,
    brenti_map,
    bullet_product,
    diagonal_apply,
    from_symbol,
    make_standard,
    pochhammer_cofactor,
    sequence_convert,
    sequence_from_poly,
    stirling_first,
    stirling_second,
    symbol,
)


def test_delta_operator():
    D = make_standard("delta")
    x3 = Polynomial([0, 0, 0, 1])
    assert D.apply(x3).monomial_coeffs() == (F(1), F(-3), F(3))
    assert D.order == 1
    assert D.integer_shifts
    assert symbol(D).monomial_coeffs() == (F(1), F(-1))


def test_standard_kinds_shape():
    R = make_standard("riesz", lam=F(1, 3), alpha=2)
    assert [(s, c.monomial_coeffs()) for s, c in R.terms] == [
        (F(0), (F(1),)),
        (F(2), (F(-1, 3),)),
    ]
    W = make_standard("w_lambda", lam=2)
    assert W.apply(Polynomial([0, 1])).monomial_coeffs() == (F(0), F(3))
    NC = make_standard("nabla_conjugate", lam=1)
    assert [(s, c.monomial_coeffs()) for s, c in NC.terms] == [
        (F(-1), (F(1),)),
        (F(0), (F(-1),)),
    ]
    E = make_standard("euler_xdelta")
    # x * delta fixes nothing linear: on x it returns x
    assert E.apply(Polynomial([0, 1])).monomial_coeffs() == (F(0), F(1))
    with pytest.raises(ValueError):
        make_standard("unknown")


def test_symbol_round_trip():
    Q = Polynomial([1, 1])
    T = from_symbol(Q)
    # (1 + t) p = p(x) + p(x - 1)
    assert T.apply(Polynomial([0, 1])).monomial_coeffs() == (F(-1), F(2))
    assert symbol(T) == Q
    assert T.nonzero_coefficient_count == 2
    Q2 = Polynomial([2, 0, -1])
    assert symbol(from_symbol(Q2)) == Q2


def test_from_coeffs():
    T = FiniteDifferenceOperator.from_coeffs([Polynomial([1]), Polynomial([1])])
    p = Polynomial.from_roots([0, 2])
    assert T.apply(p) == p + p.shift(1)
    assert T.apply(p).evaluate(0) == p.evaluate(0) + p.evaluate(-1)


def test_pochhammer_cofactor():
    # T = 1 + t on (x)_3 leaves (x-1)(x-2) in front of R_3 = 2x - 3
    T = from_symbol(Polynomial([1, 1]))
    assert pochhammer_cofactor(T, 3).monomial_coeffs() == (F(-3), F(2))
    D = make_standard("delta")
    assert pochhammer_cofactor(D, 2).monomial_coeffs() == (F(2),)


def test_diagonal_sequence_table_and_rule():
    A = DiagonalSequence.from_values([1, 2, 4, 8])
    assert A.values == (F(1), F(2), F(4), F(8))
    assert A.defined_up_to(3)
    assert not A.defined_up_to(4)
    assert A.alpha(2) == 4
    B = DiagonalSequence.from_rule(Polynomial([1, 1]))
    assert B.alpha(3) == 4
    assert B.defined_up_to(10**6)
    assert list(B.prefix(3)) == [F(1), F(2), F(3)]


def test_diagonal_apply():
    A = DiagonalSequence.from_values([1, 2, 4, 8])
    img = diagonal_apply(A, Polynomial.falling_factorial(2))
    assert img.monomial_coeffs() == (F(0), F(-4), F(4))  # 4 (x)_2
    ones = DiagonalSequence.from_values([1, 1, 1])
    p = Polynomial([3, -2, 1])
    assert diagonal_apply(ones, p) == p


def test_sequence_from_poly():
    A = sequence_from_poly(Polynomial([1, 1]), 5)
    assert A.values == (F(1), F(2), F(3), F(4), F(5))


def test_sequence_convert_round_trip():
    alpha = sequence_convert([1, 1, 1], "a_to_alpha")
    assert alpha == (F(1), F(2), F(5))
    assert sequence_convert(alpha, "alpha_to_a") == (F(1), F(1), F(1))
    with pytest.raises(ValueError):
        sequence_convert([1], "sideways")


def test_brenti_map():
    # monomial coefficients transplanted onto the falling factorials
    p = Polynomial.from_roots([0, 2])  # x^2 - 2x
    assert brenti_map(p).monomial_coeffs() == (F(0), F(-3), F(1))  # (x)_2 - 2(x)_1


def test_bullet_product():
    r = bullet_product(Polynomial.falling_factorial(2), Polynomial.falling_factorial(2), 2)
    assert r.monomial_coeffs() == (F(0), F(-2), F(2))  # 2 (x)_2


def test_stirling_numbers():
    assert stirling_first(4, 2) == 11
    assert stirling_second(4, 2) == 7
    assert stirling_first(3, 3) == stirling_second(3, 3) == 1
    assert stirling_second(5, 1) == 1
