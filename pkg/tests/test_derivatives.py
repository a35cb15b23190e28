"""Derivative polynomials of reciprocal exponentials, checked two ways."""
from fractions import Fraction

import pytest

from bernocchi.derivatives import (
    LOGISTIC_RULE,
    derivative_polynomial,
    derivative_polynomial_reference,
    genocchi_from_derivatives,
    logistic_derivative_polynomial,
    logistic_derivative_polynomial_reference,
    reciprocal_expm1_rule,
)
from bernocchi.formulas import genocchi_theorem
from bernocchi.polynomial import RationalPolynomial, X

ALPHAS = (1, 2, Fraction(1, 2))


def test_zeroth_derivative_is_identity():
    for alpha in ALPHAS:
        assert derivative_polynomial(0, alpha) == X
    assert logistic_derivative_polynomial(0) == X


def test_first_derivatives():
    assert derivative_polynomial(1, 1) == RationalPolynomial((0, -1, -1))  # -x - x^2
    assert logistic_derivative_polynomial(1) == RationalPolynomial((0, -1, 1))  # x^2 - x


def test_second_derivatives():
    assert derivative_polynomial(2, 1) == RationalPolynomial((0, 1, 3, 2))
    assert logistic_derivative_polynomial(2) == RationalPolynomial((0, 1, -3, 2))


def test_rule_application_is_chain_rule():
    p = X * X - X
    assert LOGISTIC_RULE.apply(p) == p.derivative() * RationalPolynomial((0, -1, 1))


def test_rule_matches_stirling_closed_form():
    for k in range(13):
        for alpha in ALPHAS:
            assert derivative_polynomial(k, alpha) == derivative_polynomial_reference(k, alpha)
        assert logistic_derivative_polynomial(k) == logistic_derivative_polynomial_reference(k)


def test_degree_and_constant_term():
    for k in range(13):
        p = derivative_polynomial(k, 2)
        q = logistic_derivative_polynomial(k)
        assert p.degree == k + 1
        assert q.degree == k + 1
        assert p.coefficient(0) == 0
        assert q.coefficient(0) == 0


def test_alpha_scaling():
    for k in range(10):
        base = derivative_polynomial(k, 1)
        for alpha in (2, Fraction(1, 2), Fraction(-3, 7)):
            assert derivative_polynomial(k, alpha) == Fraction(alpha) ** k * base


def test_rule_iterate_rejects_negative():
    with pytest.raises(ValueError):
        reciprocal_expm1_rule(1).iterate(-1)


def test_genocchi_from_derivatives_examples():
    assert genocchi_from_derivatives(1) == 1  # 2 * (1/2)
    assert genocchi_from_derivatives(2) == -1  # 4 * (1/4 - 1/2)
    assert genocchi_from_derivatives(6) == -3


def test_genocchi_from_derivatives_matches_theorem():
    for k in range(1, 16):  # the sweep to 30 runs in the acceptance suite
        assert genocchi_from_derivatives(k) == genocchi_theorem(k)
