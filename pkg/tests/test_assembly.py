from dataclasses import replace
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import weil_curves
from wengzeta import fixtures
from wengzeta.assembly import (
    check_functional_equation,
    check_residues,
    rank_zeta_polynomial,
    zeta_hat_eval,
    zeta_hat_eval_additive,
)
from wengzeta.curve import CurveDatum
from wengzeta.errors import PoleEvaluation, UnsupportedGenus


def test_fixture_rank_two(fixture_curve):
    Z = rank_zeta_polynomial(fixture_curve, 2)
    assert Z.Q == 4
    assert Z.alpha0 == 14
    assert Z.normalized_coeffs == (1, Fraction(3, 2), 5, 6, 16)
    assert Z(Fraction(1)) == 413
    assert Z(Fraction(1, 4)) == Fraction(413, 16)
    assert Z.to_json() == {"n": 2, "Q": "4", "alpha0": "14/1", "coeffs": ["1/1", "3/2", "5/1", "6/1", "16/1"]}


def test_elliptic_rank_two(elliptic_q2):
    Z = rank_zeta_polynomial(elliptic_q2, 2)
    assert Z.normalized_coeffs == (1, 1, 4)
    assert Z.alpha0 == 3
    with pytest.raises(UnsupportedGenus):
        Z.b_n


@pytest.mark.parametrize("name", sorted(fixtures.CURVES))
def test_rank_one_is_artin(name):
    C = fixtures.CURVES[name]
    Z = rank_zeta_polynomial(C, 1)
    assert Z.alpha0 == 1
    assert Z.normalized_coeffs == tuple(Fraction(c) for c in C.artin_coeffs)


@given(weil_curves())
def test_rank_one_is_artin_random(C):
    assert rank_zeta_polynomial(C, 1).normalized_coeffs == tuple(C.artin_coeffs)


@pytest.mark.parametrize("n", range(1, 21))
def test_functional_equation_and_residues_fixture(fixture_curve, n):
    Z = rank_zeta_polynomial(fixture_curve, n)
    assert check_functional_equation(Z)
    assert check_residues(Z)


@given(weil_curves(), st.integers(1, 9))
def test_functional_equation_and_residues_random(C, n):
    Z = rank_zeta_polynomial(C, n)
    assert check_functional_equation(Z)
    assert check_residues(Z)


def test_tampered_coefficients_are_rejected(fixture_curve):
    Z = rank_zeta_polynomial(fixture_curve, 3)
    c = list(Z.normalized_coeffs)
    c[3] += 1
    assert not check_functional_equation(replace(Z, normalized_coeffs=tuple(c)))
    assert not check_functional_equation(replace(Z, normalized_coeffs=Z.normalized_coeffs[:-1]))
    assert not check_residues(replace(Z, beta0=Z.beta0 + 1))


@given(
    weil_curves(),
    st.integers(1, 6),
    st.fractions(min_value=-5, max_value=5, max_denominator=50),
)
def test_product_and_additive_forms_agree(C, n, T):
    Z = rank_zeta_polynomial(C, n)
    if T in (0, 1) or T * Z.Q == 1:
        return
    assert zeta_hat_eval(Z, T) == zeta_hat_eval_additive(Z, T)


def test_poles(fixture_curve, elliptic_q2):
    Z = rank_zeta_polynomial(fixture_curve, 2)
    for T in (Fraction(1), Fraction(1, 4), Fraction(0)):
        with pytest.raises(PoleEvaluation):
            zeta_hat_eval(Z, T)
    E = rank_zeta_polynomial(elliptic_q2, 2)
    assert zeta_hat_eval(E, 0) == E.alpha0
    with pytest.raises(PoleEvaluation) as info:
        zeta_hat_eval(E, Fraction(1, 4))
    assert info.value.factor == "1 - QT"


def test_higher_genus_not_assembled():
    C = CurveDatum(2, 3, artin_coeffs=(1, 0, 0, 0, 0, 0, 8))
    with pytest.raises(UnsupportedGenus):
        rank_zeta_polynomial(C, 2)


def test_integral_leading_coefficient(fixture_curve):
    for n in range(1, 10):
        Z = rank_zeta_polynomial(fixture_curve, n)
        assert Z.normalized_coeffs[0] == 1
        assert Z.normalized_coeffs[-1] == Z.Q**2
