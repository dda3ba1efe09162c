from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import weil_curves
from oracles import composition_sum, compositions_by_cuts
from wengzeta.compositions import (
    Composition,
    WeightSpec,
    composition_term,
    enumerate_compositions,
    mass_sum_bruteforce,
    mass_sum_dp,
    weight_grid,
)
from wengzeta.curve import v_hat


def test_enumerate_small():
    assert list(enumerate_compositions(1)) == [(1,)]
    assert list(enumerate_compositions(3)) == [(1, 1, 1), (1, 2), (2, 1), (3,)]


@pytest.mark.parametrize("n", range(1, 13))
def test_enumerate_count_and_order(n):
    comps = list(enumerate_compositions(n))
    assert len(comps) == 2 ** (n - 1)
    assert comps == sorted(comps)
    assert sorted(comps) == sorted(compositions_by_cuts(n))
    assert all(c.total == n for c in comps)


def test_composition_type():
    c = Composition([2, 1])
    assert c.parts == (2, 1) and c.total == 3
    with pytest.raises(ValueError):
        Composition([2, 0])
    with pytest.raises(ValueError):
        Composition([])


def test_weightspec_rules():
    with pytest.raises(ValueError):
        WeightSpec(fractional_d=1)  # absorbed sign mode
    with pytest.raises(ValueError):
        WeightSpec(boundary="middle")
    with pytest.raises(ValueError):
        WeightSpec(scale=1)
    assert WeightSpec(fractional_d=0).d_mod(5) == 0


def test_examples(fixture_curve):
    C = fixture_curve
    assert mass_sum_bruteforce(C, 2) == Fraction(413, 6)
    assert mass_sum_dp(C, 2) == Fraction(413, 6)
    assert mass_sum_bruteforce(C, 1, WeightSpec.first_exponent(1, 1)) == 28
    assert mass_sum_dp(C, 1) == v_hat(C, 1)


def test_fractional_hand_value(fixture_curve):
    # (2) and (1,1): vhat_2 - vhat_1^2 q / (q^2 - 1)
    w = WeightSpec(fractional_d=1, sign_mode="alternating")
    assert mass_sum_bruteforce(fixture_curve, 2, w) == Fraction(105, 2)


def test_product_exponent_is_integral_even_when_factors_are_not(fixture_curve):
    # (1,1,1), n = 3, d = 1: factors q^{2/3} and q^{4/3}
    w = WeightSpec(fractional_d=1, sign_mode="alternating")
    v1 = v_hat(fixture_curve, 1)
    expected = v1**3 * 2**2 / ((2**2 - 1) ** 2)
    assert composition_term(fixture_curve, (1, 1, 1), w) == expected


@pytest.mark.parametrize("n", range(1, 13))
def test_dp_equals_bruteforce_grid(fixture_curve, n):
    for w in weight_grid(n):
        assert mass_sum_dp(fixture_curve, n, w) == mass_sum_bruteforce(fixture_curve, n, w)


@pytest.mark.parametrize("n", range(1, 9))
def test_dp_all_degrees(fixture_curve, n):
    for d in range(-n, 2 * n + 1):
        w = WeightSpec(fractional_d=d, sign_mode="alternating")
        assert mass_sum_dp(fixture_curve, n, w) == mass_sum_bruteforce(fixture_curve, n, w)


@given(
    weil_curves(),
    st.integers(1, 8),
    st.sampled_from(["none", "first", "last"]),
    st.integers(-3, 3),
    st.integers(-3, 3),
    st.integers(-10, 10),
)
def test_dp_equals_bruteforce_random(C, n, boundary, scale, offset, d):
    if boundary == "none":
        scale = offset = 0
    w = WeightSpec(boundary=boundary, scale=scale, offset=offset, fractional_d=d, sign_mode="alternating")
    assert mass_sum_dp(C, n, w) == mass_sum_bruteforce(C, n, w)


@given(weil_curves(), st.integers(1, 7))
def test_dp_generic_boundary_function(C, n):
    w = WeightSpec(boundary="last", boundary_fn=lambda k: Fraction(1, 7 + k))
    assert mass_sum_dp(C, n, w) == mass_sum_bruteforce(C, n, w)


@pytest.mark.parametrize("n", range(1, 13))
def test_sign_convention_identity(fixture_curve, n):
    assert mass_sum_bruteforce(fixture_curve, n, WeightSpec(sign_mode="alternating")) == mass_sum_bruteforce(
        fixture_curve, n, WeightSpec()
    )


@given(weil_curves(), st.integers(1, 7))
def test_bruteforce_matches_independent_enumeration(C, n):
    vh = {m: v_hat(C, m) for m in range(1, n + 1)}
    assert mass_sum_bruteforce(C, n) == composition_sum(C.q, vh, n)
    last = lambda parts: Fraction(1, C.q ** parts[-1])
    assert mass_sum_bruteforce(C, n, WeightSpec.last_exponent(-1)) == composition_sum(C.q, vh, n, last)
