import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ramanujan_r import bounds as Bd
from ramanujan_r.errors import DomainError, ParameterError

import oracles

GRID = np.linspace(0.0, 0.5, 2001)[1:]


def test_delta_constants():
    assert Bd.DELTA_LO == pytest.approx(19 * math.sqrt(2) * math.log(8) / (16 * math.pi))
    assert 1.111592 < Bd.DELTA_LO < 1.111593
    assert Bd.DELTA_HI == 1.112146


def test_boundpair_validation():
    bp = Bd.BoundPair(1.0, 2.0, "x")
    assert bp.gap == 1.0 and bp.contains(1.5) and not bp.contains(2.5)
    with pytest.raises(ValueError):
        Bd.BoundPair(2.0, 1.0, "x")


@pytest.mark.parametrize(
    "make",
    [
        Bd.bound_sine_poly,
        lambda x: Bd.bound_origin_poly(1, x),
        lambda x: Bd.bound_origin_poly(4, x),
        lambda x: Bd.bound_center_poly(0, x),
        lambda x: Bd.bound_center_poly(5, x),
        Bd.bound_multiplicative,
        Bd.bound_additive,
        lambda x: Bd.bound_envelope(2, x),
    ],
)
def test_sound_on_grid(make):
    from ramanujan_r.ramanujan import R_values

    R, _ = R_values(GRID)
    bp = make(GRID)
    assert np.all(bp.lower <= R * (1 + 1e-13))
    assert np.all(R <= bp.upper * (1 + 1e-13))


def test_delta_lo_is_not_an_upper_bound_everywhere():
    # with delta at the lower end of the bracket, R exceeds delta B/den near x1
    from ramanujan_r.ramanujan import R_values

    R, _ = R_values(GRID)
    bp = Bd.bound_multiplicative(GRID, Bd.DELTA_LO)
    assert np.any(R > bp.upper)


@settings(max_examples=40, deadline=None)
@given(x=st.floats(1e-4, 0.5))
def test_envelope_against_oracle(x):
    bp = Bd.bound_envelope(2, x)
    exact = float(oracles.R(x))
    assert bp.lower <= exact * (1 + 1e-14)
    assert exact <= bp.upper * (1 + 1e-14)


def test_envelope_is_tightest():
    for n in (1, 2, 3):
        env = Bd.bound_envelope(n, GRID)
        for bp in (Bd.bound_sine_poly(GRID), Bd.bound_origin_poly(n, GRID), Bd.bound_center_poly(n, GRID)):
            assert np.all(env.lower >= bp.lower - 1e-15 * np.abs(bp.lower))
            assert np.all(env.upper <= bp.upper + 1e-15 * np.abs(bp.upper))


@pytest.mark.parametrize("name", ["sine_poly", "origin_poly(2)", "center_poly(2)", "additive", "envelope(2)"])
def test_equality_at_half(name):
    bp = Bd.all_bounds(0.5)[name]
    assert abs(bp.gap) <= 1e-15
    assert bp.lower == pytest.approx(4 * math.log(2), rel=1e-15)


def test_multiplicative_not_tight_at_half():
    bp = Bd.bound_multiplicative(0.5)
    assert bp.strict_lower
    assert bp.gap == pytest.approx((Bd.DELTA_HI - 1) * math.pi / 1.25)


def test_gaps_shrink_with_order():
    x = np.array([0.3, 0.4, 0.45])
    gaps = [Bd.bound_center_poly(n, x).gap for n in range(5)]
    for g1, g2 in zip(gaps, gaps[1:]):
        assert np.all(g2 <= g1)
    x = np.array([0.05, 0.1])
    gaps = [Bd.bound_origin_poly(n, x).gap for n in range(1, 5)]
    for g1, g2 in zip(gaps, gaps[1:]):
        assert np.all(g2 <= g1)


def test_literal_x_cubed_form_is_not_a_lower_bound():
    from ramanujan_r.ramanujan import R_values

    R, _ = R_values(GRID)
    lit = Bd.literal_origin_lower_n1(GRID)
    assert np.mean(lit > R) > 0.99


def test_validation():
    with pytest.raises(DomainError):
        Bd.bound_sine_poly(0.0)
    with pytest.raises(DomainError):
        Bd.bound_additive(0.51)
    with pytest.raises(ParameterError):
        Bd.bound_origin_poly(0, 0.3)
    with pytest.raises(ParameterError):
        Bd.bound_center_poly(-1, 0.3)
    with pytest.raises(ParameterError):
        Bd.bound_multiplicative(0.3, 1.2)
    with pytest.raises(IndexError):
        Bd.bound_origin_poly(500, 0.3)


def test_scalar_in_scalar_out():
    bp = Bd.bound_sine_poly(0.3)
    assert isinstance(bp.lower, float) and isinstance(bp.upper, float)
    assert set(Bd.all_bounds(0.3)) == {"sine_poly", "origin_poly(2)", "center_poly(2)", "multiplicative", "additive", "envelope(2)"}
