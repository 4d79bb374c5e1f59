import math

import numpy as np
import pytest
from hypothesis import assume, given, settings, strategies as st

from ramanujan_r import polygamma as P
from ramanujan_r.errors import DomainError

import oracles

PI = math.pi


@pytest.mark.parametrize("x", [1e-8, 0.01, 0.25, 0.5, 1.0, 2.0, 9.99, 10.0, 37.5, 1e6])
def test_psi_against_oracle(x):
    exact = float(oracles.psi(x))
    assert P.psi(x) == pytest.approx(exact, rel=4e-15, abs=4e-16)


def test_psi_special():
    assert P.psi(1.0) == pytest.approx(-P.EULER_GAMMA, rel=1e-15)
    assert P.psi(0.5) == pytest.approx(-P.EULER_GAMMA - 2 * math.log(2), rel=1e-15)


def test_psi_array_and_domain():
    xs = np.array([[0.5, 1.0], [2.0, 3.0]])
    out = P.psi(xs)
    assert out.shape == xs.shape
    assert out[1, 0] == pytest.approx(1 - P.EULER_GAMMA)
    with pytest.raises(DomainError):
        P.psi(0.0)
    with pytest.raises(DomainError):
        P.psi(np.array([1.0, -2.0]))


@pytest.mark.parametrize("n", [1, 2, 3, 5])
@pytest.mark.parametrize("x", [0.1, 0.5, 0.75, 3.0])
def test_polygamma(n, x):
    sv = P.polygamma(n, x)
    exact = float(oracles.polygamma(n, x))
    assert abs(sv.value - exact) <= sv.tail_bound + 1e-15 * abs(exact)


def test_polygamma_domain():
    with pytest.raises(DomainError):
        P.polygamma(0, 1.0)
    with pytest.raises(DomainError):
        P.polygamma(1, 0.0)


def test_B_and_H1_values():
    assert P.B_fn(0.5) == pytest.approx(PI)
    assert P.B_fn(1 / 6) == pytest.approx(2 * PI)
    assert P.H1(0.5) == 0.0
    assert P.H1(0.25) == pytest.approx(PI)
    assert P.H1(0.9) == pytest.approx(PI / math.tan(0.9 * PI), rel=1e-13)
    for f in (P.B_fn, P.H1):
        for bad in (0.0, 1.0, -0.1):
            with pytest.raises(DomainError):
                f(bad)


def test_H1_is_digamma_reflection():
    for x in (0.05, 0.3, 0.7, 0.95):
        assert P.H1(x) == pytest.approx(P.psi(1 - x) - P.psi(x), rel=1e-13)


@settings(max_examples=100, deadline=None)
@given(x=st.floats(1e-6, 0.5))
def test_B_symmetric_bitwise(x):
    assume(1.0 - (1.0 - x) == x)
    assert P.B_fn(x) == P.B_fn(1.0 - x)


def test_reflection_point():
    p = P.ReflectionPoint.from_complement(1e-17)
    assert p.one_minus_x == 1e-17
    assert p.reduced == 1e-17
    assert P.ReflectionPoint.from_x(0.3).reduced == 0.3
    with pytest.raises(DomainError):
        P.ReflectionPoint(0.3, 0.5)
    with pytest.raises(DomainError):
        P.ReflectionPoint.from_x(1.0)
    with pytest.raises(DomainError):
        P.ReflectionPoint.from_x(0.0)


@pytest.mark.parametrize("x", [0.05, 0.2, 0.4, 0.5, 0.8])
def test_center_series(x):
    b = P.B_center_series(x)
    assert abs(b.value - PI / math.sin(PI * x)) <= b.tail_bound + 1e-15 * b.value
    h = P.H1_center_series(x)
    assert abs(h.value - P.H1(x)) <= h.tail_bound + 1e-14 * max(1.0, abs(h.value))
