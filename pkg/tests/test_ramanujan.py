import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ramanujan_r import ramanujan as R
from ramanujan_r.coefficients import default_table
from ramanujan_r.errors import DomainError

import oracles

ROUTES = ("direct", "origin", "center")


@pytest.mark.parametrize("x", [1e-9, 1e-4, 0.01, 0.1, 0.2, 0.25, 0.3, 0.45, 0.5, 0.7, 0.99])
@pytest.mark.parametrize("method", ROUTES + ("auto",))
def test_R_within_estimate(x, method):
    val, err = R.R_values(x, method)
    exact = float(oracles.R(x))
    assert abs(val - exact) <= err + 2e-16 * abs(exact)


def test_R_reference_values():
    assert R.R_eval(0.25).value == pytest.approx(4.158883083359672, rel=1e-15)
    assert R.R_eval(0.1).value == pytest.approx(10.024250560555062, rel=1e-15)
    assert R.R_eval(0.5).value == pytest.approx(4 * math.log(2), rel=1e-15)


def test_R_eval_reports_route():
    assert R.R_eval(0.1).method is R.EvalMethod.ORIGIN
    assert R.R_eval(0.4).method is R.EvalMethod.CENTER
    assert R.R_eval(0.4, "direct").method is R.EvalMethod.DIRECT
    assert R.EvalMethod.parse("origin_series") is R.EvalMethod.ORIGIN
    with pytest.raises(ValueError):
        R.EvalMethod.parse("taylor")


def test_R_domain():
    for bad in (0.0, 1.0, -0.5, 1.5):
        with pytest.raises(DomainError):
            R.R_eval(bad)


def test_R_vectorised_shape():
    xs = np.linspace(0.05, 0.95, 12).reshape(3, 4)
    vals, errs = R.R_values(xs)
    assert vals.shape == errs.shape == (3, 4)
    np.testing.assert_allclose(vals, [[float(oracles.R(x)) for x in row] for row in xs], rtol=1e-14)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
@pytest.mark.parametrize("x", [0.1, 0.25, 0.5, 0.8])
def test_R_derivative(n, x):
    exact = float(oracles.R_prime(n, x))
    assert R.R_derivative(n, x) == pytest.approx(exact, rel=1e-13, abs=1e-13)


def test_R_prime_quarter_and_half():
    assert R.R_derivative(1, 0.25) == pytest.approx(-16 * 0.915965594177219, rel=1e-14)
    assert R.R_derivative(1, 0.5) == 0.0
    assert R.R_derivative(3, 0.5) == 0.0


@settings(max_examples=60, deadline=None)
@given(x=st.floats(1e-6, 0.5))
def test_R_symmetry(x):
    assume_exact = 1.0 - (1.0 - x) == x
    a, _ = R.R_values(x)
    b, _ = R.R_values(1.0 - x)
    if assume_exact:
        assert a == b
    else:
        # the folded argument moves by one ulp of 1, and R ~ 1/x magnifies it
        assert a == pytest.approx(b, rel=4e-16 / x)


@pytest.mark.parametrize("x", [1e-8, 0.01, 0.15, 0.2, 0.3, 0.35, 0.5])
@pytest.mark.parametrize("method", ROUTES + ("auto",))
def test_f_routes(x, method):
    val, err = R.f_values(x, method)
    exact = float(oracles.f(x))
    assert abs(val - exact) <= err + 2e-16


def test_f_endpoints():
    assert R.f_eval(0.5).value == pytest.approx(default_table().b[0], rel=1e-15)
    assert R.f_eval(1e-12).value == pytest.approx(1.0, abs=1e-11)
    with pytest.raises(DomainError):
        R.f_eval(0.6)


@pytest.mark.parametrize("n", [1, 2, 3, 5, 8])
@pytest.mark.parametrize("x", [0.05, 0.3, 0.5])
def test_f_derivative(n, x):
    with mp.workdps(40):
        exact = float(mp.diff(oracles._f, mp.mpf(x), n))
    assert R.f_derivative(n, x) == pytest.approx(exact, rel=1e-10, abs=1e-10)


def test_F1n_values_at_half():
    b = default_table().b
    assert R.F1n(2, 0.5) == pytest.approx(-4 * 2 * b[1], rel=1e-14)
    assert R.F1n(3, 0.5) == 0.0
    with pytest.raises(DomainError):
        R.f_derivative(9, 0.3)


def test_F_cm():
    assert R.F_cm(0.3) == pytest.approx(0.00035517660204253, rel=1e-12)
    with mp.workdps(40):
        x = mp.mpf("0.3")
        y2 = (1 - 2 * x) ** 2
        b = oracles.b_coeffs(4)
        exact = b[0] + b[1] * y2 + mp.pi / mp.sin(mp.pi * x) - (1 + x * (1 - x)) * oracles.R(x)
    assert R.F_cm(0.3) == pytest.approx(float(exact), rel=1e-12)
    assert R.F_cm(0.5) == 0.0
    xs = np.array([0.05, 0.1, 0.2])
    np.testing.assert_allclose(R.F_cm(xs), R.F_cm_direct(xs), rtol=1e-9)


def test_F_cm_limit_at_zero():
    b = default_table().b
    assert R.F_cm(1e-12) == pytest.approx(b[0] + b[1] - 1.0, rel=1e-9)


@pytest.mark.parametrize("n", [0, 1, 2, 5])
@pytest.mark.parametrize("x", [0.05, 0.3, 0.5])
def test_fn_ratio_definition(n, x):
    with mp.workdps(40):
        a = oracles.a_coeffs(12)
        xm = mp.mpf(x)
        exact = (oracles.f(x) - mp.fsum(a[k] * xm**k for k in range(n + 1))) / xm ** (n + 1)
    assert R.fn_ratio(n, x) == pytest.approx(float(exact), rel=1e-12)


@pytest.mark.parametrize("n", [0, 1, 3])
@pytest.mark.parametrize("x", [0.05, 0.25, 0.45])
def test_gn_ratio_definition(n, x):
    with mp.workdps(40):
        b = oracles.b_coeffs(8)
        y2 = (1 - 2 * mp.mpf(x)) ** 2
        exact = (oracles.f(x) - mp.fsum(b[k] * y2**k for k in range(n + 1))) / y2 ** (n + 1)
    assert R.gn_ratio(n, x) == pytest.approx(float(exact), rel=1e-10)


def test_g0_reference():
    assert R.gn_ratio(0, 0.25) == pytest.approx(0.686589896485243, rel=1e-13)
    with pytest.raises(DomainError):
        R.gn_ratio(0, 0.5)


def test_G_limits():
    b = default_table().b
    # G_{n,1}(1/2^-) = -g_n'(1/2) picks out the y^2 coefficient: 0 at y = 0
    assert R.G_eval(0, 1, 0.5 - 1e-12) == pytest.approx(0.0, abs=1e-9)
    # G_{0,2}(1/2^-) = -g_0''(1/2) = -8 b_2 > 0
    assert R.G_eval(0, 2, 0.5 - 1e-12) == pytest.approx(-8 * b[2], rel=1e-9)


def test_even_series_derivative_matches_polynomial():
    coeffs = np.array([0.5, -1.0, 2.0, 0.25])
    y = np.array([0.3, -0.2])
    for m in range(0, 5):
        p = np.polynomial.Polynomial([0.5, 0, -1.0, 0, 2.0, 0, 0.25])
        # d/dx = -2 d/dy
        expected = (-2.0) ** m * p.deriv(m)(y) if m else p(y)
        np.testing.assert_allclose(R.even_series_derivative(coeffs, y, m), expected, rtol=1e-14)
