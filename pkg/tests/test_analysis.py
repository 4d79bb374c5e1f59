import math

import mpmath as mp
import numpy as np
import pytest

from ramanujan_r import analysis as A
from ramanujan_r.bounds import DELTA_HI, DELTA_LO
from ramanujan_r.coefficients import default_table
from ramanujan_r.errors import BracketError, DomainError, ParameterError

import oracles

# values this library computes for quantities that are only bracketed elsewhere
X0 = 0.27693735375887
X1 = 0.276950505062352
DELTA = 1.1121449210391243
X2 = 0.24764708136960
CROSSINGS = dict(x5=0.300432, x6=0.144167, x7=0.478568, x8=0.275448, x9=0.261803, x10=0.289889)


def _F_oracle(kind, x):
    with mp.workdps(40):
        x = mp.mpf(x)
        R = oracles.R(x)
        B = mp.pi / mp.sin(mp.pi * x)
        den = 1 + x * (1 - x)
        return float({1: den * R / B, 2: R / B - 1 / den, 3: R - B / den}[kind])


@pytest.mark.parametrize("kind", [1, 2, 3])
@pytest.mark.parametrize("x", [1e-6, 0.1, 0.25, 0.4, 0.5])
def test_F_against_definition(kind, x):
    assert A.F_eval(kind, x) == pytest.approx(_F_oracle(kind, x), rel=1e-13, abs=1e-15)


def test_F_at_half():
    assert A.F_eval(1, 0.5) == pytest.approx(1.1031780007632581, rel=1e-14)
    assert A.F_eval(2, 0.5) == pytest.approx(0.0825424006106064, rel=1e-13)
    assert A.F_eval(3, 0.5) == pytest.approx(0.8 * default_table().b[0], rel=1e-14)


def test_second_derivatives_at_half():
    t = default_table()
    assert A.F1_second_derivative_half() == pytest.approx(-8 * t.d[0] / math.pi)
    assert A.F2_second_derivative_half() == pytest.approx(0.7232003276583608, rel=1e-13)
    h = 1e-4
    for kind, exact in ((1, A.F1_second_derivative_half()), (2, A.F2_second_derivative_half())):
        v = [_F_oracle(kind, 0.5 - h), _F_oracle(kind, 0.5), _F_oracle(kind, 0.5 + 1e-30)]
        fd = 2 * (v[0] - v[1]) / h**2  # even about 1/2
        assert fd == pytest.approx(exact, rel=1e-6)


def test_F9_F10():
    b0 = default_table().b[0]
    assert A.F9_F10_eval(9, 1e-9) == pytest.approx(-2 - math.pi**2 / 6, rel=1e-7)
    assert A.F9_F10_eval(9, 0.5) == pytest.approx((0.8 * b0 - 1) / 0.5, rel=1e-13)
    x = 0.3
    assert A.F9_F10_eval(9, x) == pytest.approx((_F_oracle(3, x) - 1) / x, rel=1e-12)
    assert A.F9_F10_eval(10, x) == pytest.approx((_F_oracle(3, x) - 0.8 * b0) / (1 - 2 * x), rel=1e-12)
    assert A.F9_F10_eval(10, 1e-12) == pytest.approx(1 - 0.8 * b0, rel=1e-9)
    with pytest.raises(ParameterError):
        A.F9_F10_eval(8, 0.3)


def test_H_paths_agree():
    band = np.linspace(0.3, 0.35, 51)
    np.testing.assert_allclose(A.H_eval(band, "direct"), A.H_eval(band, "series"), rtol=1e-13)
    np.testing.assert_allclose(A.H3_eval(band, "direct"), A.H3_eval(band, "series"), rtol=1e-12, atol=1e-14)


def test_H_values():
    assert A.H_eval(0.25) == pytest.approx(0.09569807286291987, rel=1e-13)
    assert A.H_eval(0.3) == pytest.approx(-0.0662055955, rel=1e-9)
    assert A.H_eval(0.5 - 1e-12) == pytest.approx(default_table().d[0], rel=1e-9)
    h, f = A.H_eval(0.25), A.F_eval(3, 0.25) * (1 + 0.25 * 0.75)
    assert A.H3_eval(0.25) == pytest.approx((5 - 0.25) * h - f, rel=1e-12)
    with pytest.raises(DomainError):
        A.H_eval(0.5)
    with pytest.raises(ParameterError):
        A.H_eval(0.3, "taylor")


def test_H_is_scaled_F1_derivative():
    # F1' = 4 y H / B
    x, h = 0.2, 1e-5
    fd = (_F_oracle(1, x + h) - _F_oracle(1, x - h)) / (2 * h)
    y = 1 - 2 * x
    assert 4 * y * A.H_eval(x) / (math.pi / math.sin(math.pi * x)) == pytest.approx(fd, rel=1e-7)


def test_h_functions():
    assert A.h9_eval(0.276938) == pytest.approx(-1.374258160102837e-06, rel=1e-9)
    assert A.h9_eval(0.276937) == pytest.approx(7.522844271967699e-07, rel=1e-9)
    # h8' = h9 cos(pi x)
    x, h = 0.2, 1e-6
    fd = (A.h8_eval(x + h) - A.h8_eval(x - h)) / (2 * h)
    assert fd == pytest.approx(A.h9_eval(x) * math.cos(math.pi * x), rel=1e-7)


def test_tan_near_half_keeps_digits():
    b = default_table().b
    assert A.F8_eval(0.5 - 1e-12) == pytest.approx(math.pi * b[0] - 8 * b[1] / math.pi, rel=1e-10)


def test_roots():
    x0 = A.find_root("h9", A.X0_SEED)
    assert x0.root == pytest.approx(X0, abs=1e-13)
    assert 0.276937 < x0.lo <= x0.hi < 0.276938
    assert x0.width <= 1e-13
    est = A.delta_estimate()
    assert est.x1 == pytest.approx(X1, abs=1e-12)
    assert est.delta == pytest.approx(DELTA, rel=1e-14)
    assert DELTA_LO < est.delta < DELTA_HI
    assert abs(A.H_eval(est.x1)) <= 1e-11
    x2 = A.find_x2()
    assert x2.root == pytest.approx(X2, abs=1e-12)
    assert A.H3_eval(x2.lo) * A.H3_eval(x2.hi) <= 0


def test_F2_peak_at_x2():
    x2 = A.find_x2().root
    peak = A.F_eval(2, x2)
    for dx in (-1e-3, 1e-3):
        assert A.F_eval(2, x2 + dx) < peak


def test_root_bracket():
    with pytest.raises(BracketError):
        A.RootBracket.verify("H", 0.3, 0.4)
    with pytest.raises(BracketError):
        A.RootBracket.verify("H", 0.4, 0.3)
    with pytest.raises(ParameterError):
        A.find_root("nope", (0.1, 0.2))
    with pytest.raises(ParameterError):
        A.find_root("F5_level", (0.1, 0.2))
    with pytest.raises(ParameterError):
        A.find_root("H", (0.26, 0.49), tol=1e-16)
    br = A.RootBracket.verify("H", 0.26, 0.49)
    assert A.find_root("H", br).root == pytest.approx(X1, abs=1e-12)


def test_h8_max():
    top = A.h8_max(10_000)
    assert 1 + top < DELTA_HI
    assert top > DELTA - 1  # h8 dominates F1 - 1


def test_crossings():
    cr = A.crossings(DELTA)
    for k, v in CROSSINGS.items():
        assert getattr(cr, k) == pytest.approx(v, abs=1e-6)
    assert cr.level == pytest.approx(math.pi * (DELTA - 1))
    with pytest.raises(BracketError):
        A.crossings(1.2)


@pytest.mark.parametrize("target", ["F_cm", "g0", "g(2)", ("g", 3), "H3"])
def test_cm_probes_pass(target):
    rep = A.cm_probe(target, max_order=6, grid_size=500)
    assert rep.passed and not rep.conjecture


def test_cm_probe_details():
    rep = A.cm_probe("F3", max_order=4, grid_size=300)
    assert rep.conjecture and rep.passed
    assert sorted(rep.minima) == [0, 1, 2, 3, 4]
    assert 0 not in A.cm_probe("H3", 3, 100).minima
    with pytest.raises(ParameterError):
        A.cm_probe("exp")
    with pytest.raises(ParameterError):
        A.cm_probe("F", max_order=9)


def test_cm_probe_detects_a_failure():
    # F3 itself is increasing in 1 - x; the opposite sign pattern must be caught
    rep = A.CMProbeReport("demo", {1: -1e-3})
    assert not rep.passed
