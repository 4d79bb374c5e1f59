"""Ratio and difference functions of R against B, their roots, and shape probes.

    F1 = [1+x(1-x)] R / B = f/B + 1
    F2 = R/B - 1/[1+x(1-x)] = f / ([1+x(1-x)] B)
    F3 = R - B/[1+x(1-x)] = f / [1+x(1-x)]
    H  = (f' + f H1) / (4(1-2x)) = sum d_n y^(2n)          (F1' = 4 y H / B)
    H3 = [5 - y^2] H - f = sum D_n y^(2n)                   (sign of F2')
    h8 = S2 sin(pi x) / pi,  h9 = S2 - 4 h10 h11 / pi       (h8' = h9 cos(pi x))
    h10 = b1 + 2 b2 y^2,  h11 = y tan(pi x),  S2 = b0 + b1 y^2 + b2 y^4

with y = 1 - 2x throughout. Each function is written in terms of f so that no
R - B style cancellation appears.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import coefficients
from .bounds import DELTA_HI, DELTA_LO
from .errors import BracketError, DomainError, ParameterError
from .polygamma import B_fn, H1
from .ramanujan import f_derivative, f_values, fn_ratio, g_derivative, gn_ratio, even_series_derivative, F_cm, _poly

PI = math.pi
EDGE = 1e-9
# below this x, H and H3 use the direct form; above, the d_n / D_n series
SERIES_SWITCH = 0.35


def _table():
    return coefficients.default_table()


def _prep(x, closed=True):
    arr = np.asarray(x, dtype=np.float64)
    scalar = arr.ndim == 0
    arr = np.atleast_1d(arr)
    ok = (arr > 0.0) & ((arr <= 0.5) if closed else (arr < 0.5))
    if not np.all(ok):
        raise DomainError("x must lie in (0, 1/2]" if closed else "x must lie in (0, 1/2)")
    return arr, scalar, np.shape(x)


def _out(vals, scalar, shape):
    return float(vals[0]) if scalar else vals.reshape(shape)


def _f(x):
    return f_values(x)[0]


# ------------------------------------------------------------- F1, F2, F3


def F_eval(kind: int, x):
    """F1, F2 or F3 on (0, 1/2], computed from f."""
    arr, scalar, shape = _prep(x)
    f = _f(arr)
    den = 1.0 + arr * (1.0 - arr)
    if kind == 1:
        vals = f / B_fn(arr) + 1.0
    elif kind == 2:
        vals = f / (den * B_fn(arr))
    elif kind == 3:
        vals = f / den
    else:
        raise ParameterError(f"F kind must be 1, 2 or 3, got {kind!r}")
    return _out(vals, scalar, shape)


def F1_second_derivative_half() -> float:
    """``F1''(1/2) = -8 d0 / pi``."""
    return -8.0 * _table().d[0] / PI


def F2_second_derivative_half() -> float:
    """``F2''(1/2) = -32 D0 / (25 pi)``."""
    return -32.0 * _table().D[0] / (25.0 * PI)


def F9_F10_eval(kind: int, x):
    """``F9 = (F3 - 1)/x`` on (0, 1/2] and ``F10 = (F3 - rho)/(1 - 2x)`` on (0, 1/2).

    Both quotients are removed analytically:
    F9 = (f_0(x) - 1 + x) / (1 + x - x^2) and F10 = 4y (5 g_0 + b0) / (5 (5 - y^2)).
    """
    if kind == 9:
        arr, scalar, shape = _prep(x)
        vals = (fn_ratio(0, arr) - 1.0 + arr) / (1.0 + arr - arr * arr)
    elif kind == 10:
        arr, scalar, shape = _prep(x, closed=False)
        y = 1.0 - 2.0 * arr
        vals = 4.0 * y * (5.0 * gn_ratio(0, arr) + _table().b[0]) / (5.0 * (5.0 - y * y))
    else:
        raise ParameterError(f"kind must be 9 or 10, got {kind!r}")
    return _out(vals, scalar, shape)


# ------------------------------------------------------------------ H, H3


def _H_direct(x):
    y = 1.0 - 2.0 * x
    return (f_derivative(1, x) + _f(x) * H1(x)) / (4.0 * y)


def _H_series(x):
    y2 = (1.0 - 2.0 * x) ** 2
    return _poly(_table().d, y2)


def _H3_series(x):
    y2 = (1.0 - 2.0 * x) ** 2
    return _poly(_table().D, y2)


def _split(arr, direct, series):
    out = np.empty_like(arr)
    m = arr <= SERIES_SWITCH
    if m.any():
        out[m] = direct(arr[m])
    if (~m).any():
        out[~m] = series(arr[~m])
    return out


def H_eval(x, path: str = "auto"):
    """H on (0, 1/2); ``path`` is auto, direct or series."""
    arr, scalar, shape = _prep(x, closed=False)
    if path == "auto":
        vals = _split(arr, _H_direct, _H_series)
    elif path == "direct":
        vals = _H_direct(arr)
    elif path == "series":
        vals = _H_series(arr)
    else:
        raise ParameterError(f"path must be auto, direct or series, got {path!r}")
    return _out(vals, scalar, shape)


def _H3_direct(x):
    y = 1.0 - 2.0 * x
    return (5.0 - y * y) * _H_direct(x) - _f(x)


def H3_eval(x, path: str = "auto"):
    """H3 on (0, 1/2); ``path`` is auto, direct or series."""
    arr, scalar, shape = _prep(x, closed=False)
    if path == "auto":
        vals = _split(arr, _H3_direct, _H3_series)
    elif path == "direct":
        vals = _H3_direct(arr)
    elif path == "series":
        vals = _H3_series(arr)
    else:
        raise ParameterError(f"path must be auto, direct or series, got {path!r}")
    return _out(vals, scalar, shape)


def H3_derivative(m: int, x):
    """m-th derivative of H3 from the term-wise differentiated D_n series."""
    arr, scalar, shape = _prep(x, closed=False)
    vals = even_series_derivative(_table().D, 1.0 - 2.0 * arr, int(m))
    return _out(vals, scalar, shape)


# ---------------------------------------------------------------- h8 .. h11


def _tan_pi(x):
    # tan(pi x) on (0, 1/2); near 1/2 use cot(pi (1/2 - x)) with 1/2 - x exact
    return np.where(x < 0.25, np.tan(PI * x), 1.0 / np.tan(PI * (0.5 - x)))


def S2(x):
    b = _table().b
    y2 = (1.0 - 2.0 * np.asarray(x, dtype=np.float64)) ** 2
    return b[0] + y2 * (b[1] + y2 * b[2])


def h8_eval(x):
    """``h8 = S2(x) sin(pi x) / pi`` on (0, 1/2]."""
    arr, scalar, shape = _prep(x)
    return _out(S2(arr) * np.sin(PI * arr) / PI, scalar, shape)


def h9_eval(x):
    """``h9 = S2 - 4 h10 h11 / pi`` on (0, 1/2)."""
    arr, scalar, shape = _prep(x, closed=False)
    b = _table().b
    y = 1.0 - 2.0 * arr
    h10 = b[1] + 2.0 * b[2] * y * y
    h11 = y * _tan_pi(arr)
    return _out(S2(arr) - 4.0 * h10 * h11 / PI, scalar, shape)


def F5_eval(x):
    """``F5 = [b0 + (1-b0) y] sin(pi x)``."""
    arr, scalar, shape = _prep(x)
    b0 = _table().b[0]
    return _out((b0 + (1.0 - b0) * (1.0 - 2.0 * arr)) * np.sin(PI * arr), scalar, shape)


def F6_eval(x):
    """``F6 = F5'/cos(pi x) = pi [b0 + (1-b0) y] - 2 (1-b0) tan(pi x)`` on (0, 1/2)."""
    arr, scalar, shape = _prep(x, closed=False)
    b0 = _table().b[0]
    vals = PI * (b0 + (1.0 - b0) * (1.0 - 2.0 * arr)) - 2.0 * (1.0 - b0) * _tan_pi(arr)
    return _out(vals, scalar, shape)


def F7_eval(x):
    """``F7 = [b0 + b1 y^2] sin(pi x)``."""
    arr, scalar, shape = _prep(x)
    b = _table().b
    y = 1.0 - 2.0 * arr
    return _out((b[0] + b[1] * y * y) * np.sin(PI * arr), scalar, shape)


def F8_eval(x):
    """``F8 = F7'/cos(pi x) = pi [b0 + b1 y^2] - 4 b1 y tan(pi x)`` on (0, 1/2)."""
    arr, scalar, shape = _prep(x, closed=False)
    b = _table().b
    y = 1.0 - 2.0 * arr
    vals = PI * (b[0] + b[1] * y * y) - 4.0 * b[1] * y * _tan_pi(arr)
    return _out(vals, scalar, shape)


# --------------------------------------------------------------- root finding


def _level(fn, delta):
    lvl = PI * (delta - 1.0)
    return lambda x: fn(x) - lvl


def target_function(name: str, delta: float | None = None) -> Callable[[float], float]:
    """Scalar function for a named root target.

    H, H3, h9 and F6_shift / F8_shift (the zeros of F6 and F8, i.e. the
    critical points of F5 and F7) need nothing else; F5_level and F7_level
    solve F5 = pi(delta-1) and F7 = pi(delta-1) and need ``delta``.
    """
    simple = {
        "H": H_eval,
        "H3": H3_eval,
        "h9": h9_eval,
        "F6_shift": F6_eval,
        "F6": F6_eval,
        "F8_shift": F8_eval,
        "F8": F8_eval,
    }
    if name in simple:
        return simple[name]
    if name in ("F5_level", "F7_level"):
        if delta is None:
            raise ParameterError(f"{name} needs delta")
        return _level(F5_eval if name == "F5_level" else F7_eval, delta)
    raise ParameterError(f"unknown root target {name!r}")


@dataclass(frozen=True)
class RootBracket:
    """An interval on which ``target`` changes sign."""

    lo: float
    hi: float
    f_lo: float
    f_hi: float
    target: str

    def __post_init__(self):
        if not self.lo < self.hi:
            raise BracketError(f"bracket [{self.lo}, {self.hi}] is empty")
        if not (self.f_lo * self.f_hi < 0.0 or self.f_lo == 0.0 or self.f_hi == 0.0):
            raise BracketError(f"{self.target} has no sign change on [{self.lo}, {self.hi}]")

    @classmethod
    def verify(cls, target: str, lo: float, hi: float, delta: float | None = None) -> "RootBracket":
        fn = target_function(target, delta)
        lo, hi = float(lo), float(hi)
        return cls(lo, hi, float(fn(lo)), float(fn(hi)), target)


@dataclass(frozen=True)
class RootResult:
    """A root with its final enclosing interval."""

    root: float
    lo: float
    hi: float
    residual: float
    iterations: int
    target: str

    def __float__(self) -> float:
        return self.root

    @property
    def width(self) -> float:
        return self.hi - self.lo


def _solve(fn, lo, hi, flo, fhi, tol, target, max_iter=400):
    it = 0
    if flo == 0.0:
        return RootResult(lo, lo, lo, 0.0, 0, target)
    if fhi == 0.0:
        return RootResult(hi, hi, hi, 0.0, 0, target)
    # bisection to width 1e-6
    while hi - lo > max(1e-6, tol) and it < max_iter:
        mid = 0.5 * (lo + hi)
        fm = float(fn(mid))
        it += 1
        if fm == 0.0:
            return RootResult(mid, mid, mid, 0.0, it, target)
        if (fm < 0.0) == (flo < 0.0):
            lo, flo = mid, fm
        else:
            hi, fhi = mid, fm
    # Illinois regula falsi; every step keeps the sign change
    side = 0
    while hi - lo > tol and it < max_iter:
        x = (lo * fhi - hi * flo) / (fhi - flo)
        if not lo < x < hi:
            x = 0.5 * (lo + hi)
        if x in (lo, hi):
            break
        fx = float(fn(x))
        it += 1
        if fx == 0.0:
            return RootResult(x, x, x, 0.0, it, target)
        if (fx < 0.0) == (flo < 0.0):
            lo, flo = x, fx
            if side == -1:
                fhi *= 0.5
            side = -1
        else:
            hi, fhi = x, fx
            if side == 1:
                flo *= 0.5
            side = 1
        # a one-sided run can leave a long interval; take a plain bisection step
        if it % 8 == 0 and hi - lo > tol:
            mid = 0.5 * (lo + hi)
            fm = float(fn(mid))
            it += 1
            if fm == 0.0:
                return RootResult(mid, mid, mid, 0.0, it, target)
            if (fm < 0.0) == (flo < 0.0):
                lo, flo = mid, fm
            else:
                hi, fhi = mid, fm
            side = 0
    # report the endpoint with the smaller residual, re-evaluated honestly
    f_lo_true, f_hi_true = float(fn(lo)), float(fn(hi))
    root, res = (lo, f_lo_true) if abs(f_lo_true) <= abs(f_hi_true) else (hi, f_hi_true)
    return RootResult(root, lo, hi, abs(res), it, target)


def find_root(target, bracket, tol: float = 1e-13, delta: float | None = None) -> RootResult:
    """Bracketed root of a named target: bisection to width 1e-6, then Illinois secant.

    ``bracket`` is a :class:`RootBracket` or a (lo, hi) pair, which is verified.
    The returned interval always contains a sign change and has width <= tol
    unless the floating-point grid is exhausted first.
    """
    if not tol >= 1e-13:
        raise ParameterError("tol must be >= 1e-13")
    name = target
    fn = target_function(name, delta)
    if not isinstance(bracket, RootBracket):
        lo, hi = bracket
        bracket = RootBracket.verify(name, lo, hi, delta)
    return _solve(fn, bracket.lo, bracket.hi, bracket.f_lo, bracket.f_hi, tol, name)


# --------------------------------------------------------------------- delta


@dataclass(frozen=True)
class DeltaEstimate:
    """The maximiser x1 of F1 (zero of H) and delta = F1(x1)."""

    x1: float
    delta: float
    residual_H: float

    def __post_init__(self):
        if not 0.25 < self.x1 < 0.5:
            raise ArithmeticError(f"x1 = {self.x1} is outside (1/4, 1/2)")
        if not DELTA_LO < self.delta < DELTA_HI:
            raise ArithmeticError(f"delta = {self.delta} is outside ({DELTA_LO}, {DELTA_HI})")


X1_SEED = (0.26, 0.49)
X0_SEED = (0.27, 0.28)


def delta_estimate(tol: float = 1e-13) -> DeltaEstimate:
    r = find_root("H", X1_SEED, tol)
    return DeltaEstimate(r.root, F_eval(1, r.root), r.residual)


def find_x2(tol: float = 1e-13, scan: int = 64) -> RootResult:
    """Zero of H3 in (0, 1/2), bracketed from a coarse scan."""
    xs = np.linspace(EDGE, 0.5 - EDGE, scan)
    v = H3_eval(xs)
    idx = np.nonzero(np.sign(v[:-1]) * np.sign(v[1:]) < 0)[0]
    if len(idx) != 1:
        raise BracketError(f"H3 changes sign {len(idx)} times on the scan grid")
    i = int(idx[0])
    return find_root("H3", (float(xs[i]), float(xs[i + 1])), tol)


def h8_max(grid_size: int = 10_000) -> float:
    """Maximum of h8 over a uniform grid of (0, 1/2]."""
    xs = np.linspace(0.0, 0.5, grid_size + 1)[1:]
    return float(np.max(h8_eval(xs)))


@dataclass(frozen=True)
class Crossings:
    """Critical points of F5, F7 and where they meet the level pi(delta - 1)."""

    x5: float
    x6: float
    x7: float
    x8: float
    x9: float
    x10: float
    level: float


def crossings(delta: float, tol: float = 1e-13) -> Crossings:
    delta = float(delta)
    if not DELTA_LO <= delta <= DELTA_HI:
        raise BracketError(f"delta = {delta} is outside [{DELTA_LO}, {DELTA_HI}]")
    x5 = find_root("F6_shift", (EDGE, 0.5 - EDGE), tol).root
    x6 = find_root("F5_level", (EDGE, x5), tol, delta).root
    x7 = find_root("F5_level", (x5, 0.5), tol, delta).root
    x8 = find_root("F8_shift", (EDGE, 0.5 - EDGE), tol).root
    x9 = find_root("F7_level", (EDGE, x8), tol, delta).root
    x10 = find_root("F7_level", (x8, 0.5), tol, delta).root
    return Crossings(x5, x6, x7, x8, x9, x10, PI * (delta - 1.0))


# ---------------------------------------------- complete-monotonicity probes

CM_THRESHOLD = -1e-9
MIN_STEP_POWER = 1e-10


@dataclass(frozen=True)
class CMProbeReport:
    """Minimum over the grid of ``(-1)^m`` times the m-th order statistic, per order."""

    target: str
    minima: dict = field(default_factory=dict)
    threshold: float = CM_THRESHOLD
    conjecture: bool = False

    @property
    def passed(self) -> bool:
        return all(v >= self.threshold for v in self.minima.values())


def _step(m: int) -> float:
    # smallest h with h^m >= 1e-10
    return MIN_STEP_POWER ** (1.0 / m) if m > 0 else 0.0


def _forward_difference(fn, starts, m, h):
    # raw forward difference sum_j (-1)^(m-j) C(m,j) fn(x + j h)
    total = np.zeros_like(starts)
    for j in range(m + 1):
        total += (-1.0) ** (m - j) * math.comb(m, j) * fn(starts + j * h)
    return total


def _parse_cm_target(target):
    if isinstance(target, tuple) and target[0] == "g":
        return "g", int(target[1])
    t = str(target)
    if t.startswith("g(") and t.endswith(")"):
        return "g", int(t[2:-1])
    if t.startswith("g") and t[1:].isdigit():
        return "g", int(t[1:])
    if t in ("F_cm", "F", "F3", "H3"):
        return t if t != "F" else "F_cm", None
    raise ParameterError(f"unknown probe target {target!r}")


def cm_probe(target, max_order: int = 6, grid_size: int = 2000) -> CMProbeReport:
    """Evidence (not proof) of complete monotonicity on (0, 1/2].

    F_cm and F3: for m = 0..max_order, raw forward differences
    ``(-1)^m Delta_h^m`` with step h = 1e-10^(1/m), over windows starting on a
    uniform grid. H3 changes sign itself, so only orders m >= 1 are probed.
    g(n): the derivative sign pattern ``(-1)^(m+1) g_n^(m) = G_{n,m} >= 0`` for
    m = 1..max_order, evaluated from the term-wise differentiated series.
    """
    if int(max_order) != max_order or not 0 <= max_order <= 8:
        raise ParameterError("max_order must be an integer in [0, 8]")
    if grid_size < 10:
        raise ParameterError("grid_size must be >= 10")
    kind, n = _parse_cm_target(target)
    minima = {}
    if kind == "g":
        xs = np.linspace(EDGE, 0.5 - EDGE, grid_size)
        for m in range(1, max_order + 1):
            minima[m] = float(np.min((-1.0) ** (m + 1) * g_derivative(n, m, xs)))
        return CMProbeReport(f"g({n})", minima)

    fn = {"F_cm": F_cm, "F3": lambda x: F_eval(3, x), "H3": lambda x: H3_eval(x)}[kind]
    upper = 0.5 if kind != "H3" else 0.5 - EDGE
    first = 1 if kind == "H3" else 0
    for m in range(first, max_order + 1):
        h = _step(m)
        starts = np.linspace(EDGE, upper - m * h, grid_size)
        minima[m] = float(np.min((-1.0) ** m * _forward_difference(fn, starts, m, h)))
    return CMProbeReport(kind, minima, conjecture=(kind == "F3"))
