"""Two-sided bounds for R(x) on (0, 1/2].

Every bound has the shape ``(B(x) + polynomial-ish term) / (1 + x(1-x))``.
All functions take a scalar or an array of x and return a :class:`BoundPair`
holding floats or arrays accordingly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import coefficients
from .errors import DomainError, ParameterError
from .polygamma import B_fn

DELTA_LO = 19.0 * math.sqrt(2.0) * math.log(8.0) / (16.0 * math.pi)
DELTA_HI = 1.112146

# slack used when validating lower <= upper: the two sides of an "equality at
# 1/2" bound are computed by different formulas and may cross by a few ulps
_ORDER_SLACK = 8.0 * 2.0**-52

METHODS = ("sine_poly", "origin_poly", "center_poly", "multiplicative", "additive", "envelope")


@dataclass(frozen=True)
class BoundPair:
    """Lower and upper bound for R at one point (or elementwise on an array).

    ``method`` is one of :data:`METHODS`, with the order appended where the
    bound has one (``origin_poly(2)``). ``strict_lower`` marks a lower bound
    that no point attains.
    """

    lower: float | np.ndarray
    upper: float | np.ndarray
    method: str
    strict_lower: bool = False

    def __post_init__(self):
        lo = np.asarray(self.lower)
        hi = np.asarray(self.upper)
        if not np.all(lo <= hi + _ORDER_SLACK * np.abs(hi)):
            raise ValueError(f"{self.method}: lower bound exceeds upper bound")

    @property
    def gap(self):
        return self.upper - self.lower

    def contains(self, value, rel_slack: float = 0.0):
        v = np.asarray(value)
        s = rel_slack * np.abs(v)
        return (self.lower - s <= v) & (v <= self.upper + s)


def _prep(x):
    arr = np.asarray(x, dtype=np.float64)
    scalar = arr.ndim == 0
    arr = np.atleast_1d(arr)
    if not np.all((arr > 0.0) & (arr <= 0.5)):
        raise DomainError("bounds are stated for x in (0, 1/2]")
    return arr, scalar


def _pack(lower, upper, method, scalar, strict=False):
    if scalar:
        return BoundPair(float(lower[0]), float(upper[0]), method, strict)
    return BoundPair(lower, upper, method, strict)


def _table():
    return coefficients.default_table()


def _parts(x):
    return B_fn(x), 1.0 + x * (1.0 - x), 1.0 - 2.0 * x


def _sine_poly_terms(x):
    t = _table()
    b0, b1 = t.b[0], t.b[1]
    y = 1.0 - 2.0 * x
    P = np.maximum(0.0, 1.0 - b0 - b1 + b1 * y)
    Q = np.minimum(1.0 - b0, b1 * y)
    return b0 + y * P, b0 + y * Q


def _R_partial(n: int, x):
    a = _table().a
    return np.polynomial.polynomial.polyval(x, a[: n + 1])


def _S_partial(n: int, x):
    b = _table().b
    y2 = (1.0 - 2.0 * x) ** 2
    return np.polynomial.polynomial.polyval(y2, b[: n + 1])


def _origin_terms(n: int, x):
    t = _table()
    if int(n) != n or n < 1:
        raise ParameterError(f"origin_poly order must be an integer >= 1, got {n!r}")
    if 2 * n + 2 > t.N:
        raise IndexError(f"origin_poly({n}) needs A_{2 * n + 2}; table has N={t.N}")
    A = t.A
    lo = _R_partial(2 * n + 2, x) + A[2 * n + 2] * x ** (2 * n + 3)
    hi = _R_partial(2 * n + 1, x) + A[2 * n + 1] * x ** (2 * n + 2)
    return lo, hi


def _center_terms(n: int, x):
    t = _table()
    if int(n) != n or n < 0:
        raise ParameterError(f"center_poly order must be an integer >= 0, got {n!r}")
    if n + 1 > t.N:
        raise IndexError(f"center_poly({n}) needs c_{n + 1}; table has N={t.N}")
    S = _S_partial(n + 1, x)
    y = 1.0 - 2.0 * x
    return S + t.c[n + 1] * y ** (2 * n + 3), S


def _check_delta(delta: float) -> float:
    delta = float(delta)
    if not DELTA_LO <= delta <= DELTA_HI:
        raise ParameterError(f"delta must lie in [{DELTA_LO:.6f}, {DELTA_HI}], got {delta}")
    return delta


# ---------------------------------------------------------------- methods


def bound_sine_poly(x) -> BoundPair:
    """``(b0 + y P(x) + B) / den <= R <= (b0 + y Q(x) + B) / den`` with
    P = max{0, 1-b0-b1+b1 y}, Q = min{1-b0, b1 y}, y = 1-2x."""
    x, scalar = _prep(x)
    B, den, _ = _parts(x)
    lo, hi = _sine_poly_terms(x)
    return _pack((B + lo) / den, (B + hi) / den, "sine_poly", scalar)


def bound_origin_poly(n: int, x) -> BoundPair:
    """``(B + R_{2n+2} + A_{2n+2} x^(2n+3)) / den <= R <= (B + R_{2n+1} + A_{2n+1} x^(2n+2)) / den``."""
    x, scalar = _prep(x)
    B, den, _ = _parts(x)
    lo, hi = _origin_terms(n, x)
    return _pack((B + lo) / den, (B + hi) / den, f"origin_poly({n})", scalar)


def bound_center_poly(n: int, x) -> BoundPair:
    """``(B + S_{n+1} + c_{n+1} y^(2n+3)) / den <= R <= (B + S_{n+1}) / den``."""
    x, scalar = _prep(x)
    B, den, _ = _parts(x)
    lo, hi = _center_terms(n, x)
    return _pack((B + lo) / den, (B + hi) / den, f"center_poly({n})", scalar)


def bound_multiplicative(x, delta: float = DELTA_HI) -> BoundPair:
    """``B/den < R <= delta B/den``; the lower side is strict and never attained.

    ``delta`` must lie in the proven bracket; the default is its upper end,
    which is always sound. Pass ``analysis.delta_estimate().delta`` for the
    sharp constant.
    """
    delta = _check_delta(delta)
    x, scalar = _prep(x)
    B, den, _ = _parts(x)
    base = B / den
    return _pack(base, delta * base, "multiplicative", scalar, strict=True)


def bound_additive(x) -> BoundPair:
    """``rho + B/den <= R <= rho + (1-rho) y + B/den`` with rho = 4 b0 / 5."""
    x, scalar = _prep(x)
    B, den, y = _parts(x)
    rho = 0.8 * _table().b[0]
    base = B / den
    return _pack(rho + base, rho + (1.0 - rho) * y + base, "additive", scalar)


def bound_envelope(n: int, x, delta: float = DELTA_HI) -> BoundPair:
    """Pointwise best of the sine_poly, origin_poly(n), center_poly(n) and multiplicative bounds."""
    delta = _check_delta(delta)
    x, scalar = _prep(x)
    B, den, _ = _parts(x)
    s_lo, s_hi = _sine_poly_terms(x)
    o_lo, o_hi = _origin_terms(n, x)
    c_lo, c_hi = _center_terms(n, x)
    D1 = np.maximum(np.maximum(s_lo, o_lo), c_lo)
    D2 = np.minimum(np.minimum(np.minimum(s_hi, o_hi), c_hi), (delta - 1.0) * B)
    return _pack((B + D1) / den, (B + D2) / den, f"envelope({n})", scalar)


def all_bounds(x, n: int = 2, delta: float = DELTA_HI) -> dict[str, BoundPair]:
    """Every method at x, keyed by method label."""
    out = [
        bound_sine_poly(x),
        bound_origin_poly(n, x),
        bound_center_poly(n, x),
        bound_multiplicative(x, delta),
        bound_additive(x),
        bound_envelope(n, x, delta),
    ]
    return {bp.method: bp for bp in out}


def literal_origin_lower_n1(x):
    """The n = 1 origin lower bound exactly as sometimes printed, with x^3 in place of x^5.

    ``(B + R_4 + A_4 x^3) / den``. It is *not* a valid lower bound (it exceeds
    R on most of (0, 1/2)); kept so the discrepancy can be demonstrated.
    """
    x, scalar = _prep(x)
    B, den, _ = _parts(x)
    val = (B + _R_partial(4, x) + _table().A[4] * x**3) / den
    return float(val[0]) if scalar else val
