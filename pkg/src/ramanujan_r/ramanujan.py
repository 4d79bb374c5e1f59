"""R(x) = -2 gamma - psi(x) - psi(1-x) and the derived function f = [1+x(1-x)] R - B.

Three evaluation routes:

direct
    the digamma definition (and ``[1+x(1-x)] R - B`` for f);
origin series
    ``R = 1/x + 2 sum_{n>=1} zeta(2n+1) x^(2n)`` and ``f = sum a_n x^n``;
center series
    ``R = log 16 + 4 sum_{n>=1} lambda(2n+1) y^(2n)`` and ``f = sum b_n y^(2n)``,
    with y = 1 - 2x.

The R series are summed in the rearranged form ``sum (zeta(2n+1)-1) x^(2n)``
plus the closed-form geometric part, which converges like 4^-n (origin) or
9^-n (center) uniformly on (0, 1/2], and every term is positive, so there is
no cancellation anywhere. Arguments in (1/2, 1) are reflected.

Functions accept scalars or numpy arrays; scalar in, scalar out.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from . import _kernels, coefficients, dirichlet
from .errors import DomainError, ParameterError
from .polygamma import B_fn, EULER_GAMMA

EPS = 2.0**-53
LN16 = 4.0 * math.log(2.0)
MAX_DERIVATIVE_ORDER = 8

# f: origin series for x <= ORIGIN_MAX, center series for x >= CENTER_MIN, direct in between
F_ORIGIN_MAX = 0.15
F_CENTER_MIN = 0.35
# R: both series are cancellation-free; the split only balances term counts
R_ORIGIN_MAX = 0.25

_R_TERMS = 60


class EvalMethod(str, enum.Enum):
    DIRECT = "direct"
    ORIGIN = "origin_series"
    CENTER = "center_series"
    AUTO = "auto"

    @classmethod
    def parse(cls, value) -> "EvalMethod":
        if isinstance(value, cls):
            return value
        aliases = {"origin": cls.ORIGIN, "center": cls.CENTER}
        key = str(value).lower()
        if key in aliases:
            return aliases[key]
        try:
            return cls(key)
        except ValueError:
            raise ParameterError(f"unknown method {value!r}; use auto, direct, origin or center") from None


@dataclass(frozen=True)
class RFunctionValue:
    """A function value with the route that produced it.

    For the series routes ``est_abs_err`` is the rigorous tail bound plus a
    rounding allowance; for the direct route it is a rounding estimate.
    """

    value: float
    method: EvalMethod
    est_abs_err: float

    def __post_init__(self):
        if not self.est_abs_err >= 0.0:
            raise ValueError("est_abs_err must be >= 0")

    def __float__(self) -> float:
        return float(self.value)


# ------------------------------------------------------------------ helpers


def _as_array(x):
    arr = np.asarray(x, dtype=np.float64)
    return np.atleast_1d(arr).astype(np.float64, copy=False), arr.ndim == 0


def _out(vals, scalar, shape=None):
    if scalar:
        return float(np.asarray(vals).reshape(-1)[0])
    return vals if shape is None else vals.reshape(shape)


def _check_open_unit(arr):
    if not np.all((arr > 0.0) & (arr < 1.0)):
        raise DomainError("x must lie in (0, 1)")


def _check_half(arr, closed=True):
    ok = (arr > 0.0) & ((arr <= 0.5) if closed else (arr < 0.5))
    if not np.all(ok):
        raise DomainError("x must lie in (0, 1/2]" if closed else "x must lie in (0, 1/2)")


def _fold(arr):
    return np.where(arr <= 0.5, arr, 1.0 - arr)


def _poly(coeffs, t):
    return _kernels.horner(coeffs, t.ravel()).reshape(t.shape)


def _table():
    return coefficients.default_table()


_series_cache: dict = {}


def _r_coeffs():
    c = _series_cache.get("R")
    if c is None:
        z = dirichlet.integer_table("zeta_m1", 2 * _R_TERMS + 1)
        lam = dirichlet.integer_table("lambda_m1", 2 * _R_TERMS + 1)
        origin = np.zeros(_R_TERMS + 1)
        center = np.zeros(_R_TERMS + 1)
        for n in range(1, _R_TERMS + 1):
            origin[n] = 2.0 * z[2 * n + 1]
            center[n] = 4.0 * lam[2 * n + 1]
        c = _series_cache.setdefault("R", (origin, center))
    return c


def _zm1_bound(s):
    # zeta(s) - 1 <= 2^-s + int_2^inf t^-s dt
    return 2.0**-s * (1.0 + 2.0 / (s - 1.0))


def _lm1_bound(s):
    # lambda(s) - 1 <= 3^-s + int_1^inf (2t+1)^-s dt
    return 3.0**-s * (1.0 + 1.5 / (s - 1.0))


# ---------------------------------------------------------------------- R


def _R_origin(t):
    origin, _ = _r_coeffs()
    t2 = t * t
    s = _poly(origin, t2)
    geo = 2.0 * t2 / (1.0 - t2)
    val = 1.0 / t + s + geo
    K = _R_TERMS
    tail = 2.0 * _zm1_bound(2 * K + 3) * t2 ** (K + 1) / (1.0 - t2 / 4.0)
    return val, tail + 4.0 * EPS * val


def _R_center(t):
    _, center = _r_coeffs()
    y = 1.0 - 2.0 * t
    y2 = y * y
    s = _poly(center, y2)
    geo = y2 / (t * (1.0 - t))
    val = LN16 + s + geo
    K = _R_TERMS
    tail = 4.0 * _lm1_bound(2 * K + 3) * y2 ** (K + 1) / (1.0 - y2 / 9.0)
    return val, tail + 4.0 * EPS * val


def _R_direct(t):
    p1 = _kernels.digamma((1.0 + t).ravel()).reshape(t.shape)
    p2 = _kernels.digamma((1.0 - t).ravel()).reshape(t.shape)
    inner = 2.0 * EULER_GAMMA + p1 + p2
    val = 1.0 / t - inner
    return val, 16.0 * EPS * (1.0 / t + 2.0 * EULER_GAMMA + np.abs(p1) + np.abs(p2))


def _resolve_R(method, t):
    if method is EvalMethod.AUTO:
        return np.where(t <= R_ORIGIN_MAX, 1, 2)
    return np.full(t.shape, {EvalMethod.DIRECT: 0, EvalMethod.ORIGIN: 1, EvalMethod.CENTER: 2}[method])


_ROUTES = (EvalMethod.DIRECT, EvalMethod.ORIGIN, EvalMethod.CENTER)


def R_values(x, method="auto"):
    """Vectorised R: returns (values, error estimates) with the shape of x."""
    method = EvalMethod.parse(method)
    arr, scalar = _as_array(x)
    _check_open_unit(arr)
    t = _fold(arr)
    route = _resolve_R(method, t)
    vals = np.empty_like(t)
    errs = np.empty_like(t)
    for code, fn in enumerate((_R_direct, _R_origin, _R_center)):
        m = route == code
        if m.any():
            vals[m], errs[m] = fn(t[m])
    if scalar:
        return float(vals[0]), float(errs[0])
    shape = np.shape(x)
    return vals.reshape(shape), errs.reshape(shape)


def R_eval(x: float, method="auto") -> RFunctionValue:
    """R(x) on (0, 1) by the requested route (auto: origin series for x <= 1/4, else center)."""
    method = EvalMethod.parse(method)
    x = float(x)
    _check_open_unit(np.array([x]))
    t = min(x, 1.0 - x)
    route = _ROUTES[int(_resolve_R(method, np.array([t]))[0])]
    val, err = R_values(x, route)
    return RFunctionValue(val, route, err)


def R_derivative(n: int, x: float) -> float:
    """``R^(n)(x) = (-1)^(n+1) psi^(n)(1-x) - psi^(n)(x)``."""
    from .polygamma import ReflectionPoint, polygamma

    if int(n) != n or n < 1:
        raise DomainError(f"derivative order must be an integer >= 1, got {n!r}")
    n = int(n)
    p = ReflectionPoint.from_x(x)
    if p.x == p.one_minus_x:
        if n % 2 == 1:
            return 0.0
        return -2.0 * polygamma(n, p.x).value
    sign = 1.0 if n % 2 == 1 else -1.0
    return sign * polygamma(n, p.one_minus_x).value - polygamma(n, p.x).value


# ---------------------------------------------------------------------- f


def _den(x):
    return 1.0 + x * (1.0 - x)


def _f_origin(x):
    tbl = _table()
    val = _poly(tbl.a, x)
    N = tbl.N
    # |a_n| decreases for n >= 2
    tail = abs(tbl.a_ext[N + 1]) * x ** (N + 1) / (1.0 - x)
    absum = _poly(np.abs(tbl.a), x)
    return val, tail + 4.0 * EPS * absum


def _f_center(x):
    tbl = _table()
    y2 = (1.0 - 2.0 * x) ** 2
    val = _poly(tbl.b, y2)
    N = tbl.N
    tail = abs(tbl.b_ext[N + 1]) * y2 ** (N + 1) / (1.0 - y2)
    return val, tail + 4.0 * EPS * (np.abs(val) + 1.0)


def _f_direct(x):
    r, rerr = _R_direct(x)
    den = _den(x)
    b = B_fn(x)
    val = den * r - b
    return val, den * rerr + 4.0 * EPS * (den * np.abs(r) + b)


def _resolve_f(method, x):
    if method is EvalMethod.AUTO:
        return np.where(x <= F_ORIGIN_MAX, 1, np.where(x >= F_CENTER_MIN, 2, 0))
    return np.full(x.shape, {EvalMethod.DIRECT: 0, EvalMethod.ORIGIN: 1, EvalMethod.CENTER: 2}[method])


def f_values(x, method="auto"):
    """Vectorised f on (0, 1/2]: returns (values, error estimates)."""
    method = EvalMethod.parse(method)
    arr, scalar = _as_array(x)
    _check_half(arr)
    route = _resolve_f(method, arr)
    vals = np.empty_like(arr)
    errs = np.empty_like(arr)
    for code, fn in enumerate((_f_direct, _f_origin, _f_center)):
        m = route == code
        if m.any():
            vals[m], errs[m] = fn(arr[m])
    if scalar:
        return float(vals[0]), float(errs[0])
    shape = np.shape(x)
    return vals.reshape(shape), errs.reshape(shape)


def f_eval(x: float, method="auto") -> RFunctionValue:
    """f(x) = [1 + x(1-x)] R(x) - B(x) on (0, 1/2].

    auto uses the origin series on (0, 0.15], the center series on
    [0.35, 1/2] and the direct form in between.
    """
    method = EvalMethod.parse(method)
    x = float(x)
    _check_half(np.array([x]))
    route = _ROUTES[int(_resolve_f(method, np.array([x]))[0])]
    val, err = f_values(x, route)
    return RFunctionValue(val, route, err)


# -------------------------------------------- term-wise differentiated series


def _falling(k: int, m: int) -> float:
    return float(math.perm(k, m))


def even_series_derivative(coeffs, y, m: int):
    """m-th x-derivative of ``sum_k coeffs[k] y^(2k)`` where y = 1 - 2x.

    ``(-2)^m sum_{2k>=m} coeffs[k] (2k)!/(2k-m)! y^(2k-m)``.
    """
    coeffs = np.asarray(coeffs, dtype=np.float64)
    K = len(coeffs) - 1
    if m == 0:
        p = np.zeros(2 * K + 1)
        p[0::2] = coeffs
    else:
        p = np.zeros(2 * K + 1 - m)
        scale = (-2.0) ** m
        for k in range((m + 1) // 2, K + 1):
            p[2 * k - m] = scale * coeffs[k] * _falling(2 * k, m)
    return _poly(p, np.asarray(y, dtype=np.float64))


def _check_order(m: int, lo: int = 1):
    if int(m) != m or m < lo or m > MAX_DERIVATIVE_ORDER:
        raise DomainError(f"derivative order must be an integer in [{lo}, {MAX_DERIVATIVE_ORDER}], got {m!r}")


def f_derivative(n: int, x):
    """f^(n)(x) on (0, 1/2] from the term-wise differentiated center series (1 <= n <= 8)."""
    _check_order(n)
    arr, scalar = _as_array(x)
    _check_half(arr)
    vals = even_series_derivative(_table().b, 1.0 - 2.0 * arr, int(n))
    return _out(vals, scalar, np.shape(x))


def F1n(n: int, x):
    """``F_{1,n}(x) = (-1)^(n+1) f^(n)(x)``."""
    return (-1.0) ** (n + 1) * f_derivative(n, x)


def F_cm(x):
    """``F(x) = b_0 + b_1 y^2 + B(x) - [1+x(1-x)] R(x) = -sum_{k>=2} b_k y^(2k)``, y = 1-2x."""
    arr, scalar = _as_array(x)
    _check_half(arr)
    y2 = (1.0 - 2.0 * arr) ** 2
    vals = -(y2 * y2) * _poly(_table().b_ext[2:], y2)
    return _out(vals, scalar, np.shape(x))


def F_cm_direct(x):
    """F evaluated from its definition (cancels badly near x = 1/2; for cross-checks)."""
    arr, scalar = _as_array(x)
    _check_half(arr)
    tbl = _table()
    y2 = (1.0 - 2.0 * arr) ** 2
    r, _ = _R_direct(arr)
    vals = tbl.b[0] + tbl.b[1] * y2 + B_fn(arr) - _den(arr) * r
    return _out(vals, scalar, np.shape(x))


def _check_index(n: int, limit: int):
    if int(n) != n or n < 0 or n > limit:
        raise DomainError(f"index must be an integer in [0, {limit}], got {n!r}")


def fn_ratio(n: int, x):
    """``f_n(x) = (f(x) - R_n(x)) / x^(n+1) = sum_{k>=0} a_{n+k+1} x^k`` on (0, 1/2]."""
    tbl = _table()
    _check_index(n, tbl.N)
    arr, scalar = _as_array(x)
    _check_half(arr)
    vals = _poly(tbl.a_ext[int(n) + 1 :], arr)
    return _out(vals, scalar, np.shape(x))


def gn_ratio(n: int, x):
    """``g_n(x) = (f(x) - S_n(x)) / y^(2n+2) = sum_{k>=0} b_{n+k+1} y^(2k)`` on (0, 1/2)."""
    tbl = _table()
    _check_index(n, tbl.N)
    arr, scalar = _as_array(x)
    _check_half(arr, closed=False)
    y2 = (1.0 - 2.0 * arr) ** 2
    vals = _poly(tbl.b_ext[int(n) + 1 :], y2)
    return _out(vals, scalar, np.shape(x))


def g_derivative(n: int, m: int, x):
    """m-th derivative of g_n on (0, 1/2), term by term (0 <= m <= 8)."""
    tbl = _table()
    _check_index(n, tbl.N)
    _check_order(m, lo=0)
    arr, scalar = _as_array(x)
    _check_half(arr, closed=False)
    vals = even_series_derivative(tbl.b_ext[int(n) + 1 :], 1.0 - 2.0 * arr, int(m))
    return _out(vals, scalar, np.shape(x))


def G_eval(n: int, m: int, x):
    """``G_{n,m}(x) = (-1)^(m+1) g_n^(m)(x)``."""
    return (-1.0) ** (m + 1) * g_derivative(n, m, x)
