"""Series values with rigorous remainder bounds.

The summation engine is Euler-Maclaurin applied to the tail of a partial sum.
For a term function whose ``2p``-th derivative keeps one sign on the tail, the
remainder after ``p`` correction terms is bounded by the magnitude of the last
correction term, so every value here comes with a bound that is not an
estimate. Reported bounds also include a small allowance for floating-point
rounding of the assembled sum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import bernoulli

from . import _kernels
from .errors import ConvergenceError

TERM_CAP = 10_000_000
EPS = 2.0**-53

_P_MAX = 10
# B_{2j}/(2j)! for j = 1.._P_MAX
_EM_COEF = [float(bernoulli(2 * j)[2 * j]) / math.factorial(2 * j) for j in range(1, _P_MAX + 1)]

_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(12)


@dataclass(frozen=True)
class SeriesValue:
    """A truncated series: ``|value - exact| <= tail_bound``."""

    value: float
    tail_bound: float
    terms_used: int

    def __post_init__(self):
        if not (self.tail_bound >= 0.0 and math.isfinite(self.tail_bound)):
            raise ValueError(f"tail_bound must be finite and >= 0, got {self.tail_bound!r}")
        if self.terms_used < 1:
            raise ValueError("terms_used must be >= 1")

    def __float__(self) -> float:
        return float(self.value)

    def scaled(self, factor: float) -> "SeriesValue":
        return SeriesValue(self.value * factor, self.tail_bound * abs(factor), self.terms_used)


def _round_allowance(*parts: float) -> float:
    return 8.0 * EPS * sum(abs(p) for p in parts)


REL_TARGET = 2.0**-53


def _accept(rem: float, bound: float, value: float, target) -> bool:
    """Stopping rule shared by every summation loop.

    ``target=None`` asks for full working precision: stop once the truncation
    remainder is below one half-ulp of the value. An absolute target that lies
    below the rounding floor of the assembled sum cannot be met by adding
    terms, so it is reported immediately rather than after hitting the cap.
    """
    if not math.isfinite(bound):
        raise ConvergenceError("sum overflows binary64")
    if target is None:
        return rem <= REL_TARGET * abs(value) or rem == 0.0
    if bound <= target:
        return True
    if rem <= 0.5 * target and bound - rem > target:
        raise ConvergenceError(f"target {target:g} is below the rounding floor {bound - rem:.3g} of this sum")
    return False


def _check_target(target) -> None:
    if target is not None and not (target > 0.0 and math.isfinite(target)):
        raise ValueError(f"target_abs_err must be a positive finite number, got {target!r}")


def _heads(start: int):
    n = start
    while n <= TERM_CAP:
        yield n
        n *= 4


# ---------------------------------------------------------------- sum (u+k)^-s


def _em_power_tail(s: float, u: float, p: int):
    """Tail ``sum_{k>=0} (u+k)^-s`` as (estimate, remainder bound, EM terms)."""
    integral = u ** (1.0 - s) / (s - 1.0)
    half = 0.5 * u ** (-s)
    poch = s
    power = u ** (-s - 1.0)
    corr = 0.0
    last = 0.0
    for j in range(1, p + 1):
        last = _EM_COEF[j - 1] * poch * power
        corr += last
        poch *= (s + 2 * j - 1) * (s + 2 * j)
        power /= u * u
    return integral + half + corr, abs(last), integral


def hurwitz(s: float, a: float, target_abs_err: float | None = None, p: int = 8, start: int = 16) -> SeriesValue:
    """``sum_{k>=0} (k+a)^-s`` for s > 1, a > 0."""
    _check_target(target_abs_err)
    for n in _heads(start):
        head = _kernels.power_sum(s, a, n)
        tail, rem, big = _em_power_tail(s, n + a, p)
        value = head + tail
        bound = rem + _round_allowance(head, big, value)
        if _accept(rem, bound, value, target_abs_err):
            return SeriesValue(value, bound, n + p)
    raise ConvergenceError(f"sum (k+{a})^-{s}: target {target_abs_err} not reached within {TERM_CAP} terms")


# ------------------------------------------- paired alternating sums


def _pow_diff(v: float, q: float) -> float:
    # v^-q - (v+2)^-q without cancellation
    return -(v ** (-q)) * math.expm1(-q * math.log1p(2.0 / v))


def _em_alt_pair_tail(s: float, v: float, p: int):
    lg = math.log1p(2.0 / v)
    if s == 1.0:
        integral = 0.25 * lg
    else:
        integral = -0.25 * v ** (1.0 - s) * math.expm1((1.0 - s) * lg) / (s - 1.0)
    half = 0.5 * _pow_diff(v, s)
    poch = s
    scale = 4.0
    corr = 0.0
    last = 0.0
    for j in range(1, p + 1):
        q = s + 2 * j - 1
        last = _EM_COEF[j - 1] * poch * scale * _pow_diff(v, q)
        corr += last
        poch *= (s + 2 * j - 1) * (s + 2 * j)
        scale *= 16.0
    return integral + half + corr, abs(last), integral


def alternating_pairs(s: float, u0: float, target_abs_err: float | None = None, p: int = 8, start: int = 16) -> SeriesValue:
    """``sum_{m>=0} (4m+u0)^-s - (4m+u0+2)^-s`` for s > 0, u0 > 0."""
    _check_target(target_abs_err)
    for m in _heads(start):
        head = _kernels.alt_pair_sum(s, u0, m)
        tail, rem, big = _em_alt_pair_tail(s, 4.0 * m + u0, p)
        value = head + tail
        bound = rem + _round_allowance(head, big, value)
        if _accept(rem, bound, value, target_abs_err):
            return SeriesValue(value, bound, 2 * (m + p))
    raise ConvergenceError(f"alternating sum at s={s}: target {target_abs_err} not reached within {TERM_CAP} terms")


# ----------------------------------------- sums weighted by log(u)


def _harmonic(s: float, r: int) -> float:
    return sum(1.0 / (s + i) for i in range(r))


def _em_log_power_tail(s: float, u: float, p: int):
    lu = math.log(u)
    integral = u ** (1.0 - s) * (lu / (s - 1.0) + 1.0 / (s - 1.0) ** 2)
    half = 0.5 * lu * u ** (-s)
    poch = s
    corr = 0.0
    last = 0.0
    for j in range(1, p + 1):
        r = 2 * j - 1
        last = _EM_COEF[j - 1] * poch * u ** (-s - r) * (lu - _harmonic(s, r))
        corr += last
        poch *= (s + 2 * j - 1) * (s + 2 * j)
    return integral + half + corr, abs(last), integral


def log_hurwitz(s: float, a: float, target_abs_err: float | None = None, p: int = 6, start: int = 32) -> SeriesValue:
    """``sum_{k>=0} log(k+a) (k+a)^-s`` for s > 1, a > 0."""
    _check_target(target_abs_err)
    for n in _heads(start):
        u = n + a
        # the remainder bound needs f^(2p) > 0 on the tail
        if math.log(u) <= _harmonic(s, 2 * p):
            continue
        head = _kernels.log_power_sum(s, a, n)
        tail, rem, big = _em_log_power_tail(s, u, p)
        value = head + tail
        bound = rem + _round_allowance(head, big, value)
        if _accept(rem, bound, value, target_abs_err):
            return SeriesValue(value, bound, n + p)
    raise ConvergenceError(f"log-weighted sum at s={s}: target {target_abs_err} not reached")


def _em_alt_log_pair_tail(s: float, v: float, p: int):
    w = v + 2.0
    nodes = v + 1.0 + _GL_NODES
    integral = 0.25 * float(np.dot(_GL_WEIGHTS, np.log(nodes) * nodes ** (-s)))
    lv, lw = math.log(v), math.log(w)
    half = 0.5 * (lv * v ** (-s) - lw * w ** (-s))
    poch = s
    scale = 4.0
    corr = 0.0
    last = 0.0
    for j in range(1, p + 1):
        r = 2 * j - 1
        h = _harmonic(s, r)
        q = s + r
        last = _EM_COEF[j - 1] * poch * scale * (v ** (-q) * (lv - h) - w ** (-q) * (lw - h))
        corr += last
        poch *= (s + 2 * j - 1) * (s + 2 * j)
        scale *= 16.0
    return integral + half + corr, abs(last), integral


def alternating_log_pairs(s: float, u0: float, target_abs_err: float | None = None, p: int = 6, start: int = 16) -> SeriesValue:
    """``sum_{m>=0} log(v) v^-s - log(v+2) (v+2)^-s`` with v = 4m+u0."""
    _check_target(target_abs_err)
    for m in _heads(start):
        v = 4.0 * m + u0
        if math.log(v) <= _harmonic(s, 2 * p + 1):
            continue
        head = _kernels.alt_log_pair_sum(s, u0, m)
        tail, rem, big = _em_alt_log_pair_tail(s, v, p)
        value = head + tail
        bound = rem + _round_allowance(head, big, value)
        if _accept(rem, bound, value, target_abs_err):
            return SeriesValue(value, bound, 2 * (m + p))
    raise ConvergenceError(f"alternating log-weighted sum at s={s}: target {target_abs_err} not reached")


# ------------------------------------------------- power series on grids


def power_series(coeffs, t, tail_bound_fn=None):
    """Evaluate ``sum_j coeffs[j] t^j`` at scalar or array ``t``.

    ``tail_bound_fn(t)`` supplies the bound on the terms beyond ``coeffs``;
    returns ``(values, bounds)`` with the same shape as ``t``.
    """
    arr = np.asarray(t, dtype=np.float64)
    vals = _kernels.horner(coeffs, arr.ravel()).reshape(arr.shape)
    if tail_bound_fn is None:
        bounds = np.zeros_like(vals)
    else:
        bounds = np.asarray(tail_bound_fn(arr), dtype=np.float64) * np.ones_like(vals)
    return vals, bounds
