"""Digamma, polygamma, and the reflection pair B(x) = pi/sin(pi x), H1(x) = pi cot(pi x)."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels, dirichlet, series
from .errors import DomainError
from .series import SeriesValue

EULER_GAMMA = _kernels.EULER_GAMMA
PI = math.pi


@dataclass(frozen=True)
class ReflectionPoint:
    """A point of (0, 1) carrying 1 - x explicitly.

    Build it with :meth:`from_x` (or :meth:`from_complement` when 1 - x is the
    quantity known to full precision, e.g. x = 1 - 1e-17).
    """

    x: float
    one_minus_x: float

    def __post_init__(self):
        # either coordinate may round to 1.0 when the other one is tiny
        if not (0.0 < self.x <= 1.0 and 0.0 < self.one_minus_x <= 1.0):
            raise DomainError(f"reflection point must lie in (0, 1), got x={self.x}")
        if abs(self.x + self.one_minus_x - 1.0) > 2.0 * series.EPS:
            raise DomainError("one_minus_x is inconsistent with x")

    @classmethod
    def from_x(cls, x: float) -> "ReflectionPoint":
        return cls(float(x), 1.0 - float(x))

    @classmethod
    def from_complement(cls, one_minus_x: float) -> "ReflectionPoint":
        return cls(1.0 - float(one_minus_x), float(one_minus_x))

    @property
    def reduced(self) -> float:
        """min(x, 1 - x): the symmetric representative in (0, 1/2]."""
        return min(self.x, self.one_minus_x)


def _as_array(x):
    arr = np.asarray(x, dtype=np.float64)
    return arr, arr.ndim == 0


def _finish(out, scalar):
    return float(out.reshape(-1)[0]) if scalar else out


def psi(x):
    """Digamma for x > 0 (scalar or array).

    Upward recurrence to x >= 10, then the Bernoulli asymptotic series.
    """
    arr, scalar = _as_array(x)
    if not np.all(arr > 0.0):
        raise DomainError("psi needs x > 0")
    out = _kernels.digamma(arr.ravel()).reshape(arr.shape)
    return _finish(out, scalar)


def polygamma(n: int, x: float, target_abs_err: float | None = None) -> SeriesValue:
    """``psi^(n)(x) = (-1)^(n+1) n! sum_{k>=0} (k+x)^-(n+1)`` for n >= 1, x > 0."""
    if int(n) != n or n < 1:
        raise DomainError(f"polygamma order must be an integer >= 1, got {n!r}")
    x = float(x)
    if not x > 0.0:
        raise DomainError(f"polygamma needs x > 0, got {x}")
    n = int(n)
    fact = float(math.factorial(n))
    inner = series.hurwitz(n + 1.0, x, None if target_abs_err is None else target_abs_err / fact)
    sign = 1.0 if n % 2 == 1 else -1.0
    return inner.scaled(sign * fact)


def _open_unit(arr):
    if not np.all((arr > 0.0) & (arr < 1.0)):
        raise DomainError("argument must lie in the open interval (0, 1)")


def B_fn(x):
    """``pi / sin(pi x)`` on (0, 1).

    The argument is folded to t = min(x, 1-x) first, so B(x) and B(1-x) are
    bitwise equal whenever 1 - x is representable.
    """
    arr, scalar = _as_array(x)
    _open_unit(arr)
    t = np.where(arr <= 0.5, arr, 1.0 - arr)
    return _finish(PI / np.sin(PI * t), scalar)


def H1(x):
    """``pi cot(pi x) = psi(1-x) - psi(x)`` on (0, 1); exactly 0 at x = 1/2.

    Uses pi tan(pi (1/2 - x)) on [1/4, 3/4], where 1/2 - x is exact.
    """
    arr, scalar = _as_array(x)
    _open_unit(arr)
    mid = (arr >= 0.25) & (arr <= 0.75)
    out = np.empty_like(arr)
    out[mid] = PI * np.tan(PI * (0.5 - arr[mid]))
    lo = arr < 0.25
    out[lo] = PI / np.tan(PI * arr[lo])
    hi = arr > 0.75
    out[hi] = -PI / np.tan(PI * (1.0 - arr[hi]))
    return _finish(out, scalar)


# ------------------------------------------------------------ series forms


def _center_series(coeffs: np.ndarray, y: float, odd: bool, coef_bound, closed: float) -> SeriesValue:
    y2 = y * y
    vals = float(_kernels.horner(coeffs, np.array([y2]))[0])
    if odd:
        vals *= y
    n = len(coeffs)
    # |coeffs[j]| <= coef_bound(j) and coef_bound decreases by 1/9 per index
    tail = coef_bound(n) * y2**n * (y if odd else 1.0) / (1.0 - y2 / 9.0)
    value = vals + closed
    return SeriesValue(value, tail + 4.0 * series.EPS * (abs(vals) + abs(closed)), n)


def B_center_series(x: float, n_terms: int = 40) -> SeriesValue:
    """``B(x) = 4 sum_{n>=0} beta(2n+1) (1-2x)^(2n)`` on (0, 1), rearranged.

    Summed as ``4 sum (beta(2n+1)-1) y^(2n) + 1/(x(1-x))`` with y = 1-2x.
    """
    x = float(x)
    if not 0.0 < x < 1.0:
        raise DomainError("B series needs x in (0, 1)")
    y = 1.0 - 2.0 * x
    tbl = dirichlet.integer_table("beta_m1", 2 * n_terms + 1)
    coeffs = 4.0 * np.array([tbl[2 * j + 1] for j in range(n_terms)])
    return _center_series(coeffs, y, False, lambda j: 4.0 * 3.0 ** -(2 * j + 1), 1.0 / (x * (1.0 - x)))


def H1_center_series(x: float, n_terms: int = 40) -> SeriesValue:
    """``H1(x) = 4 sum_{k>=1} lambda(2k) (1-2x)^(2k-1)``, rearranged like :func:`B_center_series`."""
    x = float(x)
    if not 0.0 < x < 1.0:
        raise DomainError("H1 series needs x in (0, 1)")
    y = 1.0 - 2.0 * x
    tbl = dirichlet.integer_table("lambda_m1", 2 * n_terms + 2)
    coeffs = 4.0 * np.array([tbl[2 * j + 2] for j in range(n_terms)])
    # lambda(s) - 1 <= 3^-s (1 + 3/(2(s-1)))
    return _center_series(coeffs, y, True, lambda j: 4.0 * 3.0 ** -(2 * j + 2) * 2.0, y / (x * (1.0 - x)))
