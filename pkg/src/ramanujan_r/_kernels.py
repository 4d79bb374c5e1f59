"""Hot numeric loops, compiled with numba when available.

Every kernel has a pure-numpy twin. Set ``RAMANUJAN_R_NO_NUMBA=1`` before
import to force the numpy path (the benchmark in ``benchmarks/`` compares
both). The two paths agree to a few ulp; they are not bit-identical because
the numpy partial sums use ``math.fsum`` instead of a running Neumaier
accumulator.
"""

from __future__ import annotations

import math
import os

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

USE_NUMBA = numba is not None and os.environ.get("RAMANUJAN_R_NO_NUMBA", "") not in ("1", "true", "yes")

BACKEND = "numba" if USE_NUMBA else "numpy"

EULER_GAMMA = 0.57721566490153286061

# B_{2k}/(2k) for k = 1..8, used by the digamma asymptotic series
_PSI_ASYMP = np.array(
    [
        1.0 / 12.0,
        -1.0 / 120.0,
        1.0 / 252.0,
        -1.0 / 240.0,
        1.0 / 132.0,
        -691.0 / 32760.0,
        1.0 / 12.0,
        -3617.0 / 8160.0,
    ]
)
_PSI_SHIFT = 10.0


def _njit(func):
    if USE_NUMBA:
        return numba.njit(cache=True, nogil=True)(func)
    return func


# ---------------------------------------------------------------- numba path


def _nb_power_sum(s, a, step, n):
    # sum_{k<n} (a + step*k)^(-s), Neumaier-compensated, smallest terms last
    total = 0.0
    comp = 0.0
    for k in range(n):
        t = (a + step * k) ** (-s)
        y = total + t
        if abs(total) >= abs(t):
            comp += (total - y) + t
        else:
            comp += (t - y) + total
        total = y
    return total + comp


def _nb_alt_pair_sum(s, u0, n):
    # sum_{m<n} [(4m+u0)^(-s) - (4m+u0+2)^(-s)]
    total = 0.0
    comp = 0.0
    for m in range(n):
        v = 4.0 * m + u0
        t = v ** (-s) - (v + 2.0) ** (-s)
        y = total + t
        if abs(total) >= abs(t):
            comp += (total - y) + t
        else:
            comp += (t - y) + total
        total = y
    return total + comp


def _nb_log_power_sum(s, a, step, n):
    # sum_{k<n} log(a+step*k) (a+step*k)^(-s)
    total = 0.0
    comp = 0.0
    for k in range(n):
        u = a + step * k
        t = math.log(u) * u ** (-s)
        y = total + t
        if abs(total) >= abs(t):
            comp += (total - y) + t
        else:
            comp += (t - y) + total
        total = y
    return total + comp


def _nb_alt_log_pair_sum(s, u0, n):
    # sum_{m<n} [log(v) v^(-s) - log(v+2) (v+2)^(-s)], v = 4m+u0
    total = 0.0
    comp = 0.0
    for m in range(n):
        v = 4.0 * m + u0
        w = v + 2.0
        t = math.log(v) * v ** (-s) - math.log(w) * w ** (-s)
        y = total + t
        if abs(total) >= abs(t):
            comp += (total - y) + t
        else:
            comp += (t - y) + total
        total = y
    return total + comp


def _nb_horner(coeffs, t):
    out = np.empty(t.shape[0])
    nc = coeffs.shape[0]
    for i in range(t.shape[0]):
        acc = coeffs[nc - 1]
        ti = t[i]
        for j in range(nc - 2, -1, -1):
            acc = acc * ti + coeffs[j]
        out[i] = acc
    return out


def _nb_digamma(x, asymp):
    out = np.empty(x.shape[0])
    for i in range(x.shape[0]):
        xi = x[i]
        acc = 0.0
        while xi < 10.0:
            acc -= 1.0 / xi
            xi += 1.0
        z = 1.0 / (xi * xi)
        poly = asymp[7]
        for j in range(6, -1, -1):
            poly = poly * z + asymp[j]
        out[i] = acc + (math.log(xi) - 0.5 / xi - z * poly)
    return out


# ---------------------------------------------------------------- numpy path


def _np_power_sum(s, a, step, n):
    k = np.arange(n, dtype=np.float64)
    return math.fsum((a + step * k) ** (-s))


def _np_alt_pair_sum(s, u0, n):
    v = 4.0 * np.arange(n, dtype=np.float64) + u0
    terms = np.empty(2 * n)
    terms[0::2] = v ** (-s)
    terms[1::2] = -((v + 2.0) ** (-s))
    return math.fsum(terms)


def _np_log_power_sum(s, a, step, n):
    u = a + step * np.arange(n, dtype=np.float64)
    return math.fsum(np.log(u) * u ** (-s))


def _np_alt_log_pair_sum(s, u0, n):
    v = 4.0 * np.arange(n, dtype=np.float64) + u0
    w = v + 2.0
    terms = np.empty(2 * n)
    terms[0::2] = np.log(v) * v ** (-s)
    terms[1::2] = -np.log(w) * w ** (-s)
    return math.fsum(terms)


def _np_horner(coeffs, t):
    acc = np.full(t.shape, coeffs[-1])
    for c in coeffs[-2::-1]:
        acc = acc * t + c
    return acc


def _np_digamma(x, asymp):
    xi = x.copy()
    acc = np.zeros_like(xi)
    mask = xi < _PSI_SHIFT
    while mask.any():
        acc[mask] -= 1.0 / xi[mask]
        xi[mask] += 1.0
        mask = xi < _PSI_SHIFT
    z = 1.0 / (xi * xi)
    poly = np.full_like(xi, asymp[7])
    for j in range(6, -1, -1):
        poly = poly * z + asymp[j]
    return acc + (np.log(xi) - 0.5 / xi - z * poly)


if USE_NUMBA:
    _power_sum = _njit(_nb_power_sum)
    _alt_pair_sum = _njit(_nb_alt_pair_sum)
    _log_power_sum = _njit(_nb_log_power_sum)
    _alt_log_pair_sum = _njit(_nb_alt_log_pair_sum)
    _horner = _njit(_nb_horner)
    _digamma = _njit(_nb_digamma)
else:
    _power_sum = _np_power_sum
    _alt_pair_sum = _np_alt_pair_sum
    _log_power_sum = _np_log_power_sum
    _alt_log_pair_sum = _np_alt_log_pair_sum
    _horner = _np_horner
    _digamma = _np_digamma


# ---------------------------------------------------------------- public API


def power_sum(s: float, a: float, n: int, step: float = 1.0) -> float:
    """Compensated ``sum_{k<n} (a + step*k)**(-s)``."""
    if n <= 0:
        return 0.0
    return float(_power_sum(float(s), float(a), float(step), int(n)))


def alt_pair_sum(s: float, u0: float, n: int) -> float:
    """Compensated ``sum_{m<n} (4m+u0)**(-s) - (4m+u0+2)**(-s)``."""
    if n <= 0:
        return 0.0
    return float(_alt_pair_sum(float(s), float(u0), int(n)))


def log_power_sum(s: float, a: float, n: int, step: float = 1.0) -> float:
    if n <= 0:
        return 0.0
    return float(_log_power_sum(float(s), float(a), float(step), int(n)))


def alt_log_pair_sum(s: float, u0: float, n: int) -> float:
    if n <= 0:
        return 0.0
    return float(_alt_log_pair_sum(float(s), float(u0), int(n)))


def horner(coeffs, t) -> np.ndarray:
    """Evaluate ``sum_j coeffs[j] * t**j`` at every point of ``t``."""
    c = np.ascontiguousarray(coeffs, dtype=np.float64)
    tt = np.ascontiguousarray(np.atleast_1d(t), dtype=np.float64)
    if c.size == 0:
        return np.zeros_like(tt)
    return _horner(c, tt)


def digamma(x) -> np.ndarray:
    """Digamma on an array of positive reals (no domain checks here)."""
    xx = np.ascontiguousarray(np.atleast_1d(x), dtype=np.float64)
    return _digamma(xx, _PSI_ASYMP)


# Reference implementations, always importable regardless of the flag, so the
# benchmark and the backend-agreement tests can compare both paths.
NUMPY_KERNELS = {
    "power_sum": _np_power_sum,
    "alt_pair_sum": _np_alt_pair_sum,
    "log_power_sum": _np_log_power_sum,
    "alt_log_pair_sum": _np_alt_log_pair_sum,
    "horner": _np_horner,
    "digamma": lambda x: _np_digamma(x, _PSI_ASYMP),
}


def numba_kernels() -> dict:
    """Compiled kernels; raises if numba is unavailable."""
    if numba is None:
        raise RuntimeError("numba is not installed")
    jit = numba.njit(cache=True, nogil=True)
    dig = jit(_nb_digamma)
    return {
        "power_sum": jit(_nb_power_sum),
        "alt_pair_sum": jit(_nb_alt_pair_sum),
        "log_power_sum": jit(_nb_log_power_sum),
        "alt_log_pair_sum": jit(_nb_alt_log_pair_sum),
        "horner": jit(_nb_horner),
        "digamma": lambda x: dig(x, _PSI_ASYMP),
    }
