"""Independent high-precision references (mpmath), sharing no code with the package.

Series coefficients are recovered as Cauchy integrals (trapezoid rule on a
circle, which is spectrally accurate for analytic integrands) of f, H and H3
built from the complex digamma, not from any zeta-value formula.
"""

from functools import lru_cache

import mpmath as mp

DPS = 40
_M = 128  # nodes on the circle
_RADIUS = mp.mpf("0.5")


def _ctx(fn):
    def wrapped(*args, **kw):
        with mp.workdps(DPS):
            return fn(*args, **kw)

    wrapped.__name__ = fn.__name__
    return wrapped


@_ctx
def R(x):
    x = mp.mpf(x)
    return -2 * mp.euler - mp.digamma(x) - mp.digamma(1 - x)


@_ctx
def R_prime(n, x):
    x = mp.mpf(x)
    return (-1) ** (n + 1) * mp.psi(n, 1 - x) - mp.psi(n, x)


def _f(z):
    den = 1 + z * (1 - z)
    return den * (-2 * mp.euler - mp.digamma(z) - mp.digamma(1 - z)) - mp.pi / mp.sin(mp.pi * z)


def _fprime(z):
    r = -2 * mp.euler - mp.digamma(z) - mp.digamma(1 - z)
    rp = mp.psi(1, 1 - z) - mp.psi(1, z)
    bp = -mp.pi**2 * mp.cos(mp.pi * z) / mp.sin(mp.pi * z) ** 2
    return (1 - 2 * z) * r + (1 + z * (1 - z)) * rp - bp


def _H_of_y(y):
    z = (1 - y) / 2
    return (_fprime(z) + _f(z) * mp.pi * mp.cot(mp.pi * z)) / (4 * y)


def _taylor(fn, count):
    """First ``count`` Taylor coefficients of fn at 0 by the trapezoid rule on |z| = 1/2."""
    vals = []
    for j in range(_M):
        z = _RADIUS * mp.expjpi(mp.mpf(2 * j) / _M)
        vals.append(fn(z))
    out = []
    for n in range(count):
        s = mp.fsum(v * mp.expjpi(-mp.mpf(2 * j * n) / _M) for j, v in enumerate(vals))
        out.append(mp.re(s) / _M / _RADIUS**n)
    return out


@lru_cache(maxsize=None)
@_ctx
def a_coeffs(count=12):
    """f(x) = sum a_n x^n."""
    return tuple(_taylor(_f, count))


@lru_cache(maxsize=None)
@_ctx
def b_coeffs(count=12):
    """f = sum b_n y^(2n), y = 1 - 2x."""
    c = _taylor(lambda y: _f((1 - y) / 2), 2 * count)
    return tuple(c[0::2])


@lru_cache(maxsize=None)
@_ctx
def d_coeffs(count=8):
    """H = sum d_n y^(2n)."""
    c = _taylor(_H_of_y, 2 * count)
    return tuple(c[0::2])


@lru_cache(maxsize=None)
@_ctx
def D_coeffs(count=8):
    """H3 = (5 - y^2) H - f = sum D_n y^(2n)."""
    c = _taylor(lambda y: (5 - y * y) * _H_of_y(y) - _f((1 - y) / 2), 2 * count)
    return tuple(c[0::2])


@_ctx
def A_coeff(n):
    """A_n = 2^(n+1) (f(1/2) - sum_{k<=n} a_k 2^-k), with f(1/2) = 5 log 2 - pi."""
    a = a_coeffs(n + 1)
    b0 = 5 * mp.log(2) - mp.pi
    return 2 ** (n + 1) * (b0 - mp.fsum(a[k] / mp.mpf(2) ** k for k in range(n + 1)))


@_ctx
def c_coeff(n):
    """c_n = sum_{k>n} b_k = 1 - sum_{k<=n} b_k (the b_k sum to f(0+) = 1)."""
    b = b_coeffs(n + 1)
    return 1 - mp.fsum(b[: n + 1])


@_ctx
def f(x):
    return _f(mp.mpf(x))


@_ctx
def zeta(s):
    return mp.zeta(mp.mpf(s))


def _lam(s):
    return (1 - mp.mpf(2) ** -s) * mp.zeta(s)


def _beta(s):
    # direct alternating sum (mpmath accelerates it); valid down to s = 1
    return mp.nsum(lambda k: (-1) ** int(k) * (2 * k + 1) ** -s, [0, mp.inf])


def _beta_prime(s):
    return -mp.nsum(lambda k: (-1) ** int(k) * mp.log(2 * k + 1) * (2 * k + 1) ** -s, [0, mp.inf])


@_ctx
def lam(s):
    return _lam(mp.mpf(s))


@_ctx
def beta(s):
    return _beta(mp.mpf(s))


@_ctx
def lam_prime(s):
    return mp.diff(_lam, mp.mpf(s))


@_ctx
def beta_prime(s):
    return _beta_prime(mp.mpf(s))


@_ctx
def hurwitz(s, a):
    return mp.zeta(mp.mpf(s), mp.mpf(a))


@_ctx
def psi(x):
    return mp.digamma(mp.mpf(x))


@_ctx
def polygamma(n, x):
    return mp.psi(n, mp.mpf(x))


def phi3(x):
    with mp.workdps(DPS):
        x = mp.mpf(x)
        return 5 * lam(x + 1) - lam(x - 1) - 4 * beta(x + 1)


def brute_lambda_prime(s, terms=2_000_000):
    """Direct partial sum of -sum log(2k+1)/(2k+1)^s plus an integral tail (float64)."""
    import numpy as np

    k = 2.0 * np.arange(terms) + 1.0
    head = -np.sum(np.log(k) / k**s)
    K = 2.0 * terms + 1.0
    # int_{K}^inf log(t)/t^s dt/2 with t = 2k+1
    tail = -0.5 * K ** (1 - s) * (np.log(K) / (s - 1) + 1 / (s - 1) ** 2)
    return float(head + tail)
