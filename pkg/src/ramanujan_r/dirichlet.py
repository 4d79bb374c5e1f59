"""Real-argument zeta, eta, lambda and beta with rigorous tail bounds.

    zeta(s)   = sum_{k>=1} k^-s
    lambda(x) = sum_{k>=0} (2k+1)^-x
    beta(x)   = sum_{k>=0} (-1)^k (2k+1)^-x
    eta(s)    = (1 - 2^(1-s)) zeta(s)

Each sum is mapped onto ``sum_{k>=0} (k+a)^-s`` (or the paired alternating
analogue) and evaluated by :mod:`ramanujan_r.series`. The ``*_minus_one``
and ``*_k2`` helpers drop the leading terms analytically so that values that
tend to 1 (or to 0) keep full relative accuracy at large arguments.
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np

from . import series
from .errors import DomainError, ParameterError
from .series import SeriesValue

LN2 = math.log(2.0)
LN5 = math.log(5.0)

# log(pi^2/8) / log 3
C1 = math.log(math.pi**2 / 8.0) / math.log(3.0)


def _real(x, name="x") -> float:
    x = float(x)
    if math.isnan(x):
        raise DomainError(f"{name} is NaN")
    return x


def _pow2(s: float) -> float:
    return math.ldexp(1.0, -int(s)) if s == int(s) else 2.0 ** (-s)


def _combine(parts, value: float) -> SeriesValue:
    """Sum of scaled SeriesValues: ``parts`` is a list of (factor, SeriesValue)."""
    bound = sum(abs(c) * p.tail_bound for c, p in parts) + 4.0 * series.EPS * abs(value)
    terms = max(p.terms_used for _, p in parts)
    return SeriesValue(value, bound, terms)


# ------------------------------------------------------------------- zeta


def zeta(s: float, target_abs_err: float | None = None) -> SeriesValue:
    """Riemann zeta for real s > 1.

    ``target_abs_err=None`` requests full working precision.
    """
    s = _real(s, "s")
    if not s > 1.0:
        raise DomainError(f"zeta needs s > 1, got {s}")
    return series.hurwitz(s, 1.0, target_abs_err)


def zeta_minus_one(s: float, target_abs_err: float | None = None) -> SeriesValue:
    """``zeta(s) - 1 = sum_{k>=2} k^-s``."""
    s = _real(s, "s")
    if not s > 1.0:
        raise DomainError(f"zeta needs s > 1, got {s}")
    return series.hurwitz(s, 2.0, target_abs_err)


def eta(s: float) -> float:
    """Dirichlet eta, ``(1 - 2^(1-s)) zeta(s)``, for s > 1."""
    s = _real(s, "s")
    if not s > 1.0:
        raise DomainError(f"eta needs s > 1, got {s}")
    return -math.expm1((1.0 - s) * LN2) * zeta(s).value


# ----------------------------------------------------------------- lambda


def lambda_minus_one(x: float, target_abs_err: float | None = None) -> SeriesValue:
    """``lambda(x) - 1 = sum_{k>=1} (2k+1)^-x``."""
    x = _real(x)
    if not x > 1.0:
        raise DomainError(f"lambda needs x > 1, got {x}")
    scale = _pow2(x)
    inner = series.hurwitz(x, 1.5, None if target_abs_err is None else target_abs_err / scale)
    return inner.scaled(scale)


def lambda_fn(x: float, target_abs_err: float | None = None) -> SeriesValue:
    """Dirichlet lambda for real x > 1."""
    m = lambda_minus_one(x, target_abs_err)
    value = 1.0 + m.value
    return SeriesValue(value, m.tail_bound + series.EPS * value, m.terms_used + 1)


def lambda_k2(x: float, target_abs_err: float | None = None) -> SeriesValue:
    """``sum_{k>=2} (2k+1)^-x``."""
    x = _real(x)
    if not x > 1.0:
        raise DomainError(f"lambda needs x > 1, got {x}")
    scale = _pow2(x)
    inner = series.hurwitz(x, 2.5, None if target_abs_err is None else target_abs_err / scale)
    return inner.scaled(scale)


# ------------------------------------------------------------------- beta


def beta_fn(x: float, target_abs_err: float | None = None) -> SeriesValue:
    """Dirichlet beta for real x >= 1 (paired-term summation)."""
    x = _real(x)
    if not x >= 1.0:
        raise DomainError(f"beta needs x >= 1, got {x}")
    return series.alternating_pairs(x, 1.0, target_abs_err)


def beta_k2(x: float, target_abs_err: float | None = None) -> SeriesValue:
    """``sum_{k>=2} (-1)^k (2k+1)^-x``."""
    x = _real(x)
    if not x >= 1.0:
        raise DomainError(f"beta needs x >= 1, got {x}")
    return series.alternating_pairs(x, 5.0, target_abs_err)


def beta_minus_one(x: float, target_abs_err: float | None = None) -> SeriesValue:
    """``beta(x) - 1``."""
    t = beta_k2(x, target_abs_err)
    value = t.value - 3.0 ** (-x)
    return _combine([(1.0, t)], value)


# ------------------------------------------------------------ derivatives


def dirichlet_derivative(kind: str, x: float, target_abs_err: float | None = None) -> SeriesValue:
    """Derivative in x of lambda or beta from the term-wise differentiated series.

    ``lambda'(x) = -sum log(2k+1) (2k+1)^-x`` and
    ``beta'(x) = -sum (-1)^k log(2k+1) (2k+1)^-x``.
    """
    x = _real(x)
    if kind == "lambda":
        if not x > 1.0:
            raise DomainError(f"lambda needs x > 1, got {x}")
        # log(2k+1) = log 2 + log(k+1/2)
        scale = _pow2(x)
        lam = lambda_fn(x, None if target_abs_err is None else 0.5 * target_abs_err / LN2)
        lh = series.log_hurwitz(x, 0.5, None if target_abs_err is None else 0.5 * target_abs_err / scale)
        value = -LN2 * lam.value - scale * lh.value
        return _combine([(LN2, lam), (scale, lh)], value)
    if kind == "beta":
        if not x >= 1.0:
            raise DomainError(f"beta needs x >= 1, got {x}")
        t = series.alternating_log_pairs(x, 1.0, target_abs_err)
        return SeriesValue(-t.value, t.tail_bound, t.terms_used)
    raise ParameterError(f"kind must be 'lambda' or 'beta', got {kind!r}")


# -------------------------------------------------------------- phi family


def phi3(x: float) -> float:
    """``5 lambda(x+1) - lambda(x-1) - 4 beta(x+1)`` with the k=0,1 terms cancelled exactly."""
    return 5.0 * lambda_k2(x + 1.0).value - lambda_k2(x - 1.0).value - 4.0 * beta_k2(x + 1.0).value


def phi(k: int, x: float, c: float | None = None) -> float:
    """The auxiliary functions phi_1 .. phi_6 built from lambda and beta.

    phi_1(x) = lambda(x) - lambda(x+1)                     x > 1
    phi_2(x) = lambda(x+c) / lambda(x)                     x >= 2, c >= C1
    phi_3(x) = 5 lambda(x+1) - lambda(x-1) - 4 beta(x+1)   x >= 3
    phi_4(x) = (x - 3 + 1/log 5) phi_3(x)
    phi_5(x) = x phi_3(x)
    phi_6(x) = phi_5(x+2) - phi_5(x)
    """
    x = _real(x)
    if k not in (1, 2, 3, 4, 5, 6):
        raise ParameterError(f"phi index must be 1..6, got {k!r}")
    if k == 2:
        if c is None:
            raise ParameterError("phi_2 needs the shift c")
        c = _real(c, "c")
        if not c >= C1:
            raise DomainError(f"phi_2 needs c >= C1 = {C1:.6f}, got {c}")
        if not x >= 2.0:
            raise DomainError(f"phi_2 needs x >= 2, got {x}")
        return lambda_fn(x + c).value / lambda_fn(x).value
    if c is not None:
        raise ParameterError(f"phi_{k} takes no shift parameter")
    if k == 1:
        if not x > 1.0:
            raise DomainError(f"phi_1 needs x > 1, got {x}")
        return lambda_minus_one(x).value - lambda_minus_one(x + 1.0).value
    if not x >= 3.0:
        raise DomainError(f"phi_{k} needs x >= 3, got {x}")
    if k == 3:
        return phi3(x)
    if k == 4:
        return (x - 3.0 + 1.0 / LN5) * phi3(x)
    if k == 5:
        return x * phi3(x)
    return (x + 2.0) * phi3(x + 2.0) - x * phi3(x)


def C2(c: float) -> float:
    """Lower image endpoint ``8 lambda(2+c) / pi^2`` of phi_2, a function of the shift c."""
    c = _real(c, "c")
    if not c >= C1:
        raise DomainError(f"c must be >= C1 = {C1:.6f}")
    return 8.0 * lambda_fn(2.0 + c).value / math.pi**2


# ------------------------------------------------------ integer-argument tables


@lru_cache(maxsize=None)
def _integer_table(kind: str, smax: int) -> np.ndarray:
    out = np.full(smax + 1, np.nan)
    fn = {"zeta_m1": zeta_minus_one, "lambda_m1": lambda_minus_one, "beta_m1": beta_minus_one,
          "lambda_k2": lambda_k2, "beta_k2": beta_k2}[kind]
    lo = 1 if kind.startswith("beta") else 2
    for s in range(lo, smax + 1):
        out[s] = fn(float(s)).value
    out.setflags(write=False)
    return out


def integer_table(kind: str, smax: int) -> np.ndarray:
    """Read-only array ``t[s]`` of a Dirichlet helper at integer s <= smax.

    ``kind`` is one of zeta_m1, lambda_m1, beta_m1, lambda_k2, beta_k2;
    entries below the domain are NaN.
    """
    return _integer_table(kind, int(smax))
