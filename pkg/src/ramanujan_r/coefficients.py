"""The coefficient sequences a_n, b_n, c_n, A_n, d_n, D_n.

    f(x) = sum a_n x^n = sum b_n (1-2x)^(2n),   f = [1 + x(1-x)] R - B

with

    a_0 = 1,  a_1 = -1 - pi^2/6,  a_2 = 2 zeta(3)
    a_{2n+2} = 2[zeta(2n+3) - zeta(2n+1)]
    a_{2n+1} = 2[zeta(2n+1) - (1 - 2^(-2n-1)) zeta(2n+2)]          (n >= 1)
    b_0 = 5 log 2 - pi,  b_1 = 5 lambda(3) - 4 beta(3) - log 2
    b_n = 5 lambda(2n+1) - lambda(2n-1) - 4 beta(2n+1)            (n >= 2)
    c_n = 1 - sum_{k<=n} b_k,   A_n = 2^(n+1) (b_0 - sum_{k<=n} 2^-k a_k)
    d_n = sum_{k<=n} b_k lambda(2n-2k+2) - (n+1) b_{n+1}
    D_0 = 5 d_0 - b_0,  D_n = 5 d_n - d_{n-1} - b_n

Everything is assembled from zeta-1, lambda-1 and the k >= 2 tails of lambda
and beta, so the exponentially small coefficients keep full relative accuracy.
c_n and A_n are built backward from beyond the table end
(``c_n = c_{n+1} + b_{n+1}``, ``A_n = a_{n+1} + A_{n+1}/2``); both recurrences
run in the stable direction, whereas the defining partial sums cancel to
nothing within a few dozen terms.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass, field

import numpy as np

from . import dirichlet
from .errors import ConvergenceError, InvariantError, ParameterError

EPS = 2.0**-53
LN2 = math.log(2.0)

DEFAULT_N = 60
CACHE_N = 80
_A_SEED_PAD = 64
_A_SEED_TERMS = 40
_C_SEED_TERMS = 20

KINDS = ("a", "b", "c", "A", "d", "D")


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr = np.asarray(arr, dtype=np.float64)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class CoefficientTable:
    """Arrays a, b, c, A, d, D indexed 0..N (read-only)."""

    a: np.ndarray
    b: np.ndarray
    c: np.ndarray
    A: np.ndarray
    d: np.ndarray
    D: np.ndarray
    N: int
    # entries past N, kept for series tails and recurrence checks
    a_ext: np.ndarray = field(repr=False)
    b_ext: np.ndarray = field(repr=False)
    lam_even: np.ndarray = field(repr=False)  # lam_even[j] = lambda(2j), j >= 1
    max_entry_error: float = 0.0

    def coeff(self, kind: str, n: int) -> float:
        if kind not in KINDS:
            raise ParameterError(f"unknown coefficient kind {kind!r}; expected one of {KINDS}")
        if int(n) != n or n < 0 or n > self.N:
            raise IndexError(f"{kind}_{n} is outside the table (0..{self.N})")
        return float(getattr(self, kind)[int(n)])


# ---------------------------------------------------------------- builders


def _zeta_parts(smax: int):
    zm1 = np.full(smax + 1, np.nan)
    err = np.zeros(smax + 1)
    for s in range(2, smax + 1):
        v = dirichlet.zeta_minus_one(float(s))
        zm1[s], err[s] = v.value, v.tail_bound
    return zm1, err


def _build_a(M: int, zm1: np.ndarray, zerr: np.ndarray):
    a = np.zeros(M + 1)
    err = np.zeros(M + 1)
    a[0] = 1.0
    a[1] = -1.0 - math.pi**2 / 6.0
    err[1] = 2.0 * EPS * abs(a[1])
    a[2] = 2.0 * (1.0 + zm1[3])
    err[2] = 2.0 * zerr[3] + 2.0 * EPS * a[2]
    for m in range(3, M + 1):
        if m % 2 == 0:
            n = (m - 2) // 2
            a[m] = 2.0 * (zm1[2 * n + 3] - zm1[2 * n + 1])
            err[m] = 2.0 * (zerr[2 * n + 3] + zerr[2 * n + 1]) + 4.0 * EPS * abs(a[m])
        else:
            n = (m - 1) // 2
            half = math.ldexp(1.0, -(2 * n + 1))
            a[m] = 2.0 * (zm1[2 * n + 1] - zm1[2 * n + 2] + half * (1.0 + zm1[2 * n + 2]))
            err[m] = 2.0 * (zerr[2 * n + 1] + 2.0 * zerr[2 * n + 2]) + 8.0 * EPS * (zm1[2 * n + 1] + half)
    return a, err


def a_generic(n: int) -> float:
    """a_n (n >= 3) from the parity-bracket form

    ``[1+(-1)^n][zeta(n+1) - zeta(n-1)] + [1-(-1)^n][zeta(n) - eta(n+1)]``.

    Kept as an independent cross-check of the parity-split construction.
    """
    if n < 3:
        raise ParameterError("the bracket form applies for n >= 3")
    even = 1.0 + (-1.0) ** n
    odd = 1.0 - (-1.0) ** n
    z = lambda s: dirichlet.zeta(float(s)).value  # noqa: E731
    return even * (z(n + 1) - z(n - 1)) + odd * (z(n) - dirichlet.eta(float(n + 1)))


def _build_b(M: int):
    b = np.zeros(M + 1)
    err = np.zeros(M + 1)
    b[0] = 5.0 * LN2 - math.pi
    err[0] = 8.0 * EPS
    l3 = dirichlet.lambda_minus_one(3.0)
    bt3 = dirichlet.beta_minus_one(3.0)
    b[1] = 1.0 + 5.0 * l3.value - 4.0 * bt3.value - LN2
    err[1] = 5.0 * l3.tail_bound + 4.0 * bt3.tail_bound + 8.0 * EPS
    for n in range(2, M + 1):
        p = dirichlet.lambda_k2(2.0 * n + 1.0)
        q = dirichlet.lambda_k2(2.0 * n - 1.0)
        r = dirichlet.beta_k2(2.0 * n + 1.0)
        b[n] = 5.0 * p.value - q.value - 4.0 * r.value
        err[n] = 5.0 * p.tail_bound + q.tail_bound + 4.0 * r.tail_bound + 8.0 * EPS * q.value
    return b, err


def _lambda_even(jmax: int) -> np.ndarray:
    lam = np.full(jmax + 1, np.nan)
    for j in range(1, jmax + 1):
        lam[j] = dirichlet.lambda_fn(2.0 * j).value
    return lam


def build_table(N: int = DEFAULT_N, target_abs_err: float = 1e-14) -> CoefficientTable:
    """Compute every sequence for indices 0..N and check its structural invariants."""
    if int(N) != N or N < 40:
        raise ParameterError(f"N must be an integer >= 40, got {N!r}")
    if not target_abs_err > 0.0:
        raise ParameterError("target_abs_err must be positive")
    N = int(N)

    # a up to M + _A_SEED_TERMS for the backward A recurrence
    M = N + _A_SEED_PAD
    amax = M + _A_SEED_TERMS
    zm1, zerr = _zeta_parts(amax + 2)
    a_ext, a_err = _build_a(amax, zm1, zerr)

    bmax = N + _C_SEED_TERMS
    b_ext, b_err = _build_b(bmax)

    # c_n = sum_{k>n} b_k, summed backward from well past N
    c_ext = np.zeros(bmax + 1)
    c_ext[bmax] = 0.0
    for n in range(bmax - 1, -1, -1):
        c_ext[n] = c_ext[n + 1] + b_ext[n + 1]

    # A_n = sum_{j>=1} 2^(1-j) a_{n+j}
    A_ext = np.zeros(M + 1)
    A_ext[M] = math.fsum(math.ldexp(a_ext[M + j], 1 - j) for j in range(1, _A_SEED_TERMS + 1))
    for n in range(M - 1, -1, -1):
        A_ext[n] = a_ext[n + 1] + 0.5 * A_ext[n + 1]

    lam = _lambda_even(N + 1)
    d = np.zeros(N + 1)
    for n in range(N + 1):
        d[n] = math.fsum([b_ext[k] * lam[n - k + 1] for k in range(n + 1)] + [-(n + 1) * b_ext[n + 1]])
    D = np.zeros(N + 1)
    D[0] = 5.0 * d[0] - b_ext[0]
    for n in range(1, N + 1):
        D[n] = 5.0 * d[n] - d[n - 1] - b_ext[n]

    worst = float(max(a_err[: N + 1].max(), b_err[: N + 1].max()))
    if worst > target_abs_err:
        raise ConvergenceError(f"coefficient error estimate {worst:.3g} exceeds target {target_abs_err:.3g}")

    table = CoefficientTable(
        a=_frozen(a_ext[: N + 1].copy()),
        b=_frozen(b_ext[: N + 1].copy()),
        c=_frozen(c_ext[: N + 1].copy()),
        A=_frozen(A_ext[: N + 1].copy()),
        d=_frozen(d),
        D=_frozen(D),
        N=N,
        a_ext=_frozen(a_ext),
        b_ext=_frozen(b_ext),
        lam_even=_frozen(lam),
        max_entry_error=worst,
    )
    problems = invariant_violations(table)
    if problems:
        raise InvariantError("; ".join(problems))
    return table


# --------------------------------------------------------------- invariants


def recurrence_mismatches(table: CoefficientTable) -> dict:
    """Largest deviation of the forward recurrences, in ulps of the largest operand.

    ``c_{n+1} = c_n - b_{n+1}`` and ``A_{n+1} = 2(A_n - a_{n+1})`` evaluated in
    floating point against the stored values, for n < N. The tables are built
    backward, so the forward identity holds up to the rounding of that one
    backward step: at most one ulp of the operands.
    """
    a, b, c, A = table.a, table.b, table.c, table.A
    out = {}
    for name, lhs, rhs, scale in (
        ("c", c[1:], c[:-1] - b[1:], np.maximum(np.abs(c[:-1]), np.abs(b[1:]))),
        ("A", A[1:], 2.0 * (A[:-1] - a[1:]), 2.0 * np.maximum(np.abs(A[:-1]), np.abs(a[1:]))),
    ):
        out[name] = float(np.max(np.abs(lhs - rhs) / np.spacing(scale)))
    return out


def backward_mismatches(table: CoefficientTable) -> dict:
    """Count of entries where the stored backward construction is not reproduced bit for bit."""
    a, b, c, A = table.a, table.b, table.c, table.A
    return {
        "c": int(np.count_nonzero(c[:-1] != c[1:] + b[1:])),
        "A": int(np.count_nonzero(A[:-1] != a[1:] + 0.5 * A[1:])),
    }


def invariant_violations(table: CoefficientTable) -> list[str]:
    """Structural facts about the sequences; returns a list of failures (empty if all hold)."""
    a, b, A = table.a, table.b, table.A
    N = table.N
    bad = []
    for n in range(1, (N - 2) // 2 + 1):
        if not a[2 * n + 2] < 0.0:
            bad.append(f"a_{2 * n + 2} >= 0")
        if not a[2 * n + 1] > 0.0:
            bad.append(f"a_{2 * n + 1} <= 0")
        if not (a[2 * n + 2] < A[2 * n + 1] < 0.0 < A[2 * n] < a[2 * n + 1]):
            bad.append(f"A chain fails at n={n}")
    tail = b[2:]
    if not np.all(tail < 0.0):
        bad.append("b_n >= 0 for some n >= 2")
    if not np.all(np.diff(tail) > 0.0):
        bad.append("b_n not strictly increasing for n >= 2")
    if max(recurrence_mismatches(table).values()) > 1.0:
        bad.append("forward recurrence off by more than one ulp")
    if any(backward_mismatches(table).values()):
        bad.append("backward construction not reproducible")
    return bad


@dataclass(frozen=True)
class IdentityResiduals:
    """|sum a_k - 1|, |sum b_k - 1|, |sum 2^-k a_k - b_0| over the stored range."""

    sum_a: float
    sum_b: float
    sum_2a: float


def identity_residuals(table: CoefficientTable) -> IdentityResiduals:
    if table.N < 40:
        raise ParameterError("identity residuals need N >= 40")
    a, b = table.a, table.b
    k = np.arange(table.N + 1)
    return IdentityResiduals(
        sum_a=abs(math.fsum(list(a) + [-1.0])),
        sum_b=abs(math.fsum(list(b) + [-1.0])),
        sum_2a=abs(math.fsum(list(np.ldexp(a, -k)) + [-b[0]])),
    )


# ------------------------------------------------------------ shared cache

_cache: dict = {}
_cache_lock = threading.Lock()


def default_table() -> CoefficientTable:
    """The process-wide table of size CACHE_N, built once on first use."""
    tbl = _cache.get("default")
    if tbl is None:
        with _cache_lock:
            tbl = _cache.get("default")
            if tbl is None:
                tbl = build_table(CACHE_N)
                _cache["default"] = tbl
    return tbl


def coeff(kind: str, n: int, table: CoefficientTable | None = None) -> float:
    """Look up a single coefficient (default: the shared cached table)."""
    return (table or default_table()).coeff(kind, n)
