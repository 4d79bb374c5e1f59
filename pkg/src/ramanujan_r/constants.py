"""Named scalars, and the registry of published decimal values they are checked against.

Published digits are truncated, not rounded, so a value "matches" when it lies
within one unit of the last printed digit (see :func:`printed_tolerance`).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal
from functools import lru_cache
from typing import Callable

from . import analysis, coefficients, dirichlet, ramanujan
from .bounds import DELTA_HI, DELTA_LO
from .polygamma import EULER_GAMMA

PI = math.pi


@dataclass(frozen=True)
class PaperConstants:
    """Every named scalar used by the bounds and the analysis.

    ``C2_at_c`` is a function: the upper end of the range of
    lambda(x + c)/lambda(x) depends on c. The constants omega = 6305/2187 and
    mu = 65/108 that only appear inside proofs are not stored.
    """

    gamma: float
    b0: float
    rho: float
    mu1: float
    mu2: float
    mu3: float
    mu4: float
    C1: float
    C2_at_c: Callable[[float], float]
    d_lower: float
    d_tilde: float
    delta_lo: float
    delta_hi: float


@lru_cache(maxsize=1)
def paper_constants() -> PaperConstants:
    tbl = coefficients.default_table()
    b = tbl.b
    b0 = 5.0 * math.log(2.0) - PI
    mu1 = dirichlet.phi(3, 3.0)
    pi2_8 = PI * PI / 8.0
    lam4 = PI**4 / 96.0
    return PaperConstants(
        gamma=EULER_GAMMA,
        b0=b0,
        rho=0.8 * b0,
        mu1=mu1,
        mu2=mu1 / dirichlet.LN5,
        mu3=3.0 * mu1,
        mu4=dirichlet.phi(6, 3.0),
        C1=dirichlet.C1,
        C2_at_c=dirichlet.C2,
        d_lower=(1.0 - pi2_8) * (b[0] + b[1]) + pi2_8,
        d_tilde=tbl.d[3] - (lam4 - 1.0) * b[2] - (pi2_8 - 1.0) * b[3],
        delta_lo=DELTA_LO,
        delta_hi=DELTA_HI,
    )


def printed_tolerance(printed: str) -> float:
    """One unit in the last printed digit: '0.324143' -> 1e-6, '7.895e-8' -> 1e-11."""
    exp = Decimal(printed).as_tuple().exponent
    return float(Decimal(1).scaleb(exp))


@dataclass(frozen=True)
class PrintedConstant:
    name: str
    printed: str
    compute: Callable[[], float]
    description: str = ""

    @property
    def printed_value(self) -> float:
        return float(self.printed)

    @property
    def tolerance(self) -> float:
        return printed_tolerance(self.printed)


def _c(kind, n):
    return lambda: coefficients.coeff(kind, n)


def _pc(attr):
    return lambda: getattr(paper_constants(), attr)


def _F0plus():
    b = coefficients.default_table().b
    return b[0] + b[1] - 1.0


REGISTRY: tuple[PrintedConstant, ...] = (
    PrintedConstant("a1", "-2.644934", _c("a", 1), "a_1 = -1 - pi^2/6"),
    PrintedConstant("a2", "2.404113", _c("a", 2)),
    PrintedConstant("a3", "0.510048", _c("a", 3)),
    PrintedConstant("a4", "-0.395066", _c("a", 4)),
    PrintedConstant("b0", "0.324143", _c("b", 0), "b_0 = 5 ln 2 - pi"),
    PrintedConstant("b1", "0.690067", _c("b", 1)),
    PrintedConstant("2b2", "-0.027624", lambda: 2.0 * coefficients.coeff("b", 2)),
    PrintedConstant("c1", "-0.014210", _c("c", 1)),
    PrintedConstant("c2", "-0.000398", _c("c", 2)),
    PrintedConstant("d0", "-0.290171", _c("d", 0)),
    PrintedConstant("d1", "1.207861", _c("d", 1)),
    PrintedConstant("d2", "1.008920", _c("d", 2)),
    PrintedConstant("d3", "1.000824", _c("d", 3)),
    PrintedConstant("d", "0.996679", _pc("d_lower"), "lower bound of d_n, n >= 3"),
    PrintedConstant("d_tilde", "1.001117", _pc("d_tilde"), "upper bound of d_n, n >= 3"),
    PrintedConstant("D0", "-1.7750006", _c("D", 0)),
    PrintedConstant("D1", "5.639413", _c("D", 1)),
    PrintedConstant("D2", "3.850551", _c("D", 2)),
    PrintedConstant("D3", "3.995587", _c("D", 3)),
    PrintedConstant("mu1", "-0.116088", _pc("mu1"), "phi_3(3)"),
    PrintedConstant("mu2", "-0.072129", _pc("mu2"), "mu1 / ln 5"),
    PrintedConstant("mu3", "-0.348265", _pc("mu3"), "3 mu1"),
    PrintedConstant("mu4", "0.337348", _pc("mu4"), "phi_6(3)"),
    PrintedConstant("R(1/4)", "4.158883", lambda: ramanujan.R_eval(0.25).value),
    PrintedConstant("R'(1/4)", "-14.655449", lambda: ramanujan.R_derivative(1, 0.25), "-16 beta(2)"),
    PrintedConstant("rho", "0.259314", _pc("rho"), "4 b0 / 5"),
    PrintedConstant("F1(1/2)", "1.103178", lambda: analysis.F_eval(1, 0.5)),
    PrintedConstant("F2(1/2)", "0.082542", lambda: analysis.F_eval(2, 0.5)),
    PrintedConstant("F(0+)", "0.0142104", _F0plus, "b0 + b1 - 1"),
    PrintedConstant("H(1/4)", "0.095698", lambda: analysis.H_eval(0.25)),
    PrintedConstant("F2''(1/2)", "0.723202", analysis.F2_second_derivative_half, "-32 D0 / (25 pi)"),
    PrintedConstant("h9(0.276937)", "7.895e-8", lambda: analysis.h9_eval(0.276937)),
    PrintedConstant("h9(0.276938)", "-1.37425e-6", lambda: analysis.h9_eval(0.276938)),
)


def registry_by_name() -> dict[str, PrintedConstant]:
    return {c.name: c for c in REGISTRY}
