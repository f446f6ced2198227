"""The three bound families that trap the factorial interpolant on (0, 1).

Each justification contributes a lower/upper pair ``a(t) <= f(t) <= b(t)``:

    J1:  (t/2)**(t/2)   <=  f(t)  <=  2**(t**2)
    J2:  ((t+1)/2)**t   <=  f(t)  <=  1
    J3:  1/(1+t)        <=  f(t)  <=  1

J1 descends from the integer chain (n/2)**(n/2) <= n! <= n**n <= 2**(n**2),
J2 from the geometric-mean/arithmetic-mean inequality applied to {1..n}
(note the sides swap when moving from integers n >= 1 to t in (0, 1)), and
J3 from moment bounds on a unit-rate exponential variable.  Integer-domain
ancestors are verified here in log space so the chains can be checked to
n = 170 without overflowing anything.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable

import numpy as np

from .gamma import log_factorial
from .quadrature import QuadratureSpec, adaptive_simpson

MAX_CHAIN_N = 170  # past this, n**2 * ln 2 terms leave the comfortable double range


class Justification(Enum):
    J1 = 1
    J2 = 2
    J3 = 3


@dataclass(frozen=True)
class BoundPair:
    """A justification's bound functions on the open unit interval.

    ``sides_swapped_on_unit_interval`` records that the J2 pair trades places
    relative to its integer ancestor 1 <= n! <= ((n+1)/2)**n: on (0, 1) the
    mean-power expression becomes the lower bound and 1 the upper.
    """

    justification: Justification
    lower: Callable[[float], float]
    upper: Callable[[float], float]
    sides_swapped_on_unit_interval: bool


@dataclass(frozen=True)
class SlackCheck:
    ok: bool
    slack: float


@dataclass(frozen=True)
class ChainLink:
    name: str
    log_lhs: float
    log_rhs: float

    @property
    def slack(self) -> float:
        return self.log_rhs - self.log_lhs

    @property
    def holds(self) -> bool:
        return self.slack >= 0.0


@dataclass(frozen=True)
class ChainCheckResult:
    n: int
    justification: Justification
    links: tuple[ChainLink, ...]

    @property
    def holds(self) -> bool:
        return all(link.holds for link in self.links)


def _require_open_lower(t):
    if np.any(np.asarray(t) <= 0.0) or np.any(np.asarray(t) > 1.0):
        raise ValueError(f"argument must lie in (0, 1], got {t}")
    return t


def _require_closed(t):
    if np.any(np.asarray(t) < 0.0) or np.any(np.asarray(t) > 1.0):
        raise ValueError(f"argument must lie in [0, 1], got {t}")
    return t


def j1_lower(t):
    """(t/2)**(t/2) on (0, 1]; the t -> 0 limit of 1 is left to the squeeze."""
    t = _require_open_lower(t)
    half = np.multiply(t, 0.5)
    return np.exp(half * np.log(half))


def j1_upper(t):
    """2**(t**2) on [0, 1]."""
    t = _require_closed(t)
    return np.exp(np.multiply(t, t) * math.log(2.0))


def j2_lower(t):
    """((t+1)/2)**t on [0, 1]; equals 1 at both endpoints."""
    t = _require_closed(t)
    return np.exp(np.multiply(t, np.log(np.add(t, 1.0) / 2.0)))


def j2_upper(t):
    """Constant 1: the mean-power side swaps below n = 1."""
    t = _require_closed(t)
    return np.ones_like(np.asarray(t, dtype=float)) if np.ndim(t) else 1.0


def j3_lower(t):
    """1/(1+t) on [0, 1], the linearised survival-integral bound."""
    t = _require_closed(t)
    return 1.0 / np.add(1.0, t)


def j3_upper(t):
    """Constant 1, from concavity of x**t (Jensen)."""
    return j2_upper(t)


_PAIRS = {
    Justification.J1: BoundPair(Justification.J1, j1_lower, j1_upper, False),
    Justification.J2: BoundPair(Justification.J2, j2_lower, j2_upper, True),
    Justification.J3: BoundPair(Justification.J3, j3_lower, j3_upper, False),
}


def bound_pair(justification: Justification) -> BoundPair:
    return _PAIRS[justification]


def _check_chain_n(n: int) -> int:
    if not 1 <= n <= MAX_CHAIN_N:
        raise ValueError(f"integer chains are stated for 1 <= n <= {MAX_CHAIN_N}, got {n}")
    return n


def _log_integer_moment(n: int, rel_tolerance: float = 1e-10) -> float:
    """log of the n-th moment of a unit exponential, by direct quadrature.

    Integrates exp(n*ln x - x - c) with c = n*ln n - n (the log of the
    integrand's peak), confining the window to where the scaled integrand is
    above roughly 1e-25, so the check reaches n = 170 without overflow.
    """
    if n == 0:
        return 0.0
    c = n * math.log(n) - n
    width = 12.0 * math.sqrt(n)
    lo = max(0.0, n - width - 20.0)
    hi = n + width + 30.0

    def scaled(x: np.ndarray) -> np.ndarray:
        out = np.zeros_like(x)
        pos = x > 0.0
        out[pos] = np.exp(n * np.log(x[pos]) - x[pos] - c)
        return out

    # scaled integral is ~ sqrt(2*pi*n); convert the relative target
    abs_tol = rel_tolerance * math.sqrt(2.0 * math.pi * n)
    value, _ = adaptive_simpson(scaled, lo, hi, abs_tolerance=abs_tol, vectorized=True)
    return c + math.log(value)


def integer_chain_check(
    n: int,
    justification: Justification,
    spec: QuadratureSpec | None = None,
) -> ChainCheckResult:
    """Verify a justification's integer-domain inequality chain at ``n``.

    J1 checks every link of (n/2)**(n/2) <= n! <= n**n <= 2**(n**2), J2 checks
    1 <= n! <= ((n+1)/2)**n, and J3 checks that the quadrature moment at the
    integer reproduces n! to 1e-8 relative.  Everything is compared in log
    space.
    """
    n = _check_chain_n(n)
    lf = log_factorial(n)
    if justification is Justification.J1:
        links = (
            ChainLink("(n/2)^(n/2) <= n!", (n / 2.0) * math.log(n / 2.0), lf),
            ChainLink("n! <= n^n", lf, n * math.log(n)),
            ChainLink("n^n <= 2^(n^2)", n * math.log(n), n * n * math.log(2.0)),
        )
    elif justification is Justification.J2:
        links = (
            ChainLink("1 <= n!", 0.0, lf),
            ChainLink("n! <= ((n+1)/2)^n", lf, n * math.log((n + 1) / 2.0)),
        )
    else:
        rel = 1e-10 if spec is None else spec.abs_tolerance
        log_moment = _log_integer_moment(n, rel_tolerance=max(rel, 1e-12))
        gap = abs(math.expm1(log_moment - lf))
        links = (ChainLink("|moment/n! - 1| <= 1e-8", gap, 1e-8),)
    return ChainCheckResult(n=n, justification=justification, links=links)


def gm_am_check(n: int) -> SlackCheck:
    """Geometric mean of {1..n} never exceeds the arithmetic mean (n+1)/2.

    Returns the log-domain slack ln((n+1)/2) - ln(n!)/n, zero exactly at
    n = 1 where the set is a singleton.
    """
    if n < 1:
        raise ValueError(f"mean comparison needs n >= 1, got {n}")
    slack = math.log((n + 1) / 2.0) - log_factorial(n) / n
    return SlackCheck(ok=slack >= 0.0, slack=slack)


def doubling_dominates(n: int) -> bool:
    """Elementary premise behind the J1 upper bound: n < 2**n (exact integers)."""
    if n < 1:
        raise ValueError(f"premise is checked for n >= 1, got {n}")
    return n < 2**n
