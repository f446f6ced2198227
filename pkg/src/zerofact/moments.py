"""Fractional moments of a unit-rate exponential variable, three ways.

For X ~ Exp(1) the t-th moment E[X**t] equals the factorial interpolant at
t, and this module computes it by three mutually independent routes:

  * ``moment_quadrature``    - the defining integral of x**t * exp(-x);
  * ``moment_survival_form`` - the survival identity E[X**t] as the integral
                               of exp(-x**(1/t)) over x >= 0;
  * ``moment_monte_carlo``   - the sample mean of X_i**t with X_i = -ln U_i.

The survival display is treated as a claim to verify against the direct
integral, not as something to assume.  The module also checks the two
elementary facts behind the third bound family: Jensen's inequality for the
concave map x -> x**t (upper bound 1) and the tangent-line inequality
exp(-u) >= 1 - u (which linearises the survival integrand into the lower
bound 1/(1+t)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

from .bounds import SlackCheck
from .gamma import gamma_plus_one_quadrature
from .quadrature import QuadratureSpec, adaptive_simpson
from .rng import exponential_unit

SURVIVAL_ROUTE_TOLERANCE = 1e-6  # contract: survival and direct routes agree this well

MomentRoute = Literal["quadrature", "survival_form", "monte_carlo"]


@dataclass(frozen=True)
class ExponentialModel:
    """The fixed reference distribution: rate 1, hence mean 1."""

    rate: float = 1.0

    def __post_init__(self) -> None:
        if self.rate != 1.0:
            raise ValueError("only the unit-rate exponential is modelled here")

    @property
    def mean(self) -> float:
        return 1.0


@dataclass(frozen=True)
class McSpec:
    """Monte Carlo sample budget and seed; results are bit-reproducible."""

    sample_count: int = 1_000_000
    seed: int = 0

    def __post_init__(self) -> None:
        if self.sample_count < 1000:
            raise ValueError(f"sample_count must be at least 1000, got {self.sample_count}")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must fit an unsigned 64-bit word")


@dataclass(frozen=True)
class MomentResult:
    value: float
    route: MomentRoute
    uncertainty: float


@dataclass(frozen=True)
class MomentBoundsCheck:
    ok: bool
    lower_slack: float
    upper_slack: float
    power_integral_deviation: float


def exp_pdf(x: float) -> float:
    """Density exp(-x) of the unit-rate exponential, for x > 0."""
    if x <= 0.0:
        raise ValueError(f"density is supported on x > 0, got {x}")
    return math.exp(-x)


def _check_param(t: float, lower_open: bool = False) -> float:
    t = float(t)
    lo_ok = t > 0.0 if lower_open else t >= 0.0
    if not (lo_ok and t <= 1.0):
        interval = "(0, 1]" if lower_open else "[0, 1]"
        raise ValueError(f"moment order must lie in {interval}, got {t}")
    return t


def moment_quadrature(t: float, spec: QuadratureSpec | None = None) -> MomentResult:
    """E[X**t] as the direct integral of x**t * exp(-x)."""
    t = _check_param(t)
    res = gamma_plus_one_quadrature(t, spec)
    return MomentResult(value=res.value, route="quadrature", uncertainty=res.error_estimate)


def moment_survival_form(t: float, spec: QuadratureSpec | None = None) -> MomentResult:
    """E[X**t] via the survival identity: integral of exp(-x**(1/t)).

    The integrand decays super-exponentially for t < 1, so truncation happens
    where the inner power reaches ``upper_truncation``; the discarded tail is
    at most exp(-upper_truncation).
    """
    t = _check_param(t, lower_open=True)
    if spec is None:
        spec = QuadratureSpec()
    inv = 1.0 / t
    cutoff = spec.upper_truncation**t

    def integrand(x: np.ndarray) -> np.ndarray:
        return np.exp(-(x**inv))

    value, err = adaptive_simpson(
        integrand,
        0.0,
        cutoff,
        abs_tolerance=spec.abs_tolerance,
        max_depth=spec.max_depth,
        vectorized=True,
    )
    tail = t * spec.upper_truncation ** (t - 1.0) * math.exp(-spec.upper_truncation)
    return MomentResult(value=value, route="survival_form", uncertainty=err + tail)


def moment_monte_carlo(t: float, spec: McSpec | None = None) -> MomentResult:
    """E[X**t] as a sample mean over inverse-CDF exponential draws."""
    t = _check_param(t)
    if spec is None:
        spec = McSpec()
    draws = exponential_unit(spec.seed, spec.sample_count) ** t
    value = float(np.mean(draws))
    stderr = float(np.std(draws, ddof=1) / math.sqrt(spec.sample_count))
    return MomentResult(value=value, route="monte_carlo", uncertainty=stderr)


def jensen_check(t: float) -> SlackCheck:
    """E[X**t] <= mean**t = 1 for the concave power map; slack vanishes at 1."""
    t = _check_param(t, lower_open=True)
    slack = 1.0 - moment_quadrature(t).value
    return SlackCheck(ok=slack >= -1e-12, slack=slack)


def linear_lower_check(theta: float) -> SlackCheck:
    """Tangent-line inequality exp(-theta) >= 1 - theta for theta >= 0."""
    if theta < 0.0:
        raise ValueError(f"inequality is stated for theta >= 0, got {theta}")
    slack = math.expm1(-theta) + theta  # exp(-theta) - (1 - theta), cancellation-free
    return SlackCheck(ok=slack >= 0.0, slack=slack)


def moment_bounds_check(t: float, spec: QuadratureSpec | None = None) -> MomentBoundsCheck:
    """1/(1+t) <= E[X**t] <= 1, plus the antiderivative step behind the 1/(1+t).

    The lower bound rests on the identity
    ``integral of x**(1/t) over [0, 1] = t/(1+t)``, which is re-verified here
    by direct quadrature to 1e-10.
    """
    t = _check_param(t, lower_open=True)
    if t >= 1.0:
        raise ValueError("bounds are strict only on the open interval (0, 1)")
    value = moment_quadrature(t, spec).value
    lower_slack = value - 1.0 / (1.0 + t)
    upper_slack = 1.0 - value

    inv = 1.0 / t
    integral, _ = adaptive_simpson(
        lambda x: x**inv, 0.0, 1.0, abs_tolerance=1e-12, vectorized=True
    )
    deviation = abs(integral - t / (1.0 + t))

    ok = lower_slack >= -1e-12 and upper_slack >= -1e-12 and deviation <= 1e-10
    return MomentBoundsCheck(
        ok=ok,
        lower_slack=lower_slack,
        upper_slack=upper_slack,
        power_integral_deviation=deviation,
    )
