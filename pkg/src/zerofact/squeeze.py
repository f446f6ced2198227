"""Sandwich certification and the limit argument at the left endpoint.

``certify`` checks a(t) <= gamma(1+t) <= b(t) for one bound pair on a dense
grid strictly inside (0, 1), then hunts the minimum of each slack function
(golden-section bisection, bracket narrowed to 1e-6 in t) so the report
quantifies how close the sandwich comes to violation.  All six slack
functions attain their infima at the open endpoints, so the refined minima
are tiny but must stay positive.

``limit_at_zero`` operationalises "t -> 0 from the right" as evaluation along
the dyadic sequence t_k = 2**-k followed by Richardson extrapolation with
ratio 2.  The most-converged diagonal entry is reported (Ridders-style
selection), which keeps the estimate stable once the samples hit the
floating-point noise floor.  ``squeeze_conclusion`` combines both: zero
violations plus a common bound limit of 1 is the toolkit's formal statement
that the interpolant is forced to 1 at zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Literal

import numpy as np

from .bounds import Justification, bound_pair
from .gamma import gamma_plus_one_series_values

SLACK_TOLERANCE = 1e-12  # absorbs rounding at exact-equality boundary points
CONVERGENCE_TOLERANCE = 1e-9  # successive extrapolants must agree this well
LAST_SAMPLE_TOLERANCE = 1e-6  # deepest raw sample must be this close to the limit
_REFINE_XTOL = 1e-6
_EDGE_MARGIN = 1e-9
# Ratio-2 extrapolation weights.  Each scale 2**-mk is repeated m+1 times so
# that terms of the form t**m * ln(t)**p, p <= m, are eliminated exactly; the
# bound functions carry such logarithmic corrections (e.g. (t/2)**(t/2) has a
# leading t*ln t term), and plain power weights would stall on them.
_TABLE_WEIGHTS = (2.0, 2.0, 4.0, 4.0, 4.0, 8.0, 8.0, 8.0, 8.0)

_INV_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


class SqueezeInconsistencyError(RuntimeError):
    """A certified sandwich failed to deliver a common limit of 1."""


@dataclass(frozen=True)
class GridSpec:
    """Grid of evaluation points strictly inside (0, 1)."""

    points: int = 10001
    spacing: Literal["uniform", "geometric"] = "uniform"
    excludes_endpoints: bool = True

    def __post_init__(self) -> None:
        if self.points < 3:
            raise ValueError(f"grid needs at least 3 points, got {self.points}")
        if self.spacing not in ("uniform", "geometric"):
            raise ValueError(f"unknown spacing {self.spacing!r}")
        if not self.excludes_endpoints:
            raise ValueError("grids on the open interval cannot include endpoints")

    def values(self) -> np.ndarray:
        if self.spacing == "uniform":
            return np.arange(1, self.points + 1) / (self.points + 1)
        # geometric spacing resolves the approach to 0, where the action is
        return np.geomspace(2.0**-40, self.points / (self.points + 1), self.points)


@dataclass(frozen=True)
class CertificationReport:
    justification: Justification
    grid: GridSpec
    violations: tuple[tuple[float, float, float], ...]
    min_lower_slack: tuple[float, float]  # (slack value, argmin t)
    min_upper_slack: tuple[float, float]
    max_lower_slack: tuple[float, float]  # widest point of the sandwich side
    max_upper_slack: tuple[float, float]
    refined: bool

    @property
    def certified(self) -> bool:
        return not self.violations


@dataclass(frozen=True)
class LimitEstimate:
    sample_points: tuple[tuple[float, float], ...]
    estimated_limit: float
    estimated_slope: float
    converged: bool


def _golden_min(
    f: Callable[[float], float], lo: float, hi: float, xtol: float = _REFINE_XTOL
) -> tuple[float, float]:
    """Golden-section minimisation; returns the best point ever evaluated."""
    x1 = hi - _INV_GOLDEN * (hi - lo)
    x2 = lo + _INV_GOLDEN * (hi - lo)
    f1, f2 = f(x1), f(x2)
    best_x, best_f = (x1, f1) if f1 <= f2 else (x2, f2)
    while hi - lo > xtol:
        if f1 <= f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - _INV_GOLDEN * (hi - lo)
            f1 = f(x1)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + _INV_GOLDEN * (hi - lo)
            f2 = f(x2)
        if f1 < best_f:
            best_x, best_f = x1, f1
        if f2 < best_f:
            best_x, best_f = x2, f2
    return best_x, best_f


def _gamma_scalar(t: float) -> float:
    return float(gamma_plus_one_series_values(np.array([t]))[0])


def certify(
    justification: Justification,
    grid: GridSpec | None = None,
    slack_tolerance: float = SLACK_TOLERANCE,
) -> CertificationReport:
    """Certify the sandwich for one justification on a grid, with refinement."""
    if grid is None:
        grid = GridSpec()
    pair = bound_pair(justification)
    ts = grid.values()
    gamma_vals = gamma_plus_one_series_values(ts)
    lower_slack = gamma_vals - np.asarray(pair.lower(ts), dtype=float)
    upper_slack = np.asarray(pair.upper(ts), dtype=float) - gamma_vals

    bad = (lower_slack < -slack_tolerance) | (upper_slack < -slack_tolerance)
    violations = tuple(
        (float(t), float(ls), float(us))
        for t, ls, us in zip(ts[bad], lower_slack[bad], upper_slack[bad])
    )

    def refine(slacks: np.ndarray, slack_fn: Callable[[float], float]) -> tuple[float, float]:
        i = int(np.argmin(slacks))  # first occurrence = smallest t on a tie
        lo = ts[i - 1] if i > 0 else _EDGE_MARGIN
        hi = ts[i + 1] if i + 1 < ts.size else 1.0 - _EDGE_MARGIN
        t_ref, s_ref = _golden_min(slack_fn, float(lo), float(hi))
        if s_ref < slacks[i]:
            return float(s_ref), float(t_ref)
        return float(slacks[i]), float(ts[i])

    min_lower = refine(lower_slack, lambda t: _gamma_scalar(t) - float(pair.lower(t)))
    min_upper = refine(upper_slack, lambda t: float(pair.upper(t)) - _gamma_scalar(t))

    i_lo = int(np.argmax(lower_slack))
    i_up = int(np.argmax(upper_slack))
    return CertificationReport(
        justification=justification,
        grid=grid,
        violations=violations,
        min_lower_slack=min_lower,
        min_upper_slack=min_upper,
        max_lower_slack=(float(lower_slack[i_lo]), float(ts[i_lo])),
        max_upper_slack=(float(upper_slack[i_up]), float(ts[i_up])),
        refined=True,
    )


def _extrapolation_table(values: list[float]) -> list[float]:
    """Diagonal of the ratio-2 Richardson table over a halving sequence."""
    rows: list[list[float]] = []
    diagonal: list[float] = []
    for i, v in enumerate(values):
        row = [v]
        for j in range(1, min(i, len(_TABLE_WEIGHTS)) + 1):
            weight = _TABLE_WEIGHTS[j - 1]
            row.append((weight * row[j - 1] - rows[i - 1][j - 1]) / (weight - 1.0))
        rows.append(row)
        diagonal.append(row[-1])
    return diagonal


def _most_converged(diagonal: list[float]) -> tuple[float, float]:
    """Entry with the smallest successive change, and that change."""
    best_value, best_gap = diagonal[-1], math.inf
    for prev, cur in zip(diagonal, diagonal[1:]):
        gap = abs(cur - prev)
        if gap < best_gap:
            best_value, best_gap = cur, gap
    return best_value, best_gap


def limit_at_zero(f: Callable[[float], float], k_max: int = 30) -> LimitEstimate:
    """Estimate lim f(t) as t -> 0+ along t_k = 2**-k, k = 1..k_max."""
    if not 10 <= k_max <= 50:
        raise ValueError(f"k_max must lie in [10, 50], got {k_max}")
    samples: list[tuple[float, float]] = []
    for k in range(1, k_max + 1):
        t = 2.0**-k
        try:
            samples.append((t, float(f(t))))
        except Exception as exc:
            raise RuntimeError(f"limit target failed at k={k}, t={t}") from exc

    values = [v for _, v in samples]
    limit, limit_gap = _most_converged(_extrapolation_table(values))

    slopes = [
        (values[i] - values[i + 1]) / (samples[i][0] - samples[i + 1][0])
        for i in range(len(values) - 1)
    ]
    slope, _ = _most_converged(_extrapolation_table(slopes))

    converged = (
        limit_gap < CONVERGENCE_TOLERANCE
        and abs(values[-1] - limit) < LAST_SAMPLE_TOLERANCE
    )
    return LimitEstimate(
        sample_points=tuple(samples),
        estimated_limit=limit,
        estimated_slope=slope,
        converged=converged,
    )


def gap_profile(
    justification: Justification, grid: GridSpec | None = None
) -> list[tuple[float, float]]:
    """Pointwise width b(t) - a(t) of the sandwich; vanishes toward 0."""
    if grid is None:
        grid = GridSpec()
    pair = bound_pair(justification)
    ts = grid.values()
    gaps = np.asarray(pair.upper(ts), dtype=float) - np.asarray(pair.lower(ts), dtype=float)
    return [(float(t), float(g)) for t, g in zip(ts, gaps)]


def squeeze_conclusion(
    justification: Justification,
    grid: GridSpec | None = None,
    k_max: int = 30,
) -> float:
    """The common limit of both bounds, certified to sandwich the interpolant.

    Raises :class:`SqueezeInconsistencyError` if the sandwich has violations,
    either bound limit fails to converge, the two limits disagree beyond
    1e-9, or the common limit is not 1.  Returns the common limit.
    """
    report = certify(justification, grid)
    if report.violations:
        raise SqueezeInconsistencyError(
            f"{justification.name}: sandwich violated at {len(report.violations)} grid points"
        )
    pair = bound_pair(justification)
    lower_limit = limit_at_zero(lambda t: float(pair.lower(t)), k_max)
    upper_limit = limit_at_zero(lambda t: float(pair.upper(t)), k_max)
    if not (lower_limit.converged and upper_limit.converged):
        raise SqueezeInconsistencyError(f"{justification.name}: bound limits did not converge")
    la, lb = lower_limit.estimated_limit, upper_limit.estimated_limit
    if abs(la - lb) > CONVERGENCE_TOLERANCE:
        raise SqueezeInconsistencyError(
            f"{justification.name}: bound limits disagree ({la} vs {lb})"
        )
    common = 0.5 * (la + lb)
    if abs(common - 1.0) > CONVERGENCE_TOLERANCE:
        raise SqueezeInconsistencyError(
            f"{justification.name}: common bound limit {common} is not 1"
        )
    return common
