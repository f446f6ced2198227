"""Figure-data regeneration: bound sandwiches (1-3) and survey bars (4-7).

CSV is the canonical output (byte-identical across invocations; 10
significant digits, '.' decimal separator, LF line endings); SVG renders the
same data with no scripting.  Curve figures carry four series - lower bound,
upper bound, the interpolant, and an illustrative "symbolic" curve - sampled
on t in [0.001, 0.999].  The symbolic curve has no formula of its own; it is
drawn as

    gamma(1+t) + 0.3 * min(gamma - a, b - gamma) * sin(6*pi*t)

which wiggles the interpolant while provably staying inside the sandwich.
Bar figures carry counts and percentages from the embedded survey tables.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path
from typing import Literal

import numpy as np

from .bounds import Justification, bound_pair
from .gamma import gamma_plus_one_series_values
from .survey import CATEGORY_ORDER, StatementTable, embedded_tables, percentages

CURVE_T_MIN = 0.001
CURVE_T_MAX = 0.999
_WIGGLE_SCALE = 0.3
_WIGGLE_CYCLES = 3  # sin(6*pi*t): three full oscillations across the interval

StyleHint = Literal["lower_bound", "upper_bound", "gamma", "symbolic", "bar"]

_CURVE_FIGURES: dict[int, Justification] = {
    1: Justification.J1,
    2: Justification.J2,
    3: Justification.J3,
}
_BAR_FIGURES: dict[int, tuple[str, ...]] = {
    4: ("1a", "2a", "3a"),
    5: ("1b", "2b", "3b"),
    6: ("1c", "2c", "3c"),
    7: ("0", "4"),
}


@dataclass(frozen=True)
class PlotSeries:
    name: str
    samples: tuple[tuple[float, float], ...]
    style_hint: StyleHint

    def __post_init__(self) -> None:
        if not self.samples:
            raise ValueError(f"series {self.name!r} has no samples")


@dataclass(frozen=True)
class FigureSpec:
    figure_id: int
    resolution: int = 512
    output_format: Literal["csv", "svg"] = "csv"

    def __post_init__(self) -> None:
        if self.figure_id not in range(1, 8):
            raise ValueError(f"figure_id must lie in 1..7, got {self.figure_id}")
        if self.resolution < 2:
            raise ValueError(f"resolution must be at least 2, got {self.resolution}")
        if self.output_format not in ("csv", "svg"):
            raise ValueError(f"unknown output format {self.output_format!r}")


def curve_series(justification: Justification, resolution: int = 512) -> list[PlotSeries]:
    """The four curve series of a sandwich figure."""
    pair = bound_pair(justification)
    ts = np.linspace(CURVE_T_MIN, CURVE_T_MAX, resolution)
    lower = np.asarray(pair.lower(ts), dtype=float)
    upper = np.asarray(pair.upper(ts), dtype=float)
    gamma = gamma_plus_one_series_values(ts)
    margin = np.minimum(gamma - lower, upper - gamma)
    symbolic = gamma + _WIGGLE_SCALE * margin * np.sin(2.0 * math.pi * _WIGGLE_CYCLES * ts)

    def series(name: str, values: np.ndarray, hint: StyleHint) -> PlotSeries:
        return PlotSeries(
            name=name,
            samples=tuple((float(t), float(v)) for t, v in zip(ts, values)),
            style_hint=hint,
        )

    return [
        series("a", lower, "lower_bound"),
        series("b", upper, "upper_bound"),
        series("gamma", gamma, "gamma"),
        series("symbolic", symbolic, "symbolic"),
    ]


def bar_rows(figure_id: int) -> list[tuple[str, str, int, float]]:
    """Rows (statement_id, category, count, percentage) of a bar figure."""
    tables = embedded_tables()
    rows = []
    for sid in _BAR_FIGURES[figure_id]:
        table = tables[sid]
        pcts = percentages(table)
        for category, count, pct in zip(CATEGORY_ORDER, table.counts, pcts):
            rows.append((sid, category.label, count, pct))
    return rows


def _fmt(x: float) -> str:
    return format(x, ".10g")


def _curve_csv(justification: Justification, resolution: int) -> str:
    all_series = curve_series(justification, resolution)
    by_name = {s.name: s for s in all_series}
    lines = ["t,a,b,gamma,symbolic"]
    for i in range(resolution):
        t = by_name["a"].samples[i][0]
        row = [t] + [by_name[n].samples[i][1] for n in ("a", "b", "gamma", "symbolic")]
        lines.append(",".join(_fmt(v) for v in row))
    return "\n".join(lines) + "\n"


def _bar_csv(figure_id: int) -> str:
    lines = ["statement_id,category,count,percentage"]
    for sid, label, count, pct in bar_rows(figure_id):
        lines.append(f"{sid},{label},{count},{pct:.2f}")
    return "\n".join(lines) + "\n"


def figure_csv(spec: FigureSpec) -> str:
    if spec.figure_id in _CURVE_FIGURES:
        return _curve_csv(_CURVE_FIGURES[spec.figure_id], spec.resolution)
    return _bar_csv(spec.figure_id)


_SERIES_COLORS = {
    "lower_bound": "#c02020",
    "upper_bound": "#2040c0",
    "gamma": "#000000",
    "symbolic": "#20a040",
}
_BAR_COLORS = ("#c02020", "#2040c0", "#20a040", "#c08020", "#6040a0")
_W, _H, _PAD = 640, 480, 50.0


def _svg_header(title: str) -> list[str]:
    return [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_W}" height="{_H}" '
        f'viewBox="0 0 {_W} {_H}">',
        f'<title>{title}</title>',
        f'<rect x="0" y="0" width="{_W}" height="{_H}" fill="#ffffff"/>',
    ]


def _curve_svg(justification: Justification, resolution: int) -> str:
    all_series = curve_series(justification, resolution)
    ys = [v for s in all_series for _, v in s.samples]
    y_lo, y_hi = min(ys), max(ys)
    span = (y_hi - y_lo) or 1.0
    y_lo -= 0.05 * span
    y_hi += 0.05 * span

    def sx(t: float) -> float:
        return _PAD + (t - CURVE_T_MIN) / (CURVE_T_MAX - CURVE_T_MIN) * (_W - 2 * _PAD)

    def sy(v: float) -> float:
        return _H - _PAD - (v - y_lo) / (y_hi - y_lo) * (_H - 2 * _PAD)

    parts = _svg_header(f"bound sandwich, justification {justification.value}")
    parts.append(
        f'<rect x="{_PAD:.1f}" y="{_PAD:.1f}" width="{_W - 2 * _PAD:.1f}" '
        f'height="{_H - 2 * _PAD:.1f}" fill="none" stroke="#808080"/>'
    )
    for s in all_series:
        points = " ".join(f"{sx(t):.2f},{sy(v):.2f}" for t, v in s.samples)
        parts.append(
            f'<polyline fill="none" stroke="{_SERIES_COLORS[s.style_hint]}" '
            f'stroke-width="1.5" points="{points}"/>'
        )
    for i, s in enumerate(all_series):
        y = _PAD + 16.0 * (i + 1)
        parts.append(
            f'<text x="{_W - _PAD - 90:.1f}" y="{y:.1f}" font-size="12" '
            f'fill="{_SERIES_COLORS[s.style_hint]}">{s.name}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _bar_svg(figure_id: int) -> str:
    rows = bar_rows(figure_id)
    sids = list(dict.fromkeys(sid for sid, *_ in rows))
    max_count = max(count for *_, count, _pct in rows)
    parts = _svg_header(f"survey responses, statements {', '.join(sids)}")
    groups = len(CATEGORY_ORDER)
    group_w = (_W - 2 * _PAD) / groups
    bar_w = group_w / (len(sids) + 1)
    for gi, category in enumerate(CATEGORY_ORDER):
        for si, sid in enumerate(sids):
            count = next(c for s, lab, c, _ in rows if s == sid and lab == category.label)
            h = (count / max_count) * (_H - 2 * _PAD)
            x = _PAD + gi * group_w + (si + 0.5) * bar_w
            y = _H - _PAD - h
            parts.append(
                f'<rect x="{x:.2f}" y="{y:.2f}" width="{bar_w:.2f}" height="{h:.2f}" '
                f'fill="{_BAR_COLORS[si % len(_BAR_COLORS)]}"/>'
            )
        parts.append(
            f'<text x="{_PAD + (gi + 0.5) * group_w:.2f}" y="{_H - _PAD + 16:.1f}" '
            f'font-size="10" text-anchor="middle">{category.label}</text>'
        )
    for si, sid in enumerate(sids):
        y = _PAD + 16.0 * (si + 1)
        parts.append(
            f'<text x="{_W - _PAD - 90:.1f}" y="{y:.1f}" font-size="12" '
            f'fill="{_BAR_COLORS[si % len(_BAR_COLORS)]}">statement {sid}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def figure_svg(spec: FigureSpec) -> str:
    if spec.figure_id in _CURVE_FIGURES:
        return _curve_svg(_CURVE_FIGURES[spec.figure_id], spec.resolution)
    return _bar_svg(spec.figure_id)


def emit_figure(spec: FigureSpec, out_dir: Path | str) -> list[Path]:
    """Write the figure in the requested format; returns the written paths."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    if spec.output_format == "csv":
        content = figure_csv(spec)
    else:
        content = figure_svg(spec)
    path = out_dir / f"figure_{spec.figure_id}.{spec.output_format}"
    path.write_text(content, encoding="utf-8", newline="\n")
    return [path]
