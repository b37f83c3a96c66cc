"""Cumulative group reward chart, fairness on versus off.

The SVG is written by hand so it needs no plotting stack; the PDF variant draws
the same geometry with reportlab graphics.
"""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import List, Sequence, Tuple, Union
from xml.sax.saxutils import escape, quoteattr

from fairmas import constants
from fairmas.engine.types import SimulationResult
from fairmas.errors import ArtifactError


PathLike = Union[str, Path]

WIDTH = 820
HEIGHT = 480
MARGIN_LEFT = 80
MARGIN_RIGHT = 200
MARGIN_TOP = 50
MARGIN_BOTTOM = 60
HEADROOM = 1.05
Y_TICKS = 5
GROUP_COLORS = {"A": "#1f77b4", "B": "#d62728"}
DASH_PATTERN = (6, 4)


@dataclass(frozen=True)
class ChartSeries:
	group: str
	fairness_enabled: bool
	values: Tuple[float, ...]

	@property
	def label(self) -> str:
		return f"Group {self.group} (fairness {'on' if self.fairness_enabled else 'off'})"

	@property
	def dashed(self) -> bool:
		return not self.fairness_enabled


@dataclass(frozen=True)
class ChartGeometry:
	n_rounds: int
	y_max: float

	@property
	def plot_width(self) -> float:
		return WIDTH - MARGIN_LEFT - MARGIN_RIGHT

	@property
	def plot_height(self) -> float:
		return HEIGHT - MARGIN_TOP - MARGIN_BOTTOM

	def x(self, round_number: int) -> float:
		if self.n_rounds == 1:
			return MARGIN_LEFT + self.plot_width / 2
		return MARGIN_LEFT + (round_number - 1) / (self.n_rounds - 1) * self.plot_width

	def height_of(self, value: float) -> float:
		"""Distance above the x axis."""
		return value / self.y_max * self.plot_height


def chart_series(fairness_on: SimulationResult, fairness_off: SimulationResult) -> List[ChartSeries]:
	if fairness_on.config.n_rounds != fairness_off.config.n_rounds or len(fairness_on.rounds) != len(fairness_off.rounds):
		raise ArtifactError(
			"Both results must cover the same number of rounds.",
			evidence=[f"on={len(fairness_on.rounds)}", f"off={len(fairness_off.rounds)}"],
		)
	series = []
	for result, enabled in ((fairness_on, True), (fairness_off, False)):
		for group in constants.GROUP_LABELS:
			values = result.cumulative_by_group_per_round.get(group) or [0.0] * len(result.rounds)
			series.append(ChartSeries(group=group, fairness_enabled=enabled, values=tuple(float(v) for v in values)))
	return series


def chart_geometry(series: Sequence[ChartSeries]) -> ChartGeometry:
	top = max((max(item.values) for item in series if item.values), default=0.0)
	return ChartGeometry(n_rounds=len(series[0].values), y_max=top * HEADROOM if top > 0 else 1.0)


def _fmt(value: float) -> str:
	return f"{value:.2f}"


def build_chart_svg(
	fairness_on: SimulationResult,
	fairness_off: SimulationResult,
	title: str = "Cumulative group reward: fairness on vs off",
) -> str:
	series = chart_series(fairness_on, fairness_off)
	geometry = chart_geometry(series)
	baseline = MARGIN_TOP + geometry.plot_height
	right = MARGIN_LEFT + geometry.plot_width
	parts = [
		'<?xml version="1.0" encoding="UTF-8"?>',
		f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">',
		f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="#ffffff"/>',
		f'<text x="{WIDTH / 2:.1f}" y="28" text-anchor="middle" font-family="sans-serif" font-size="16">{escape(title)}</text>',
		f'<line x1="{MARGIN_LEFT}" y1="{_fmt(baseline)}" x2="{_fmt(right)}" y2="{_fmt(baseline)}" stroke="#000000"/>',
		f'<line x1="{MARGIN_LEFT}" y1="{MARGIN_TOP}" x2="{MARGIN_LEFT}" y2="{_fmt(baseline)}" stroke="#000000"/>',
	]

	for tick in range(Y_TICKS + 1):
		value = geometry.y_max * tick / Y_TICKS
		y = baseline - geometry.height_of(value)
		parts.append(f'<line x1="{MARGIN_LEFT - 4}" y1="{_fmt(y)}" x2="{MARGIN_LEFT}" y2="{_fmt(y)}" stroke="#000000"/>')
		parts.append(
			f'<text x="{MARGIN_LEFT - 8}" y="{_fmt(y + 4)}" text-anchor="end" font-family="sans-serif" font-size="11">{value:.0f}</text>'
		)
	for round_number in sorted({1, geometry.n_rounds}):
		x = geometry.x(round_number)
		parts.append(
			f'<text x="{_fmt(x)}" y="{_fmt(baseline + 18)}" text-anchor="middle" font-family="sans-serif" font-size="11">{round_number}</text>'
		)
	parts.append(
		f'<text x="{_fmt(MARGIN_LEFT + geometry.plot_width / 2)}" y="{HEIGHT - 15}" text-anchor="middle" '
		f'font-family="sans-serif" font-size="13">Round</text>'
	)
	parts.append(
		f'<text x="20" y="{_fmt(MARGIN_TOP + geometry.plot_height / 2)}" text-anchor="middle" font-family="sans-serif" '
		f'font-size="13" transform="rotate(-90 20 {_fmt(MARGIN_TOP + geometry.plot_height / 2)})">Cumulative group reward</text>'
	)

	for index, item in enumerate(series):
		points = " ".join(
			f"{_fmt(geometry.x(round_number))},{_fmt(baseline - geometry.height_of(value))}"
			for round_number, value in enumerate(item.values, start=1)
		)
		dash = f' stroke-dasharray="{DASH_PATTERN[0]} {DASH_PATTERN[1]}"' if item.dashed else ""
		parts.append(
			f'<polyline fill="none" stroke="{GROUP_COLORS[item.group]}" stroke-width="2"{dash} '
			f'points="{points}" data-series={quoteattr(item.label)}/>'
		)
		legend_y = MARGIN_TOP + 20 + index * 22
		legend_x = right + 20
		parts.append(
			f'<line x1="{legend_x}" y1="{legend_y}" x2="{legend_x + 30}" y2="{legend_y}" '
			f'stroke="{GROUP_COLORS[item.group]}" stroke-width="2"{dash}/>'
		)
		parts.append(
			f'<text x="{legend_x + 38}" y="{legend_y + 4}" font-family="sans-serif" font-size="12">{escape(item.label)}</text>'
		)

	parts.append("</svg>")
	return "\n".join(parts) + "\n"


def write_chart_svg(fairness_on: SimulationResult, fairness_off: SimulationResult, path: PathLike) -> Path:
	document = build_chart_svg(fairness_on, fairness_off)
	target = Path(path)
	try:
		target.parent.mkdir(parents=True, exist_ok=True)
		target.write_text(document, encoding="utf-8")
	except OSError as exc:
		raise ArtifactError(f"Could not write {target}", evidence=[str(exc)]) from exc
	return target


def write_chart_pdf(fairness_on: SimulationResult, fairness_off: SimulationResult, path: PathLike) -> Path:
	try:
		from reportlab.graphics import renderPDF
		from reportlab.graphics.shapes import Drawing, Line, PolyLine, String
		from reportlab.lib import colors
	except ImportError as exc:
		raise ArtifactError("reportlab is required. Install with: pip install reportlab") from exc

	series = chart_series(fairness_on, fairness_off)
	geometry = chart_geometry(series)
	drawing = Drawing(WIDTH, HEIGHT)
	# reportlab measures y upward from the bottom edge.
	baseline = MARGIN_BOTTOM
	right = MARGIN_LEFT + geometry.plot_width
	drawing.add(Line(MARGIN_LEFT, baseline, right, baseline))
	drawing.add(Line(MARGIN_LEFT, baseline, MARGIN_LEFT, baseline + geometry.plot_height))
	drawing.add(String(WIDTH / 2, HEIGHT - 28, "Cumulative group reward: fairness on vs off", fontSize=14, textAnchor="middle"))
	drawing.add(String(MARGIN_LEFT + geometry.plot_width / 2, 15, "Round", fontSize=11, textAnchor="middle"))
	for tick in range(Y_TICKS + 1):
		value = geometry.y_max * tick / Y_TICKS
		y = baseline + geometry.height_of(value)
		drawing.add(String(MARGIN_LEFT - 8, y - 3, f"{value:.0f}", fontSize=9, textAnchor="end"))

	for index, item in enumerate(series):
		color = colors.HexColor(GROUP_COLORS[item.group])
		dash = list(DASH_PATTERN) if item.dashed else None
		points: List[float] = []
		for round_number, value in enumerate(item.values, start=1):
			points.extend([geometry.x(round_number), baseline + geometry.height_of(value)])
		if len(points) == 2:
			points.extend(points)
		drawing.add(PolyLine(points, strokeColor=color, strokeWidth=2, strokeDashArray=dash))
		legend_y = HEIGHT - MARGIN_TOP - 20 - index * 22
		drawing.add(Line(right + 20, legend_y, right + 50, legend_y, strokeColor=color, strokeWidth=2, strokeDashArray=dash))
		drawing.add(String(right + 58, legend_y - 4, item.label, fontSize=10))

	target = Path(path)
	try:
		target.parent.mkdir(parents=True, exist_ok=True)
		renderPDF.drawToFile(drawing, str(target), msg="Cumulative group reward")
	except OSError as exc:
		raise ArtifactError(f"Could not write {target}", evidence=[str(exc)]) from exc
	return target
