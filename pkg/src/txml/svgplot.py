"""Static SVG line charts for evaluation reports.

Prediction charts draw the actual curve dotted and the predicted curve
dashed; error charts draw absolute error against w/h. Output bytes depend
only on the report.
"""

from __future__ import annotations

import math
from xml.sax.saxutils import escape

from ._io import atomic_write_text
from .errors import EmptyReportError, UnknownKindError
from .evaluation import EvalReport

WIDTH, HEIGHT = 800, 600
MARGIN_LEFT, MARGIN_RIGHT, MARGIN_TOP, MARGIN_BOTTOM = 90, 30, 50, 70

ACTUAL_DASH = "2 4"  # dotted
PREDICTED_DASH = "10 6"  # dashed
ACTUAL_COLOR = "#1f4e9c"
PREDICTED_COLOR = "#c0392b"
ERROR_COLOR = "#2d7d46"

# unit -> (display symbol, factor from SI to display)
_UNITS = {"ohm": ("Ω", 1.0), "hertz": ("MHz", 1e-6)}
_QUANTITY = {"ohm": "Impedance", "hertz": "Resonant Frequency"}

PLOT_KINDS = ("prediction", "error")


def _range(values, pad: float = 0.0):
    lo, hi = min(values), max(values)
    if hi - lo <= 1e-12 * max(abs(lo), abs(hi), 1.0):
        # degenerate: pad by 5% of the value
        half = 0.05 * abs(lo) if lo != 0 else 0.05
        return lo - half, hi + half
    span = hi - lo
    return lo - pad * span, hi + pad * span


def _ticks(lo: float, hi: float, target: int = 6):
    raw = (hi - lo) / target
    mag = 10 ** math.floor(math.log10(raw))
    step = next(m * mag for m in (1, 2, 2.5, 5, 10) if m * mag >= raw)
    first = math.ceil(lo / step - 1e-9) * step
    ticks = []
    t = first
    while t <= hi + 1e-9 * step:
        ticks.append(0.0 if abs(t) < 1e-12 * step else t)
        t = first + len(ticks) * step
    return ticks, step


def _label(v: float, step: float) -> str:
    decimals = 0
    while decimals < 6 and abs(step * 10**decimals - round(step * 10**decimals)) > 1e-9:
        decimals += 1
    return f"{v:.{decimals}f}"


class _Frame:
    def __init__(self, xs, ys):
        self.x_lo, self.x_hi = _range(xs)
        self.y_lo, self.y_hi = _range(ys, pad=0.04)
        self.w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT
        self.h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM

    def px(self, x):
        return MARGIN_LEFT + (x - self.x_lo) / (self.x_hi - self.x_lo) * self.w

    def py(self, y):
        return MARGIN_TOP + self.h - (y - self.y_lo) / (self.y_hi - self.y_lo) * self.h

    def points(self, xs, ys):
        return " ".join(f"{self.px(x):.2f},{self.py(y):.2f}" for x, y in zip(xs, ys))


def _axes(frame: _Frame, x_label: str, y_label: str):
    out = []
    x0, y0 = MARGIN_LEFT, MARGIN_TOP + frame.h
    out.append(
        f'<rect x="{x0}" y="{MARGIN_TOP}" width="{frame.w}" height="{frame.h}" '
        'fill="none" stroke="#000000" stroke-width="1"/>'
    )
    ticks, step = _ticks(frame.x_lo, frame.x_hi)
    for t in ticks:
        x = frame.px(t)
        out.append(f'<line x1="{x:.2f}" y1="{y0}" x2="{x:.2f}" y2="{y0 + 6}" stroke="#000000"/>')
        out.append(
            f'<text x="{x:.2f}" y="{y0 + 22}" text-anchor="middle" font-size="13">{_label(t, step)}</text>'
        )
    ticks, step = _ticks(frame.y_lo, frame.y_hi)
    for t in ticks:
        y = frame.py(t)
        out.append(f'<line x1="{x0 - 6}" y1="{y:.2f}" x2="{x0}" y2="{y:.2f}" stroke="#000000"/>')
        out.append(f'<line x1="{x0}" y1="{y:.2f}" x2="{x0 + frame.w}" y2="{y:.2f}" stroke="#dddddd"/>')
        out.append(
            f'<text x="{x0 - 10}" y="{y + 4:.2f}" text-anchor="end" font-size="13">{_label(t, step)}</text>'
        )
    out.append(
        f'<text x="{x0 + frame.w / 2:.2f}" y="{HEIGHT - 20}" text-anchor="middle" font-size="15">'
        f"{escape(x_label)}</text>"
    )
    cy = MARGIN_TOP + frame.h / 2
    out.append(
        f'<text x="22" y="{cy:.2f}" text-anchor="middle" font-size="15" '
        f'transform="rotate(-90 22 {cy:.2f})">{escape(y_label)}</text>'
    )
    return out


def _legend(entries):
    out = []
    x, y = WIDTH - MARGIN_RIGHT - 190, MARGIN_TOP + 20
    for i, (label, color, dash) in enumerate(entries):
        yy = y + 22 * i
        dash_attr = f' stroke-dasharray="{dash}"' if dash else ""
        out.append(
            f'<line x1="{x}" y1="{yy}" x2="{x + 40}" y2="{yy}" stroke="{color}" stroke-width="2"{dash_attr}/>'
        )
        out.append(f'<text x="{x + 48}" y="{yy + 4}" font-size="13">{escape(label)}</text>')
    return out


def render_svg(report: EvalReport, kind: str, title: str | None = None) -> str:
    if kind not in PLOT_KINDS:
        raise UnknownKindError(f"unknown plot kind {kind!r}; expected one of {PLOT_KINDS}")
    if not report.rows:
        raise EmptyReportError("cannot plot an empty report")
    symbol, scale = _UNITS.get(report.unit, (report.unit, 1.0))
    quantity = _QUANTITY.get(report.unit, "Target")
    xs = [r.x for r in report.rows]
    body = []
    if kind == "prediction":
        actual = [r.actual * scale for r in report.rows]
        predicted = [r.predicted * scale for r in report.rows]
        frame = _Frame(xs, actual + predicted)
        body += _axes(frame, "w/h", f"{quantity} ({symbol})")
        body.append(
            f'<polyline class="actual" points="{frame.points(xs, actual)}" fill="none" '
            f'stroke="{ACTUAL_COLOR}" stroke-width="2" stroke-dasharray="{ACTUAL_DASH}"/>'
        )
        body.append(
            f'<polyline class="predicted" points="{frame.points(xs, predicted)}" fill="none" '
            f'stroke="{PREDICTED_COLOR}" stroke-width="2" stroke-dasharray="{PREDICTED_DASH}"/>'
        )
        body += _legend(
            [("Actual Output", ACTUAL_COLOR, ACTUAL_DASH), ("Predicted Output", PREDICTED_COLOR, PREDICTED_DASH)]
        )
        default_title = f"{quantity} vs. w/h"
    else:
        err = [r.abs_error * scale for r in report.rows]
        frame = _Frame(xs, [0.0] + err)
        body += _axes(frame, "w/h", f"Absolute Error ({symbol})")
        body.append(
            f'<polyline class="abs-error" points="{frame.points(xs, err)}" fill="none" '
            f'stroke="{ERROR_COLOR}" stroke-width="2"/>'
        )
        default_title = "Absolute Error vs. w/h"
    title = title or default_title
    head = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}" font-family="Helvetica, Arial, sans-serif">',
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="#ffffff"/>',
        f'<text x="{WIDTH / 2:.0f}" y="30" text-anchor="middle" font-size="17">{escape(title)}</text>',
    ]
    return "\n".join(head + body + ["</svg>"]) + "\n"


def emit_plot_svg(report: EvalReport, kind: str, path, title: str | None = None):
    """Write a prediction or absolute-error chart of ``report`` to ``path``."""
    return atomic_write_text(path, render_svg(report, kind, title))
