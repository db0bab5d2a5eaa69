"""Error metrics and report tables for surrogate predictions."""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from typing import Callable

from ._io import atomic_write_text, fmt
from .errors import DomainError, EmptyReportError, EvaluationError, SchemaError
from .sweep import Dataset

REPORT_HEADER = ("x_w_over_h", "actual", "predicted", "abs_error", "pct_error", "actual_full", "predicted_full")


def percent_error(actual: float, predicted: float) -> float:
    """``100 * |actual - predicted| / |actual|``."""
    if actual == 0:
        raise DomainError("percent error is undefined for actual == 0")
    return 100.0 * abs(actual - predicted) / abs(actual)


@dataclass(frozen=True)
class EvalRow:
    x: float
    actual: float
    predicted: float
    abs_error: float
    pct_error: float

    @classmethod
    def of(cls, x: float, actual: float, predicted: float) -> "EvalRow":
        return cls(x, actual, predicted, abs(actual - predicted), percent_error(actual, predicted))


@dataclass(frozen=True)
class EvalReport:
    rows: tuple
    max_pct_error: float
    mean_pct_error: float
    max_abs_error: float
    mean_abs_error: float
    model_descriptor: str = ""
    unit: str = "ohm"

    @classmethod
    def from_rows(cls, rows, model_descriptor: str = "", unit: str = "ohm") -> "EvalReport":
        rows = tuple(rows)
        if not rows:
            raise EmptyReportError("report has no rows")
        pct = [r.pct_error for r in rows]
        err = [r.abs_error for r in rows]
        return cls(
            rows,
            max(pct),
            math.fsum(pct) / len(pct),
            max(err),
            math.fsum(err) / len(err),
            model_descriptor,
            unit,
        )

    @property
    def worst_row(self) -> EvalRow:
        return max(self.rows, key=lambda r: r.pct_error)

    def summary(self) -> str:
        return (
            f"max error {self.max_pct_error:.3f}% at w/h={fmt(self.worst_row.x)}, "
            f"mean error {self.mean_pct_error:.3f}%, "
            f"max abs {self.max_abs_error:.6g} {self.unit}, mean abs {self.mean_abs_error:.6g} {self.unit}"
        )


def evaluate(predictor: Callable[[float], float], eval_dataset: Dataset, model_descriptor: str = "") -> EvalReport:
    """Score ``predictor`` on every sample of ``eval_dataset``.

    Raises:
        EvaluationError: the predictor raised or returned a non-finite value;
            carries the offending ``x``.
    """
    rows = []
    for s in eval_dataset.samples:
        try:
            predicted = float(predictor(s.x))
        except Exception as exc:
            raise EvaluationError(s.x, exc) from exc
        if not math.isfinite(predicted):
            raise EvaluationError(s.x, ValueError(f"non-finite prediction {predicted!r}"))
        rows.append(EvalRow.of(s.x, s.y, predicted))
    return EvalReport.from_rows(rows, model_descriptor, eval_dataset.unit)


def report_to_csv(report: EvalReport) -> str:
    if not report.rows:
        raise EmptyReportError("refusing to write an empty report")
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(REPORT_HEADER)
    for r in report.rows:
        writer.writerow(
            (
                fmt(r.x),
                f"{r.actual:.3f}",
                f"{r.predicted:.3f}",
                f"{r.abs_error:.3f}",
                f"{r.pct_error:.3f}",
                fmt(r.actual),
                fmt(r.predicted),
            )
        )
    return buf.getvalue()


def write_report_csv(report: EvalReport, path):
    """Write ``report`` with 3-decimal display columns plus full-precision actual/predicted."""
    return atomic_write_text(path, report_to_csv(report))


def read_report_csv(path, model_descriptor: str = "", unit: str = "ohm") -> EvalReport:
    """Rebuild a report from the x and full-precision columns, recomputing errors."""
    with open(path, encoding="utf-8", newline="") as fh:
        rows = list(csv.reader(fh))
    if not rows or tuple(rows[0]) != REPORT_HEADER:
        raise SchemaError(f"bad report header {rows[0] if rows else None}", 1, path)
    out = []
    for line, row in enumerate(rows[1:], start=2):
        if len(row) != len(REPORT_HEADER):
            raise SchemaError(f"expected {len(REPORT_HEADER)} cells, got {len(row)}", line, path)
        try:
            x, actual, predicted = float(row[0]), float(row[5]), float(row[6])
        except ValueError:
            raise SchemaError("non-numeric cell", line, path) from None
        if out and x <= out[-1].x:
            raise SchemaError("x_w_over_h not strictly increasing", line, path)
        out.append(EvalRow.of(x, actual, predicted))
    if not out:
        raise EmptyReportError(f"{path}: report has no rows")
    return EvalReport.from_rows(out, model_descriptor, unit)
