"""Synthetic datasets from parameter sweeps over w/h.

A :class:`Dataset` is an ordered list of ``(w/h, target)`` samples at a
fixed substrate and fixed auxiliary parameters. Sweeps are evaluated with
the closed-form models in :mod:`txml.analytic`.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

from ._io import atomic_write_text, fmt
from .analytic import LINE_KINDS, line_model, min_w_over_h
from .errors import (
    DegenerateRangeError,
    DomainError,
    EmptyRangeError,
    SchemaError,
    UnknownKindError,
)

CSV_HEADER = ("kind", "eps_r", "param_name", "param_value", "x_w_over_h", "y_value", "y_unit")


@dataclass(frozen=True)
class Sample:
    x: float
    y: float


@dataclass(frozen=True)
class Dataset:
    kind: str
    eps_r: float
    samples: tuple
    fixed_params: Mapping[str, float] = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in LINE_KINDS:
            raise UnknownKindError(f"unknown dataset kind {self.kind!r}")
        object.__setattr__(self, "samples", tuple(self.samples))
        object.__setattr__(self, "fixed_params", dict(self.fixed_params))
        if not self.samples:
            raise EmptyRangeError("dataset has no samples")
        for i, s in enumerate(self.samples):
            if not (math.isfinite(s.x) and math.isfinite(s.y)):
                raise DomainError(f"sample {i} is not finite: {s}")
            if i and s.x <= self.samples[i - 1].x:
                raise DomainError(f"samples must be strictly increasing in x (sample {i})")

    @property
    def unit(self) -> str:
        return LINE_KINDS[self.kind]

    @property
    def x(self) -> np.ndarray:
        return np.array([s.x for s in self.samples])

    @property
    def y(self) -> np.ndarray:
        return np.array([s.y for s in self.samples])

    def __len__(self) -> int:
        return len(self.samples)

    def with_targets(self, y) -> "Dataset":
        """Copy of this dataset with the target column replaced."""
        return Dataset(
            self.kind,
            self.eps_r,
            tuple(Sample(s.x, float(v)) for s, v in zip(self.samples, y, strict=True)),
            self.fixed_params,
        )

    def descriptor(self) -> str:
        params = ",".join(f"{k}={fmt(v)}" for k, v in sorted(self.fixed_params.items()))
        step = ""
        if len(self) > 1:
            step = f" step={fmt(self.samples[1].x - self.samples[0].x)}"
        return (
            f"{self.kind} eps_r={fmt(self.eps_r)}{' ' + params if params else ''} "
            f"x=[{fmt(self.samples[0].x)}, {fmt(self.samples[-1].x)}]{step} n={len(self)}"
        )


def sweep_grid(x_min: float, x_max: float, step: float) -> np.ndarray:
    """Grid ``x_min + i*step`` whose last point is within half a step of ``x_max``."""
    if not (math.isfinite(x_min) and math.isfinite(x_max) and math.isfinite(step)):
        raise DomainError("sweep bounds and step must be finite")
    if step <= 0:
        raise DomainError(f"step must be positive, got {step!r}")
    if x_max < x_min:
        raise EmptyRangeError(f"empty range: x_max={x_max!r} < x_min={x_min!r}")
    n = math.floor((x_max - x_min) / step + 0.5) + 1
    return x_min + step * np.arange(n)


def generate_sweep(
    kind: str,
    eps_r: float,
    fixed_params: Mapping[str, float] | None,
    x_min: float,
    x_max: float,
    step: float,
    variant: str = "standard",
) -> Dataset:
    """Evaluate the closed-form model of ``kind`` on a uniform w/h grid.

    Args:
        kind: ``"microstrip_impedance"`` or ``"patch_frequency"``.
        eps_r: substrate dielectric constant.
        fixed_params: extra keyword inputs of the model, e.g.
            ``{"effective_length_m": 0.0095}`` for patches.
        x_min, x_max, step: sweep bounds; the endpoint is included when it
            lies on the grid up to rounding.

    Returns:
        Dataset with targets in ohms (microstrip) or hertz (patch).
    """
    fixed_params = dict(fixed_params or {})
    evaluate = line_model(kind, variant)
    lower = min_w_over_h(kind)
    if x_min < lower or x_min <= 0:
        raise DomainError(f"{kind} sweep must start at w/h >= {lower} (and > 0), got {x_min!r}")
    xs = sweep_grid(x_min, x_max, step)
    samples = tuple(Sample(float(x), evaluate(eps_r, float(x), **fixed_params)) for x in xs)
    return Dataset(kind, float(eps_r), samples, fixed_params)


@dataclass(frozen=True)
class Scaler:
    """Min-max map of x and y onto ``[0, 1]``."""

    x_min: float
    x_max: float
    y_min: float
    y_max: float

    def __post_init__(self):
        if not self.x_min < self.x_max:
            raise DegenerateRangeError(f"degenerate x range [{self.x_min}, {self.x_max}]")
        if not self.y_min < self.y_max:
            raise DegenerateRangeError(f"degenerate y range [{self.y_min}, {self.y_max}]")

    def apply_x(self, x):
        return (np.asarray(x, dtype=float) - self.x_min) / (self.x_max - self.x_min)

    def invert_x(self, x_scaled):
        return np.asarray(x_scaled, dtype=float) * (self.x_max - self.x_min) + self.x_min

    def apply_y(self, y):
        return (np.asarray(y, dtype=float) - self.y_min) / (self.y_max - self.y_min)

    def invert_y(self, y_scaled):
        return np.asarray(y_scaled, dtype=float) * (self.y_max - self.y_min) + self.y_min


def fit_scaler(dataset: Dataset) -> Scaler:
    x, y = dataset.x, dataset.y
    return Scaler(float(x.min()), float(x.max()), float(y.min()), float(y.max()))


def dataset_to_csv(dataset: Dataset) -> str:
    names = sorted(dataset.fixed_params)
    param_name = ";".join(names)
    param_value = ";".join(fmt(dataset.fixed_params[k]) for k in names)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for s in dataset.samples:
        writer.writerow(
            (dataset.kind, fmt(dataset.eps_r), param_name, param_value, fmt(s.x), fmt(s.y), dataset.unit)
        )
    return buf.getvalue()


def write_csv(dataset: Dataset, path):
    """Persist ``dataset`` in the flat dataset CSV schema."""
    return atomic_write_text(path, dataset_to_csv(dataset))


def _number(text: str, column: str, line: int, path) -> float:
    try:
        value = float(text)
    except ValueError:
        raise SchemaError(f"non-numeric {column} value {text!r}", line, path) from None
    if not math.isfinite(value):
        raise SchemaError(f"non-finite {column} value {text!r}", line, path)
    return value


def _params(names: str, values: str, line: int, path) -> dict:
    if not names and not values:
        return {}
    keys = names.split(";")
    vals = values.split(";")
    if len(keys) != len(vals) or not all(keys):
        raise SchemaError(f"param_name/param_value mismatch: {names!r} vs {values!r}", line, path)
    return {k: _number(v, "param_value", line, path) for k, v in zip(keys, vals)}


def read_csv(path) -> Dataset:
    """Load a dataset CSV, reporting schema problems with their line number."""
    with open(path, encoding="utf-8", newline="") as fh:
        text = fh.read()
    return dataset_from_csv(text, path)


def dataset_from_csv(text: str, path=None) -> Dataset:
    rows = list(csv.reader(io.StringIO(text)))
    if not rows:
        raise SchemaError("empty file, missing header", 1, path)
    header = tuple(rows[0])
    if header != CSV_HEADER:
        for i, expected in enumerate(CSV_HEADER):
            got = header[i] if i < len(header) else "<missing>"
            if got != expected:
                raise SchemaError(f"bad header column {i + 1}: expected {expected!r}, got {got!r}", 1, path)
        raise SchemaError(f"unexpected extra header columns {list(header[len(CSV_HEADER):])}", 1, path)
    if len(rows) < 2:
        raise SchemaError("no data rows", 2, path)

    kind = eps_r = params = None
    samples = []
    for line, row in enumerate(rows[1:], start=2):
        if len(row) != len(CSV_HEADER):
            raise SchemaError(f"expected {len(CSV_HEADER)} cells, got {len(row)}", line, path)
        r_kind, r_eps, r_pname, r_pval, r_x, r_y, r_unit = row
        if r_kind not in LINE_KINDS:
            raise SchemaError(f"unknown kind {r_kind!r}", line, path)
        if r_unit != LINE_KINDS[r_kind]:
            raise SchemaError(f"unit {r_unit!r} does not match kind {r_kind!r}", line, path)
        r_eps = _number(r_eps, "eps_r", line, path)
        r_params = _params(r_pname, r_pval, line, path)
        if kind is None:
            kind, eps_r, params = r_kind, r_eps, r_params
        elif (r_kind, r_eps, r_params) != (kind, eps_r, params):
            raise SchemaError("kind/eps_r/params differ from the first row", line, path)
        x = _number(r_x, "x_w_over_h", line, path)
        y = _number(r_y, "y_value", line, path)
        if samples and x <= samples[-1].x:
            raise SchemaError(f"x_w_over_h not strictly increasing ({x!r} after {samples[-1].x!r})", line, path)
        samples.append(Sample(x, y))
    return Dataset(kind, eps_r, tuple(samples), params)
