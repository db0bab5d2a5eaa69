"""Straight-line least-squares surrogate of target versus w/h."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateRangeError, InsufficientDataError
from .sweep import Dataset, Scaler, fit_scaler


@dataclass(frozen=True)
class LinearModel:
    slope: float
    intercept: float
    trained_on: str | None = None
    scaler: Scaler | None = None

    def __call__(self, x):
        return predict_linear(self, x)


def fit_ols(dataset: Dataset) -> LinearModel:
    """Ordinary least-squares line through ``dataset`` in raw units.

    Raises:
        InsufficientDataError: fewer than two distinct x values.
    """
    x, y = dataset.x, dataset.y
    if np.unique(x).size < 2:
        raise InsufficientDataError("ordinary least squares needs at least 2 distinct x values")
    design = np.column_stack([x, np.ones_like(x)])
    (slope, intercept), *_ = np.linalg.lstsq(design, y, rcond=None)
    try:
        scaler = fit_scaler(dataset)
    except DegenerateRangeError:
        # constant targets still have a valid (flat) least-squares line
        scaler = None
    return LinearModel(float(slope), float(intercept), dataset.descriptor(), scaler)


def predict_linear(model: LinearModel, x):
    result = model.slope * np.asarray(x, dtype=float) + model.intercept
    return float(result) if np.ndim(result) == 0 else result
