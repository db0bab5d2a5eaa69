"""Surrogate models for planar transmission-line characteristics.

Closed-form microstrip impedance and patch resonant frequency, parameter
sweeps, a least-squares line and a small MLP fitted to those sweeps, and
error reports with SVG charts.
"""

__version__ = "0.1.0"

from .analytic import (
    MicrostripGeometry,
    PatchGeometry,
    effective_permittivity,
    line_model,
    microstrip_impedance,
    patch_length_extension,
    patch_resonant_frequency,
)
from .evaluation import EvalReport, EvalRow, evaluate, percent_error, read_report_csv, write_report_csv
from .linreg import LinearModel, fit_ols, predict_linear
from .mlp import MlpLayout, MlpModel, TrainConfig, fit_mlp, forward, gradient_of_loss, init_mlp, train
from .modelio import load_model, save_model
from .svgplot import emit_plot_svg
from .sweep import Dataset, Sample, Scaler, fit_scaler, generate_sweep, read_csv, write_csv

__all__ = [
    "Dataset",
    "EvalReport",
    "EvalRow",
    "LinearModel",
    "MicrostripGeometry",
    "MlpLayout",
    "MlpModel",
    "PatchGeometry",
    "Sample",
    "Scaler",
    "TrainConfig",
    "effective_permittivity",
    "emit_plot_svg",
    "evaluate",
    "fit_mlp",
    "fit_ols",
    "fit_scaler",
    "forward",
    "generate_sweep",
    "gradient_of_loss",
    "init_mlp",
    "line_model",
    "load_model",
    "microstrip_impedance",
    "patch_length_extension",
    "patch_resonant_frequency",
    "percent_error",
    "predict_linear",
    "read_csv",
    "read_report_csv",
    "save_model",
    "train",
    "write_csv",
    "write_report_csv",
]
