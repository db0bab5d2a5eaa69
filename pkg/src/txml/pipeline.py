"""End-to-end regeneration of the reference impedance and frequency tables.

For one reference table: rebuild the actual column from the closed-form
model, rescore the printed surrogate columns, train an OLS line and an MLP
on a dense sweep, evaluate both on the table grid and write reports and
charts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .evaluation import EvalReport, evaluate, percent_error, write_report_csv
from .linreg import LinearModel, fit_ols
from .mlp import MlpLayout, MlpModel, TrainConfig, fit_mlp
from .reference import IMPLIED_LR_IMPEDANCE, ReferenceTable
from .svgplot import emit_plot_svg
from .sweep import Dataset, Sample, generate_sweep

TRAIN_RANGE = (1.0, 9.5)
TRAIN_STEP = 0.05
EVAL_STEP = 0.5
# max percent error allowed for the MLP on each table grid
NN_BOUNDS = {1: 2.0, 2: 0.3}
PCT_TOLERANCE = 0.01
OLS_TOLERANCE = 1e-9


@dataclass
class Check:
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'}  {self.name}: {self.detail}"


@dataclass
class TableRun:
    table: ReferenceTable
    eval_set: Dataset
    ols: LinearModel
    mlp: MlpModel
    reports: dict
    checks: list = field(default_factory=list)
    files: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def normal_equations(x, y) -> tuple[float, float]:
    """Centered closed-form least-squares line, accumulated with fsum."""
    x = [float(v) for v in x]
    y = [float(v) for v in y]
    xb = math.fsum(x) / len(x)
    yb = math.fsum(y) / len(y)
    sxy = math.fsum((a - xb) * (b - yb) for a, b in zip(x, y))
    sxx = math.fsum((a - xb) ** 2 for a in x)
    slope = sxy / sxx
    return slope, yb - slope * xb


def eval_grid(table: ReferenceTable) -> Dataset:
    return generate_sweep(table.kind, table.eps_r, table.fixed_params, table.x[0], table.x[-1], EVAL_STEP)


def check_actual(table: ReferenceTable, eval_set: Dataset) -> Check:
    got = eval_set.y / table.display_scale
    dev = np.abs(got - np.asarray(table.actual))
    worst = int(np.argmax(dev))
    unit = "ohm" if table.display_scale == 1.0 else "MHz"
    return Check(
        f"table {table.number} actual column",
        bool(np.all(dev <= table.tolerance)),
        f"{len(dev)} rows, max |dev| {dev[worst]:.4f} {unit} at w/h={table.x[worst]} "
        f"(tolerance {table.tolerance} {unit})",
    )


def check_printed_errors(table: ReferenceTable) -> Check:
    diffs = []
    for a, nn, lr, p_nn, p_lr in zip(table.actual, table.nn, table.lr, table.pct_nn, table.pct_lr):
        diffs.append(abs(percent_error(a, nn) - p_nn))
        diffs.append(abs(percent_error(a, lr) - p_lr))
    worst = max(diffs)
    return Check(
        f"table {table.number} % error cells",
        worst <= PCT_TOLERANCE,
        f"{len(diffs)} cells recomputed, max |diff| {worst:.4f} pp (tolerance {PCT_TOLERANCE})",
    )


def check_ols(model: LinearModel, train_set: Dataset, table: ReferenceTable) -> Check:
    rel = []
    for data in (train_set, Dataset(table.kind, table.eps_r, [Sample(x, y) for x, y in zip(table.x, table.actual)])):
        fitted = fit_ols(data) if data is not train_set else model
        oracle = normal_equations(data.x, data.y)
        rel += [abs(fitted.slope - oracle[0]) / abs(oracle[0]), abs(fitted.intercept - oracle[1]) / abs(oracle[1])]
    resid = train_set.y - (model.slope * train_set.x + model.intercept)
    resid_rel = abs(math.fsum(resid)) / math.fsum(np.abs(train_set.y))
    ok = max(rel) <= OLS_TOLERANCE and resid_rel <= OLS_TOLERANCE
    return Check(
        f"table {table.number} OLS vs normal equations",
        ok,
        f"max rel coef diff {max(rel):.2e}, residual sum {resid_rel:.2e} (tolerance {OLS_TOLERANCE:g})",
    )


def check_mlp(report: EvalReport, table: ReferenceTable) -> Check:
    bound = NN_BOUNDS[table.number]
    return Check(
        f"table {table.number} MLP error bound",
        report.max_pct_error <= bound,
        f"max {report.max_pct_error:.3f}% (bound {bound}%), mean {report.mean_pct_error:.3f}%",
    )


def ols_discrepancy(table: ReferenceTable, model: LinearModel) -> str:
    """Compare the dense-sweep OLS line with the line implied by the printed LR column."""
    x = table.x_array
    implied = np.polyfit(x, np.asarray(table.lr), 1)
    own = normal_equations(table.x, table.actual)
    scale = table.display_scale
    unit = "ohm" if scale == 1.0 else "MHz"
    lines = [
        f"OLS on dense sweep: slope {model.slope / scale:.4f}, intercept {model.intercept / scale:.4f} {unit}",
        f"OLS on table actual column: slope {own[0]:.4f}, intercept {own[1]:.4f} {unit}",
        f"line implied by printed LR column: slope {implied[0]:.4f}, intercept {implied[1]:.4f} {unit}",
    ]
    if table.number == 1:
        lines[-1] += f" (nominal {IMPLIED_LR_IMPEDANCE[0]}, {IMPLIED_LR_IMPEDANCE[1]})"
    lines.append("printed LR column is not reproducible: its training grid is unknown")
    return "\n".join(lines)


def reproduce_table(
    table: ReferenceTable,
    out_dir=None,
    seed: int = 42,
    layout: MlpLayout = MlpLayout(),
    config: TrainConfig | None = None,
    train_range: tuple = TRAIN_RANGE,
    train_step: float = TRAIN_STEP,
) -> TableRun:
    """Run the full pipeline for one table; writes files only when ``out_dir`` is given."""
    config = config or TrainConfig(seed=seed)
    eval_set = eval_grid(table)
    train_set = generate_sweep(table.kind, table.eps_r, table.fixed_params, *train_range, train_step)
    ols = fit_ols(train_set)
    mlp = fit_mlp(train_set, layout, config)
    reports = {
        "mlp": evaluate(mlp, eval_set, f"mlp {layout.sizes} {layout.activation} seed={config.seed}"),
        "ols": evaluate(ols, eval_set, f"ols slope={ols.slope!r} intercept={ols.intercept!r}"),
    }
    run = TableRun(table, eval_set, ols, mlp, reports)
    run.checks = [
        check_actual(table, eval_set),
        check_printed_errors(table),
        check_ols(ols, train_set, table),
        check_mlp(reports["mlp"], table),
    ]
    if out_dir is not None:
        out = Path(out_dir)
        n = table.number
        quantity = "Impedance" if table.kind == "microstrip_impedance" else "Resonant Frequency"
        line = "Microstrip Line" if table.kind == "microstrip_impedance" else "Patch"
        names = {"mlp": "neural networks", "ols": "linear regression"}
        for key, report in reports.items():
            run.files.append(write_report_csv(report, out / f"table{n}_{key}_report.csv"))
            run.files.append(
                emit_plot_svg(
                    report, "prediction", out / f"table{n}_{key}_prediction.svg",
                    f"{quantity} Vs. w/h for {line} using {names[key]}",
                )
            )
            run.files.append(
                emit_plot_svg(
                    report, "error", out / f"table{n}_{key}_error.svg",
                    f"Absolute Error Vs. w/h for {line} using {names[key]}",
                )
            )
    return run

