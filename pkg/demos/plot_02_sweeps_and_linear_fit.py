"""
Sweeps and the straight-line baseline
=====================================

Generate a dense training sweep, persist it, and fit an ordinary
least-squares line. A line cannot follow the curvature of Z0(w/h), which
shows up as large errors at the ends of the range.
"""

from pathlib import Path
import tempfile

from txml import evaluate, fit_ols, generate_sweep, read_csv, write_csv
from txml.pipeline import normal_equations

train = generate_sweep("microstrip_impedance", 2.0, {}, 1.0, 9.5, 0.05)
grid = generate_sweep("microstrip_impedance", 2.0, {}, 1.0, 8.5, 0.5)
print(train.descriptor())

###############################################################################
# CSV round-trip is exact.
with tempfile.TemporaryDirectory() as tmp:
    path = write_csv(train, Path(tmp) / "train.csv")
    print(path.read_text().splitlines()[:3])
    assert read_csv(path) == train

###############################################################################
# The fit agrees with the centered normal equations.
line = fit_ols(train)
print(f"slope {line.slope:.5f} ohm per unit w/h, intercept {line.intercept:.4f} ohm")
print("normal equations:", normal_equations(train.x, train.y))

report = evaluate(line, grid, "ols")
for row in report.rows:
    print(f"{row.x:4.1f}  actual {row.actual:7.3f}  line {row.predicted:7.3f}  {row.pct_error:6.2f}%")
print(report.summary())
