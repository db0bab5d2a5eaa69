"""
Regenerating the reference tables
=================================

Runs the full pipeline behind ``txml reproduce``: closed-form actual
column, OLS and MLP surrogates, report CSVs and SVG charts (actual dotted,
predicted dashed).
"""

import sys
from pathlib import Path

from txml.pipeline import ols_discrepancy, reproduce_table
from txml.reference import TABLES

out_dir = Path(sys.argv[1] if len(sys.argv) > 1 else "reproduce_out")

for number, table in TABLES.items():
    run = reproduce_table(table, out_dir)
    print(f"== table {number}")
    for check in run.checks:
        print(check.line())
    print(ols_discrepancy(table, run.ols))
    for path in run.files:
        print("  wrote", path)
