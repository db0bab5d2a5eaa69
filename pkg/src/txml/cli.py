"""Command-line entry point ``txml``.

Subcommands: ``sweep``, ``train``, ``eval``, ``plot``, ``reproduce``.
Exit codes: 0 success, 1 runtime or domain failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import __version__
from .analytic import line_model
from .errors import TxmlError
from .evaluation import evaluate, read_report_csv, write_report_csv
from .linreg import fit_ols
from .mlp import MlpLayout, MlpModel, TrainConfig, fit_mlp
from .modelio import load_model, save_model
from .pipeline import ols_discrepancy, reproduce_table
from .reference import TABLES
from .svgplot import emit_plot_svg
from .sweep import generate_sweep, read_csv, write_csv

log = logging.getLogger("txml")

LINES = {"microstrip": "microstrip_impedance", "patch": "patch_frequency"}


# checked after config merging so a config file can supply them
REQUIRED = {"train": ("data",), "eval": ("model", "data"), "plot": ("report",)}


class UsageError(Exception):
    pass


def load_config(path) -> dict:
    """Parse a flat ``key = value`` file; ``#`` starts a comment. Keys use flag spelling."""
    values = {}
    with open(path, encoding="utf-8") as fh:
        for n, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise UsageError(f"{path}:{n}: expected key=value, got {raw.strip()!r}")
            key, value = (part.strip() for part in line.split("=", 1))
            values[key.lstrip("-").replace("-", "_")] = value
    return values


def _common(p):
    p.add_argument("--out-dir", type=Path, default=Path("."), help="directory for outputs [default: .]")
    p.add_argument("--config", type=Path, help="key=value file providing defaults for any flag")
    p.add_argument("--seed", type=int, default=42, help="random seed [default: 42]")
    p.add_argument("-v", "--verbose", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="txml", description="Transmission-line surrogate toolkit")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    parser.subcommands = sub.choices

    p = sub.add_parser("sweep", help="evaluate a closed-form model on a w/h grid")
    _common(p)
    p.add_argument("--line", choices=sorted(LINES), default="microstrip")
    p.add_argument("--eps-r", type=float, default=2.0)
    p.add_argument("--min", type=float, default=1.0, dest="x_min")
    p.add_argument("--max", type=float, default=9.5, dest="x_max")
    p.add_argument("--step", type=float, default=0.05)
    p.add_argument("--l-eff-mm", type=float, help="patch effective length L + 2dL in mm")
    p.add_argument("--length-mm", type=float, help="physical patch length in mm")
    p.add_argument("--height-mm", type=float, help="substrate height in mm")
    p.add_argument("--variant", choices=("standard", "printed"), default="standard")
    p.add_argument("--out", type=Path, help="output CSV [default: <out-dir>/sweep.csv]")

    p = sub.add_parser("train", help="fit a surrogate to a dataset CSV")
    _common(p)
    p.add_argument("--model", choices=("ols", "mlp"), default="mlp")
    p.add_argument("--data", type=Path, help="dataset CSV (required)")
    p.add_argument("--hidden", type=int, nargs="+", default=[8])
    p.add_argument("--activation", choices=("tanh", "sigmoid"), default="tanh")
    p.add_argument("--epochs", type=int, default=TrainConfig.epochs)
    p.add_argument("--lr", type=float, default=TrainConfig.learning_rate)
    p.add_argument("--momentum", type=float, default=TrainConfig.momentum)
    p.add_argument("--target-mse", type=float, default=TrainConfig.target_mse)
    p.add_argument("--out", type=Path, help="model file [default: <out-dir>/model.txt]")

    p = sub.add_parser("eval", help="score a model on a dataset CSV")
    _common(p)
    p.add_argument("--model", help="model file, or 'analytic' for the closed-form model (required)")
    p.add_argument("--data", type=Path, help="dataset CSV (required)")
    p.add_argument("--out", type=Path, help="report CSV [default: <out-dir>/report.csv]")
    p.add_argument("--plot", action="store_true", help="also write prediction and error SVGs")

    p = sub.add_parser("plot", help="render a report CSV as SVG")
    _common(p)
    p.add_argument("--report", type=Path, help="report CSV (required)")
    p.add_argument("--kind", choices=("prediction", "error"), default="prediction")
    p.add_argument("--unit", choices=("ohm", "hertz"), default="ohm")
    p.add_argument("--title")
    p.add_argument("--out", type=Path, help="SVG file [default: <out-dir>/<report>_<kind>.svg]")

    p = sub.add_parser("reproduce", help="regenerate the reference tables and charts")
    _common(p)
    p.add_argument("--table", default="all", help="1, 2 or all")
    p.add_argument("--hidden", type=int, nargs="+", default=[8])
    p.add_argument("--epochs", type=int, default=TrainConfig.epochs)
    p.add_argument("--lr", type=float, default=TrainConfig.learning_rate)
    p.add_argument("--momentum", type=float, default=TrainConfig.momentum)
    p.add_argument("--eps-r", type=float, help="override the table's eps_r")
    p.add_argument("--l-eff-mm", type=float, help="override the patch effective length (table 2)")
    return parser


def parse_args(argv):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.config is not None:
        try:
            values = load_config(args.config)
        except OSError as exc:
            parser.error(f"cannot read config: {exc}")
        except UsageError as exc:
            parser.error(str(exc))
        sub = parser.subcommands[args.command]
        actions = {}
        for action in sub._actions:
            for opt in action.option_strings:
                actions[opt.lstrip("-").replace("-", "_")] = action
        unknown = set(values) - set(actions) | {"config"} & set(values)
        if unknown:
            parser.error(f"unknown config keys: {', '.join(sorted(unknown))}")
        try:
            defaults = {actions[k].dest: _coerce(actions[k], v) for k, v in values.items()}
        except ValueError as exc:
            parser.error(f"bad config value: {exc}")
        # re-parse so explicit flags override config values
        sub.set_defaults(**defaults)
        args = parser.parse_args(argv)
    for dest in REQUIRED.get(args.command, ()):
        if getattr(args, dest) is None:
            parser.error(f"{args.command}: --{dest} is required (flag or config file)")
    return parser, args


def _coerce(action, value):
    if action.nargs in ("+", "*"):
        return [action.type(v) if action.type else v for v in value.split()]
    if isinstance(action, argparse._StoreTrueAction):
        return value.lower() in ("1", "true", "yes", "on")
    return action.type(value) if action.type else value


def cmd_sweep(args, parser):
    if args.step <= 0:
        parser.error("--step must be positive")
    if args.x_max < args.x_min:
        parser.error(f"empty range: --max {args.x_max} < --min {args.x_min}")
    kind = LINES[args.line]
    params = {}
    if kind == "patch_frequency":
        if args.l_eff_mm is not None:
            params["effective_length_m"] = args.l_eff_mm * 1e-3
        if args.length_mm is not None:
            params["patch_length_m"] = args.length_mm * 1e-3
        if args.height_mm is not None:
            params["substrate_height_m"] = args.height_mm * 1e-3
    elif any(v is not None for v in (args.l_eff_mm, args.length_mm, args.height_mm)):
        parser.error("length flags only apply to --line patch")
    data = generate_sweep(kind, args.eps_r, params, args.x_min, args.x_max, args.step, args.variant)
    out = write_csv(data, args.out or args.out_dir / "sweep.csv")
    print(f"wrote {len(data)} rows to {out} (w/h {data.samples[0].x:g} .. {data.samples[-1].x:g}, {kind})")
    return 0


def cmd_train(args, parser):
    data = read_csv(args.data)
    out = args.out or args.out_dir / "model.txt"
    if args.model == "ols":
        model = fit_ols(data)
        resid = data.y - model(data.x)
        mse = float((resid @ resid) / len(resid))
        print(f"ols slope={model.slope!r} intercept={model.intercept!r} training MSE {mse:.6g} (raw units)")
    else:
        layout = MlpLayout(tuple(args.hidden), args.activation)
        config = TrainConfig(args.epochs, args.lr, args.momentum, args.seed, args.target_mse)
        model = fit_mlp(data, layout, config)
        print(f"mlp {layout.sizes} seed={args.seed}: {len(model.training_log)} epochs, "
              f"final MSE {model.training_log[-1]:.6g} (normalized)")
    save_model(model, out)
    print(f"wrote {out}")
    return 0


def _predictor(choice: str, data):
    if choice == "analytic":
        evaluate_line = line_model(data.kind)
        return lambda x: evaluate_line(data.eps_r, x, **data.fixed_params), "analytic"
    model = load_model(choice)
    return model, f"{'mlp' if isinstance(model, MlpModel) else 'ols'} from {choice}"


def cmd_eval(args, parser):
    data = read_csv(args.data)
    predictor, desc = _predictor(args.model, data)
    report = evaluate(predictor, data, desc)
    out = args.out or args.out_dir / "report.csv"
    write_report_csv(report, out)
    print(f"max error {report.max_pct_error:.3f}%  mean error {report.mean_pct_error:.3f}%  ({len(report.rows)} points)")
    print(f"wrote {out}")
    if args.plot:
        for kind in ("prediction", "error"):
            svg = emit_plot_svg(report, kind, out.with_name(f"{out.stem}_{kind}.svg"))
            print(f"wrote {svg}")
    return 0


def cmd_plot(args, parser):
    report = read_report_csv(args.report, unit=args.unit)
    out = args.out or args.out_dir / f"{args.report.stem}_{args.kind}.svg"
    emit_plot_svg(report, args.kind, out, args.title)
    print(f"wrote {out}")
    return 0


def cmd_reproduce(args, parser):
    choices = {"1": [1], "2": [2], "all": [1, 2]}
    if args.table not in choices:
        parser.error(f"unknown table {args.table!r}; choose 1, 2 or all")
    layout = MlpLayout(tuple(args.hidden))
    config = TrainConfig(args.epochs, args.lr, args.momentum, args.seed)
    failed = []
    for number in choices[args.table]:
        table = TABLES[number]
        if args.eps_r is not None:
            table = _override(table, eps_r=args.eps_r)
        if args.l_eff_mm is not None and number == 2:
            table = _override(table, fixed_params={"effective_length_m": args.l_eff_mm * 1e-3})
        run = reproduce_table(table, args.out_dir, args.seed, layout, config)
        print(f"== table {number} ({table.kind}, eps_r={table.eps_r:g})")
        for name, report in run.reports.items():
            print(f"   {name}: {report.summary()}")
        print("   " + ols_discrepancy(table, run.ols).replace("\n", "\n   "))
        for check in run.checks:
            print(check.line())
            if not check.passed:
                failed.append(check.name)
        for path in run.files:
            log.info("wrote %s", path)
        print(f"   wrote {len(run.files)} files to {args.out_dir}")
    if failed:
        print(f"FAILED: {failed[0]}" + (f" (+{len(failed) - 1} more)" if len(failed) > 1 else ""), file=sys.stderr)
        return 1
    print("ALL CHECKS PASSED")
    return 0


def _override(table, **changes):
    from dataclasses import replace

    return replace(table, **changes)


COMMANDS = {
    "sweep": cmd_sweep,
    "train": cmd_train,
    "eval": cmd_eval,
    "plot": cmd_plot,
    "reproduce": cmd_reproduce,
}


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    parser, args = parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return COMMANDS[args.command](args, parser)
    except (TxmlError, OSError) as exc:
        print(f"txml {args.command}: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
