import subprocess
import sys

import pytest

from txml.cli import main
from txml.modelio import load_model
from txml.sweep import read_csv


def run(argv):
    return main([str(a) for a in argv])


class TestSweep:
    def test_microstrip_grid(self, tmp_path, capsys):
        out = tmp_path / "s.csv"
        assert run(["sweep", "--line", "microstrip", "--eps-r", 2, "--min", 1, "--max", 8.5, "--step", 0.5, "--out", out]) == 0
        assert len(read_csv(out)) == 16
        assert "16 rows" in capsys.readouterr().out

    def test_patch_grid(self, tmp_path):
        args = ["sweep", "--line", "patch", "--eps-r", 6, "--l-eff-mm", 9.5, "--min", 1, "--max", 9.5, "--step", 0.5]
        assert run(args + ["--out-dir", tmp_path]) == 0
        data = read_csv(tmp_path / "sweep.csv")
        assert len(data) == 18
        assert data.fixed_params == {"effective_length_m": 0.0095}

    def test_reversed_range_is_usage_error(self, tmp_path, capsys):
        with pytest.raises(SystemExit) as info:
            run(["sweep", "--min", 5, "--max", 1, "--step", 0.5, "--out-dir", tmp_path])
        assert info.value.code == 2
        assert "range" in capsys.readouterr().err
        assert not (tmp_path / "sweep.csv").exists()

    def test_domain_error_exit_1(self, tmp_path, capsys):
        assert run(["sweep", "--eps-r", 0.5, "--out-dir", tmp_path]) == 1
        assert "eps_r" in capsys.readouterr().err
        assert list(tmp_path.iterdir()) == []

    def test_config_file(self, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("# table grid\nline = patch\neps-r = 6\nl-eff-mm = 9.5\nmin = 1\nmax = 9.5\nstep = 0.5\n")
        assert run(["sweep", "--config", cfg, "--out-dir", tmp_path]) == 0
        assert len(read_csv(tmp_path / "sweep.csv")) == 18
        # flags override the file
        assert run(["sweep", "--config", cfg, "--max", 2, "--out-dir", tmp_path]) == 0
        assert len(read_csv(tmp_path / "sweep.csv")) == 3

    def test_config_unknown_key(self, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("colour = red\n")
        with pytest.raises(SystemExit) as info:
            run(["sweep", "--config", cfg])
        assert info.value.code == 2


class TestTrainEval:
    @pytest.fixture
    def sweeps(self, tmp_path):
        train = tmp_path / "train.csv"
        grid = tmp_path / "grid.csv"
        run(["sweep", "--eps-r", 2, "--min", 1, "--max", 9.5, "--step", 0.05, "--out", train])
        run(["sweep", "--eps-r", 2, "--min", 1, "--max", 8.5, "--step", 0.5, "--out", grid])
        return train, grid

    def test_ols(self, tmp_path, sweeps, capsys):
        train, _ = sweeps
        assert run(["train", "--model", "ols", "--data", train, "--out", tmp_path / "m.txt"]) == 0
        assert load_model(tmp_path / "m.txt").slope < 0
        assert "training MSE" in capsys.readouterr().out

    def test_mlp_and_eval(self, tmp_path, sweeps, capsys):
        train, grid = sweeps
        model = tmp_path / "mlp.txt"
        args = ["train", "--model", "mlp", "--data", train, "--hidden", 8, "--seed", 42, "--epochs", 20000,
                "--lr", 0.05, "--out", model]
        assert run(args) == 0
        capsys.readouterr()
        assert run(["eval", "--model", model, "--data", grid, "--out", tmp_path / "r.csv", "--plot"]) == 0
        out = capsys.readouterr().out
        max_err = float(out.split("max error ")[1].split("%")[0])
        assert max_err <= 2.0
        assert (tmp_path / "r_prediction.svg").exists() and (tmp_path / "r_error.svg").exists()

    def test_deterministic(self, tmp_path, sweeps):
        train, _ = sweeps
        for name in ("a.txt", "b.txt"):
            run(["train", "--data", train, "--epochs", 300, "--seed", 7, "--out", tmp_path / name])
        assert (tmp_path / "a.txt").read_bytes() == (tmp_path / "b.txt").read_bytes()

    def test_analytic_predictor(self, tmp_path, sweeps, capsys):
        _, grid = sweeps
        assert run(["eval", "--model", "analytic", "--data", grid, "--out-dir", tmp_path]) == 0
        assert "max error 0.000%" in capsys.readouterr().out

    def test_missing_data(self, tmp_path, capsys):
        missing = tmp_path / "nope.csv"
        assert run(["train", "--model", "ols", "--data", missing, "--out-dir", tmp_path]) == 1
        assert str(missing) in capsys.readouterr().err

    def test_version_mismatch(self, tmp_path, sweeps, capsys):
        _, grid = sweeps
        model = tmp_path / "m.txt"
        model.write_text("txml-model v9\nkind ols\nscaler none\ncoef 1 2\n")
        assert run(["eval", "--model", model, "--data", grid, "--out-dir", tmp_path]) == 1
        err = capsys.readouterr().err
        assert "'v1'" in err and "'v9'" in err

    def test_plot_command(self, tmp_path, sweeps):
        _, grid = sweeps
        run(["eval", "--model", "analytic", "--data", grid, "--out", tmp_path / "r.csv"])
        assert run(["plot", "--report", tmp_path / "r.csv", "--kind", "error", "--out-dir", tmp_path]) == 0
        assert "Absolute Error (Ω)" in (tmp_path / "r_error.svg").read_text()


class TestReproduce:
    def test_unknown_table(self, tmp_path):
        with pytest.raises(SystemExit) as info:
            run(["reproduce", "--table", 3, "--out-dir", tmp_path])
        assert info.value.code == 2

    def test_table_1(self, tmp_path, capsys):
        assert run(["reproduce", "--table", 1, "--out-dir", tmp_path]) == 0
        out = capsys.readouterr().out
        assert "PASS  table 1 actual column" in out
        assert "PASS  table 1 % error cells" in out
        assert "FAIL" not in out
        assert "line implied by printed LR column" in out

    def test_failing_check_exits_nonzero(self, tmp_path, capsys):
        # wrong substrate breaks the actual-column match
        assert run(["reproduce", "--table", 1, "--eps-r", 3, "--epochs", 10, "--out-dir", tmp_path]) == 1
        assert "FAILED: table 1 actual column" in capsys.readouterr().err

    def test_console_script(self, tmp_path):
        proc = subprocess.run(
            [sys.executable, "-m", "txml.cli", "sweep", "--out-dir", str(tmp_path)], capture_output=True, text=True
        )
        assert proc.returncode == 0, proc.stderr


class TestRequiredFlags:
    def test_missing_data_is_usage_error(self, tmp_path):
        with pytest.raises(SystemExit) as info:
            run(["train", "--out-dir", tmp_path])
        assert info.value.code == 2

    def test_config_supplies_required(self, tmp_path):
        run(["sweep", "--min", 1, "--max", 3, "--step", 0.5, "--out", tmp_path / "d.csv"])
        cfg = tmp_path / "t.cfg"
        cfg.write_text(f"model = ols\ndata = {tmp_path / 'd.csv'}\n")
        assert run(["train", "--config", cfg, "--out-dir", tmp_path]) == 0
        assert (tmp_path / "model.txt").exists()
