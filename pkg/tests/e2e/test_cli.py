"""
End-to-end tests for the rabi-kinetics command line.
"""

import math

import numpy as np
import pandas as pd
import pytest

from src.rabi_kinetics import __version__
from src.rabi_kinetics.cli import main
from src.rabi_kinetics.cli.commands import COMMAND_REGISTRY, Command, get_command, list_commands
from src.rabi_kinetics.exceptions import QuadratureError
from src.rabi_kinetics.fitting import CavityFitModel, load_trace, save_trace, synthetic_trace
from src.rabi_kinetics.types import SolverConfig


def read_output(path):
    """Return the comment block as a dict and the data as a frame."""
    comments = {}
    for line in path.read_text(encoding="utf-8").splitlines():
        if not line.startswith("#"):
            break
        key, _, value = line[2:].partition(": ")
        comments[key] = value
    return comments, pd.read_csv(path, comment="#")


class TestCommandRegistry:
    """Test cases for the command registry."""

    def test_all_commands_registered(self):
        """Test every figure and analysis command is available."""
        assert set(list_commands()) == {
            "fig1",
            "fig1-inset",
            "fig1b",
            "fig2",
            "fig2a",
            "fig3",
            "bcoeff",
            "kinetics",
            "cavity",
            "fit",
        }

    def test_unknown_command_lookup(self):
        """Test looking up an unknown command lists the available ones."""
        with pytest.raises(ValueError, match="Available:"):
            get_command("fig9")


class TestFigureCommands:
    """Test cases for the figure commands."""

    def test_fig1_columns_and_values(self, tmp_path, capsys):
        """Test fig1 writes |J0| and its envelope."""
        out = tmp_path / "fig1.csv"
        assert main(["fig1", "--tau-max", "20", "--points", "201", "--output", str(out)]) == 0

        comments, frame = read_output(out)
        assert list(frame.columns) == ["tau", "B_over_B0", "envelope"]
        assert len(frame) == 201
        assert frame["B_over_B0"].iloc[0] == pytest.approx(1.0)
        assert math.isnan(frame["envelope"].iloc[0])
        assert out.read_text(encoding="utf-8").splitlines()[len(comments) + 1] == "0,1,"
        assert (frame["B_over_B0"] >= 0).all()
        assert comments["command"] == "fig1"
        assert comments["rabi_kinetics_version"] == __version__
        assert "wrote 201 rows" in capsys.readouterr().out

    def test_fig1_inset_peak(self, tmp_path):
        """Test the monochromatic B coefficient peaks at 3/pi at tau = pi/2."""
        out = tmp_path / "inset.csv"
        code = main(["fig1-inset", "--tau-max", str(math.pi), "--points", "3", "--output", str(out)])
        assert code == 0

        _, frame = read_output(out)
        assert frame["B_over_B0"].iloc[1] == pytest.approx(3 / math.pi, rel=1e-12)
        assert frame["B_over_B0"].iloc[0] == pytest.approx(0.0, abs=1e-15)

    def test_fig2_probabilities(self, tmp_path):
        """Test fig2 columns stay normalized and below the Einstein curve late."""
        out = tmp_path / "fig2.csv"
        assert main(["fig2", "--points", "251", "--output", str(out)]) == 0

        comments, frame = read_output(out)
        assert list(frame.columns) == ["tau", "P1", "P2", "P1_einstein", "P2_einstein"]
        np.testing.assert_allclose(frame["P1"] + frame["P2"], 1.0, atol=1e-9)
        assert frame["P2"].iloc[-1] < frame["P2_einstein"].iloc[-1]
        assert float(comments["a"]) == pytest.approx(0.2393)
        assert float(comments["tau_max"]) == pytest.approx(125.0)

    def test_fig2a_monochromatic_kind(self, tmp_path):
        """Test fig2a records the monochromatic field kind."""
        out = tmp_path / "fig2a.csv"
        assert main(["fig2a", "--tau-max", "30", "--points", "121", "--output", str(out)]) == 0

        comments, frame = read_output(out)
        assert comments["field_kind"] == "monochromatic"
        assert frame["P2"].max() <= 1.0

    def test_fig3_entropy_columns(self, tmp_path, capsys):
        """Test fig3 writes both entropies and reports the drop."""
        out = tmp_path / "fig3.csv"
        assert main(["fig3", "--points", "251", "--output", str(out)]) == 0

        comments, frame = read_output(out)
        assert list(frame.columns) == ["tau", "S", "S_einstein", "S_mono", "S_mono_einstein"]
        assert (frame["S"] <= math.log(2) + 1e-12).all()
        assert float(comments["S_drop_after_max"]) > 0.01
        assert "entropy falls by" in capsys.readouterr().out

    def test_kinetics_without_ode(self, tmp_path):
        """Test --no-ode drops the oracle channel."""
        out = tmp_path / "kin.csv"
        args = ["kinetics", "--tau-max", "20", "--points", "81", "--no-ode", "--output", str(out)]
        assert main(args) == 0

        _, frame = read_output(out)
        assert "P2_ode" not in frame.columns
        assert list(frame.columns) == ["tau", "P2", "P1", "S", "P2_einstein", "P1_einstein", "S_einstein"]

    def test_kinetics_with_ode_agrees(self, tmp_path):
        """Test the oracle channel matches the closed form."""
        out = tmp_path / "kin.csv"
        args = ["kinetics", "--field", "constant", "--tau-max", "20", "--points", "81", "--output", str(out)]
        assert main(args) == 0

        _, frame = read_output(out)
        np.testing.assert_allclose(frame["P2_ode"], frame["P2"], atol=1e-6)

    def test_bcoeff_si_units(self, tmp_path):
        """Test bcoeff writes SI time with the dimensionless ratio."""
        out = tmp_path / "b.csv"
        assert main(["bcoeff", "--points", "101", "--output", str(out)]) == 0

        comments, frame = read_output(out)
        assert list(frame.columns) == ["t_seconds", "tau", "B", "B_over_B0"]
        B0 = float(comments["B0"])
        np.testing.assert_allclose(frame["B"] / B0, frame["B_over_B0"], rtol=1e-12)
        assert frame["tau"].iloc[-1] == pytest.approx(12 * 2 * math.pi)

    def test_cavity_metadata(self, tmp_path):
        """Test cavity reports the long-time average and rates."""
        out = tmp_path / "cav.csv"
        assert main(["cavity", "--tau-max", "10", "--points", "21", "--output", str(out)]) == 0

        comments, frame = read_output(out)
        assert list(frame.columns) == ["tau", "t_seconds", "p2"]
        assert float(comments["long_time_average"]) == pytest.approx(0.5, abs=0.01)
        assert frame["p2"].iloc[0] == pytest.approx(0.0, abs=1e-9)
        assert ((frame["p2"] >= -1e-9) & (frame["p2"] <= 1 + 1e-9)).all()


class TestDeterminism:
    """Test cases for reproducible output."""

    def test_byte_identical_runs(self, tmp_path):
        """Test two runs with the same parameters write identical files."""
        first = tmp_path / "a.csv"
        second = tmp_path / "b.csv"
        for out in (first, second):
            assert main(["fig2", "--tau-max", "40", "--points", "161", "--output", str(out)]) == 0

        assert first.read_bytes() == second.read_bytes()

    def test_default_output_name(self, tmp_path, monkeypatch):
        """Test the output defaults to <command>.csv in the working directory."""
        monkeypatch.chdir(tmp_path)
        assert main(["fig1", "--tau-max", "5", "--points", "11"]) == 0
        assert (tmp_path / "fig1.csv").exists()


class TestFitCommand:
    """Test cases for the fit command."""

    def test_self_test_recovers_rate(self, tmp_path, capsys):
        """Test the self-test recovers the decay rate from exact data."""
        out = tmp_path / "fit.csv"
        args = ["fit", "--self-test", "--noise", "0", "--points", "20", "--output", str(out)]
        assert main(args) == 0

        comments, frame = read_output(out)
        assert list(frame.columns) == ["t_seconds", "p2", "p2_fit"]
        assert float(comments["fit_relative_error"]) < 1e-3
        assert "relative error" in capsys.readouterr().out

    def test_fit_trace_file(self, tmp_path):
        """Test fitting a trace written to disk."""
        config = SolverConfig(fit_quad_tol=1e-9)
        trace = synthetic_trace(CavityFitModel.brune(), 1e6, points=30, noise=0.01, seed=3, config=config)
        trace_path = tmp_path / "trace.csv"
        save_trace(trace, trace_path)

        out = tmp_path / "fit.csv"
        assert main(["fit", "--trace", str(trace_path), "--output", str(out)]) == 0

        comments, frame = read_output(out)
        assert "sigma" in frame.columns
        assert float(comments["fit_A_hat"]) == pytest.approx(1e6, rel=0.05)

    def test_self_test_trace_round_trips(self, tmp_path):
        """Test the saved self-test trace loads back into the fitted rows."""
        out = tmp_path / "fit.csv"
        trace_path = tmp_path / "synthetic.csv"
        args = ["fit", "--self-test", "--points", "12", "--trace-output", str(trace_path), "--output", str(out)]
        assert main(args) == 0

        _, frame = read_output(out)
        loaded = load_trace(trace_path)
        np.testing.assert_array_equal(loaded.t, frame["t_seconds"].to_numpy())
        np.testing.assert_array_equal(loaded.p, frame["p2"].to_numpy())

    def test_fit_needs_one_source(self, tmp_path, capsys):
        """Test fit without a trace or --self-test is rejected."""
        assert main(["fit", "--output", str(tmp_path / "x.csv")]) == 2
        assert "trace or self_test" in capsys.readouterr().err

    def test_missing_trace_file(self, tmp_path):
        """Test a missing trace file exits with an input error."""
        assert main(["fit", "--trace", str(tmp_path / "missing.csv")]) == 2

    def test_malformed_trace(self, tmp_path, capsys):
        """Test a malformed trace row is reported with its line number."""
        trace_path = tmp_path / "bad.csv"
        trace_path.write_text("t_seconds,p2\n1e-6,0.1\n2e-6,abc\n", encoding="utf-8")
        assert main(["fit", "--trace", str(trace_path), "--output", str(tmp_path / "x.csv")]) == 2
        assert "line 3" in capsys.readouterr().err


class TestExitCodes:
    """Test cases for exit codes."""

    def test_invalid_parameter_value(self, tmp_path, capsys):
        """Test an out-of-range value exits 2 and names the key."""
        assert main(["fig2", "--points", "1", "--output", str(tmp_path / "x.csv")]) == 2
        assert "points" in capsys.readouterr().err

    def test_non_numeric_value(self, tmp_path, capsys):
        """Test a non-numeric value exits 2."""
        assert main(["fig2", "--a", "abc", "--output", str(tmp_path / "x.csv")]) == 2
        assert "a:" in capsys.readouterr().err

    def test_unknown_flag(self):
        """Test an unknown flag exits 2."""
        assert main(["fig2", "--frobnicate", "1"]) == 2

    def test_unknown_command(self):
        """Test an unknown subcommand exits 2."""
        assert main(["fig9"]) == 2

    def test_dark_transition(self, tmp_path):
        """Test bcoeff rejects a zero dipole moment."""
        assert main(["bcoeff", "--mu12", "0", "--output", str(tmp_path / "x.csv")]) == 2

    def test_quadrature_failure_exit_code(self, tmp_path, monkeypatch, capsys):
        """Test a numerical tolerance failure exits 3."""
        original = get_command("fig1")

        def failing(params):
            raise QuadratureError(1e-3, 1e-8, context="test integral")

        monkeypatch.setitem(
            COMMAND_REGISTRY,
            "fig1",
            Command(name="fig1", help=original.help, params=original.params, run=failing),
        )
        assert main(["fig1", "--output", str(tmp_path / "x.csv")]) == 3
        assert "QUADRATURE_TOLERANCE" in capsys.readouterr().err

    def test_version_flag(self, capsys):
        """Test --version prints the package version and exits 0."""
        assert main(["--version"]) == 0
        assert __version__ in capsys.readouterr().out
