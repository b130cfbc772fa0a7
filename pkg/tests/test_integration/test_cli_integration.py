"""
Integration tests for the workbench CLI.

Testing:
✅ Exit codes: 0 success, 1 invalid input, 2 failed checks
✅ --config, --set, --seed and --out handling
✅ Files written by each command

Not testing:
❌ Rich formatting of the console output
"""
import json
import logging

import pandas as pd
import pytest
from typer.testing import CliRunner

from cli.src.main import app, apply_overrides, load_config
from negmass.core.config import get_settings
from negmass.core.exceptions import ConfigurationError


@pytest.fixture
def cli():
    return CliRunner()


@pytest.fixture(autouse=True)
def restore_logging():
    """The CLI installs its own handler on the root logger."""
    root = logging.getLogger()
    handlers, level = list(root.handlers), root.level
    yield
    root.handlers = handlers
    root.setLevel(level)


SMALL_KG = ["--set", "grid.n=64", "--set", "grid.dx=0.5", "--set", "grid.scheme=spectral",
            "--set", "steps=10"]


@pytest.mark.integration
class TestExitCodes:
    """Test suite for process exit codes."""

    def test_planewave_success(self, cli, output_dir):
        result = cli.invoke(app, ["planewave", "--set", "lambda=-1", "--set", "v=0.6",
                                  "--out", str(output_dir)])
        assert result.exit_code == 0, result.output
        frame = pd.read_csv(output_dir / "planewave.csv")
        assert frame["rho"].iloc[0] == pytest.approx(1.25, abs=1e-12)
        assert frame["j"].iloc[0] == pytest.approx(-0.6, abs=1e-12)

    def test_malformed_json(self, cli, write_config, output_dir):
        path = write_config('{"kind": "tables",')
        result = cli.invoke(app, ["run", "--config", str(path), "--out", str(output_dir)])
        assert result.exit_code == 1
        assert "line 1" in result.output

    def test_unknown_parameter(self, cli, output_dir):
        result = cli.invoke(app, ["planewave", "--set", "speed=0.3", "--out", str(output_dir)])
        assert result.exit_code == 1
        assert "parameters.speed" in result.output
        assert not (output_dir / "report.json").exists()

    def test_bad_override_syntax(self, cli, output_dir):
        result = cli.invoke(app, ["planewave", "--set", "v", "--out", str(output_dir)])
        assert result.exit_code == 1

    def test_unstable_step_is_invalid(self, cli, output_dir):
        result = cli.invoke(app, ["evolve-kg", *SMALL_KG, "--set", "method=explicit-rk4",
                                  "--set", "dt=1.0", "--out", str(output_dir)])
        assert result.exit_code == 1

    def test_failed_check(self, cli, output_dir, monkeypatch):
        monkeypatch.setenv("NEGMASS_CONTINUITY_TOLERANCE", "1e-30")
        get_settings.cache_clear()
        result = cli.invoke(app, ["evolve-kg", *SMALL_KG, "--out", str(output_dir)])
        assert result.exit_code == 2
        report = json.loads((output_dir / "report.json").read_text())
        assert report["passed"] is False


@pytest.mark.integration
class TestCommands:
    """Test suite for the individual commands."""

    def test_run_uses_config_kind(self, cli, write_config, output_dir):
        path = write_config({"kind": "tables", "seed": 3})
        result = cli.invoke(app, ["run", "-c", str(path), "-o", str(output_dir)])
        assert result.exit_code == 0, result.output
        report = json.loads((output_dir / "report.json").read_text())
        assert report["kind"] == "tables"
        assert report["seed"] == 3

    def test_command_overrides_config_kind(self, cli, write_config, output_dir):
        path = write_config({"kind": "tables", "parameters": {}})
        result = cli.invoke(app, ["planewave", "-c", str(path), "-o", str(output_dir)])
        assert result.exit_code == 0, result.output
        assert (output_dir / "planewave.csv").exists()

    def test_seed_option(self, cli, output_dir):
        result = cli.invoke(app, ["trajectory", "--set", "mode=gravity", "--seed", "9",
                                  "-o", str(output_dir)])
        assert result.exit_code == 0, result.output
        assert json.loads((output_dir / "report.json").read_text())["seed"] == 9

    def test_evolve_kg(self, cli, output_dir):
        result = cli.invoke(app, ["evolve-kg", *SMALL_KG, "--out", str(output_dir)])
        assert result.exit_code == 0, result.output
        assert (output_dir / "final_state.csv").exists()

    def test_verify_fast(self, cli, output_dir):
        result = cli.invoke(app, ["verify", "--set", "include_slow=false", "--set", "samples=3",
                                  "--out", str(output_dir)])
        assert result.exit_code == 0, result.output
        assert json.loads((output_dir / "report.json").read_text())["passed"] is True


class TestConfigHelpers:
    """Test suite for config loading and overrides."""

    def test_missing_config_is_empty(self):
        assert load_config(None) == {}

    def test_config_must_be_object(self, write_config):
        with pytest.raises(ConfigurationError):
            load_config(write_config("[1, 2]"))

    def test_dotted_overrides(self):
        data = apply_overrides({"kind": "evolve-kg"}, ["grid.n=32", "method=explicit-rk4"])
        assert data["parameters"] == {"grid": {"n": 32}, "method": "explicit-rk4"}

    def test_override_through_scalar(self):
        with pytest.raises(ConfigurationError):
            apply_overrides({"parameters": {"grid": 3}}, ["grid.n=32"])
