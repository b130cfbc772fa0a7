#!/usr/bin/env python3
"""
🧮 negmass CLI - scenario runner for the signed-mass workbench
Every command runs one scenario kind and writes CSV tables plus report.json
"""

import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional

# CLI dependencies
try:
    import typer
    from rich.console import Console
    from rich.logging import RichHandler
    from rich.table import Table
    from rich import box
except ImportError as e:
    print(f"❌ CLI dependency not found: {e}")
    print("💡 Install them with: pip install -r cli/requirements.txt")
    sys.exit(1)

project_src = Path(__file__).resolve().parents[2] / "src"
if project_src.is_dir() and str(project_src) not in sys.path:
    sys.path.insert(0, str(project_src))

from negmass.core.config import get_settings
from negmass.core.exceptions import ArgumentError, ConfigurationError, NumericalError
from negmass.models.scenario import Scenario
from negmass.services.scenarios import RunOutcome, run_scenario

app = typer.Typer(
    name="workbench",
    help="🧮 negmass - negative-mass relativistic QM workbench",
    add_completion=False,
)
console = Console()
logger = logging.getLogger("negmass.cli")

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_NUMERICAL = 2

CONFIG_HELP = "JSON scenario file (kind, parameters, seed, output_path)"
SET_HELP = "Override a parameter: dotted.key=value (value parsed as JSON when possible)"
SEED_HELP = "Seed for randomized checks"
OUT_HELP = "Output directory for CSV files and report.json"


def configure_logging(verbose: bool = False):
    """Install a rich handler on the root logger"""
    level = logging.DEBUG if verbose else get_settings().LOG_LEVEL
    root = logging.getLogger()
    root.handlers = [RichHandler(console=console, show_path=False, markup=False)]
    root.setLevel(level)


def load_config(path: Optional[Path]) -> Dict[str, Any]:
    """Read a JSON config; syntax errors are reported with line and column"""
    if path is None:
        return {}
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ConfigurationError(f"cannot read config {path}", [(str(path), str(e))]) from e
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ConfigurationError(
            f"config {path} is not valid JSON",
            [(f"line {e.lineno}, column {e.colno}", e.msg)],
        ) from e
    if not isinstance(data, dict):
        raise ConfigurationError(f"config {path} must contain a JSON object")
    return data


def parse_value(raw: str) -> Any:
    try:
        return json.loads(raw)
    except json.JSONDecodeError:
        return raw


def apply_overrides(data: Dict[str, Any], overrides: List[str]) -> Dict[str, Any]:
    """Apply `dotted.key=value` pairs to the `parameters` map"""
    parameters = data.setdefault("parameters", {})
    if not isinstance(parameters, dict):
        raise ConfigurationError("'parameters' must be an object", [("parameters", "not an object")])
    for item in overrides:
        key, sep, raw = item.partition("=")
        if not sep or not key:
            raise ConfigurationError(f"bad override '{item}'", [("--set", "expected key=value")])
        path = key.split(".")
        node = parameters
        for part in path[:-1]:
            child = node.setdefault(part, {})
            if not isinstance(child, dict):
                raise ConfigurationError(f"cannot override '{key}'", [(key, f"'{part}' is not an object")])
            node = child
        node[path[-1]] = parse_value(raw)
    return data


def show_checks(outcome: RunOutcome):
    """Print a summary table of all checks"""
    if not outcome.checks:
        console.print("[dim]No checks for this scenario[/dim]")
        return
    table = Table(title="📊 Checks", box=box.ROUNDED)
    table.add_column("Check", style="cyan")
    table.add_column("Residual", justify="right")
    table.add_column("Tolerance", justify="right")
    table.add_column("Status", justify="center")
    for check in outcome.checks:
        residual = "n/a" if check.residual is None else f"{check.residual:.3e}"
        status = "[green]✓ pass[/green]" if check.passed else "[red]✗ fail[/red]"
        table.add_row(check.check_name, residual, f"{check.tolerance:.1e}", status)
    console.print(table)


def execute(
    kind: Optional[str],
    config: Optional[Path],
    overrides: Optional[List[str]],
    seed: Optional[int],
    out: Optional[Path],
    verbose: bool,
) -> int:
    """Build the scenario, run it and translate failures into exit codes"""
    configure_logging(verbose)
    try:
        data = apply_overrides(load_config(config), overrides or [])
        if kind is not None:
            if data.get("kind", kind) != kind:
                logger.warning(f"Config kind '{data['kind']}' replaced by command '{kind}'")
            data["kind"] = kind
        elif "kind" not in data:
            raise ConfigurationError("config has no 'kind'", [("kind", "field required")])
        if seed is not None:
            data["seed"] = seed
        scenario = Scenario.load(data)
        outcome = run_scenario(scenario, out)
    except ConfigurationError as e:
        console.print(f"[red]❌ {e}[/red]")
        return EXIT_INVALID
    except ArgumentError as e:
        console.print(f"[red]❌ Invalid argument: {e}[/red]")
        return EXIT_INVALID
    except NumericalError as e:
        console.print(f"[red]❌ Numerical failure: {e} (residual {e.residual:.3e})[/red]")
        return EXIT_NUMERICAL

    show_checks(outcome)
    if outcome.passed:
        console.print(f"[green]✓ {scenario.kind} finished[/green]")
        return EXIT_OK
    console.print(f"[red]✗ {scenario.kind} failed one or more checks[/red]")
    return EXIT_NUMERICAL


def _finish(code: int):
    raise typer.Exit(code=code)


@app.command()
def planewave(
    config: Optional[Path] = typer.Option(None, "--config", "-c", help=CONFIG_HELP),
    overrides: Optional[List[str]] = typer.Option(None, "--set", help=SET_HELP),
    seed: Optional[int] = typer.Option(None, "--seed", help=SEED_HELP),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help=OUT_HELP),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Debug logging"),
):
    """🌊 Plane-wave densities and fluxes"""
    _finish(execute("planewave", config, overrides, seed, out, verbose))


@app.command("evolve-kg")
def evolve_kg(
    config: Optional[Path] = typer.Option(None, "--config", "-c", help=CONFIG_HELP),
    overrides: Optional[List[str]] = typer.Option(None, "--set", help=SET_HELP),
    seed: Optional[int] = typer.Option(None, "--seed", help=SEED_HELP),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help=OUT_HELP),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Debug logging"),
):
    """⏱️ Evolve a Feshbach–Villars packet"""
    _finish(execute("evolve-kg", config, overrides, seed, out, verbose))


@app.command("evolve-dirac")
def evolve_dirac(
    config: Optional[Path] = typer.Option(None, "--config", "-c", help=CONFIG_HELP),
    overrides: Optional[List[str]] = typer.Option(None, "--set", help=SET_HELP),
    seed: Optional[int] = typer.Option(None, "--seed", help=SEED_HELP),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help=OUT_HELP),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Debug logging"),
):
    """⏱️ Evolve an eight-component rest spinor or packet"""
    _finish(execute("evolve-dirac", config, overrides, seed, out, verbose))


@app.command()
def tables(
    config: Optional[Path] = typer.Option(None, "--config", "-c", help=CONFIG_HELP),
    overrides: Optional[List[str]] = typer.Option(None, "--set", help=SET_HELP),
    seed: Optional[int] = typer.Option(None, "--seed", help=SEED_HELP),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help=OUT_HELP),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Debug logging"),
):
    """📋 Amplitude tables and the rest-spinor catalog"""
    _finish(execute("tables", config, overrides, seed, out, verbose))


@app.command()
def phasespace(
    config: Optional[Path] = typer.Option(None, "--config", "-c", help=CONFIG_HELP),
    overrides: Optional[List[str]] = typer.Option(None, "--set", help=SET_HELP),
    seed: Optional[int] = typer.Option(None, "--seed", help=SEED_HELP),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help=OUT_HELP),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Debug logging"),
):
    """🔀 Wigner–Moyal slices and moments of a Gaussian density"""
    _finish(execute("phasespace", config, overrides, seed, out, verbose))


@app.command()
def trajectory(
    config: Optional[Path] = typer.Option(None, "--config", "-c", help=CONFIG_HELP),
    overrides: Optional[List[str]] = typer.Option(None, "--set", help=SET_HELP),
    seed: Optional[int] = typer.Option(None, "--seed", help=SEED_HELP),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help=OUT_HELP),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Debug logging"),
):
    """🧲 Particle/antiparticle tracks in magnetic and gravitational fields"""
    _finish(execute("trajectory", config, overrides, seed, out, verbose))


@app.command()
def verify(
    config: Optional[Path] = typer.Option(None, "--config", "-c", help=CONFIG_HELP),
    overrides: Optional[List[str]] = typer.Option(None, "--set", help=SET_HELP),
    seed: Optional[int] = typer.Option(None, "--seed", help=SEED_HELP),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help=OUT_HELP),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Debug logging"),
):
    """✅ Run the identity suite"""
    _finish(execute("verify", config, overrides, seed, out, verbose))


@app.command()
def run(
    config: Path = typer.Option(..., "--config", "-c", help=CONFIG_HELP),
    overrides: Optional[List[str]] = typer.Option(None, "--set", help=SET_HELP),
    seed: Optional[int] = typer.Option(None, "--seed", help=SEED_HELP),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help=OUT_HELP),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Debug logging"),
):
    """🚀 Run the scenario kind named in the config file"""
    _finish(execute(None, config, overrides, seed, out, verbose))


if __name__ == "__main__":
    app()
