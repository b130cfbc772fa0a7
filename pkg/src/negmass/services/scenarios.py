"""
Scenario runner: validates a Scenario, dispatches it to the library and
persists the resulting tables plus report.json.
"""
import logging
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional

import numpy as np
import pandas as pd

from ..core.config import get_settings
from ..core.exceptions import NumericalError
from ..core.grid import GridSpec
from ..evolution import EvolutionConfig, EvolutionReport, discrete_phase, evolve
from ..models.scenario import (
  EvolveDiracParams,
  EvolveKGParams,
  PhaseSpaceParams,
  PlaneWaveParams,
  Scenario,
  TablesParams,
  TrajectoryParams,
  VerifyParams,
)
from ..models.states import PlaneWave, PointParticle
from ..phase_space import (
  delta_stencil,
  four_momentum_expectation,
  free_equation_residual,
  gaussian_density,
  momentum_expectation,
  relativistic_free_residual,
  wigner_moyal_transform,
)
from ..trajectories import pair_gravity, pair_magnetic, summarize, trajectory_frame
from ..waves import (
  density_em,
  density_free,
  dirac_packet,
  flux_em,
  flux_free,
  kg_amplitude_table,
  kg_density,
  kg_packet,
  rest_catalog,
  rest_state,
)
from ..waves.catalog import catalog_entry
from ..waves.dirac import dirac_density
from .report import CheckResult, emit_report
from .storage import ArtifactStorage
from .verification import check_catalog, check_tables, known_discrepancies, run_checks
from .verification import table_rows

logger = logging.getLogger(__name__)


@dataclass
class RunOutcome:
  """Result of one scenario: the report document and the process exit code."""
  report: Dict[str, Any]
  exit_code: int
  checks: List[CheckResult] = field(default_factory=list)

  @property
  def passed(self) -> bool:
    return self.exit_code == 0


@dataclass
class _KindResult:
  checks: List[CheckResult] = field(default_factory=list)
  grid: Optional[GridSpec] = None
  discrepancies: List[dict] = field(default_factory=list)


class ScenarioRunner:
  """Runs scenarios of every kind against one output directory."""

  def __init__(self, storage: ArtifactStorage):
    self.storage = storage
    self.handlers: Dict[str, Callable[[Any, int], _KindResult]] = {
      "planewave": self._planewave,
      "evolve-kg": self._evolve_kg,
      "evolve-dirac": self._evolve_dirac,
      "tables": self._tables,
      "phasespace": self._phasespace,
      "trajectory": self._trajectory,
      "verify": self._verify,
    }

  def run(self, scenario: Scenario) -> RunOutcome:
    params = scenario.params()
    seed = get_settings().DEFAULT_SEED if scenario.seed is None else scenario.seed
    logger.info(f"🚀 Running scenario '{scenario.kind}' (seed {seed})")

    try:
      result = self.handlers[scenario.kind](params, seed)
    except NumericalError as exc:
      logger.error(f"❌ Numerical failure in '{scenario.kind}': {exc}")
      tolerance = exc.tolerance if exc.tolerance is not None else 0.0
      residual = exc.residual if math.isfinite(exc.residual) else None
      result = _KindResult(checks=[CheckResult(check_name=f"{scenario.kind}_numerical",
                                               residual=residual, tolerance=tolerance,
                                               passed=False)])

    grid = result.grid.describe() if result.grid is not None else None
    # report.json lists itself among the artifacts
    artifacts = sorted(set(self.storage.artifacts()) | {"report.json"})
    report = emit_report(
      result.checks,
      kind=scenario.kind,
      seed=seed,
      grid=grid,
      parameters=params.model_dump(mode="json", by_alias=True),
      discrepancies=result.discrepancies,
      artifacts=artifacts,
    )
    self.storage.write_json("report.json", report)
    exit_code = 0 if report["passed"] else 2
    if exit_code:
      failed = [check.check_name for check in result.checks if not check.passed]
      logger.warning(f"⚠️ Scenario '{scenario.kind}' failed checks: {failed}")
    else:
      logger.info(f"✅ Scenario '{scenario.kind}' passed {len(result.checks)} checks")
    return RunOutcome(report=report, exit_code=exit_code, checks=result.checks)

  def _planewave(self, params: PlaneWaveParams, seed: int) -> _KindResult:
    rows = []
    deviation = 0.0
    for v in params.v:
      wave = PlaneWave(lam=params.lam, m=params.m, v=v)
      row = {
        "lambda": params.lam,
        "m": params.m,
        "v": v,
        "gamma": wave.gamma,
        "energy": wave.energy,
        "momentum": wave.momentum,
        "rho": density_free(wave),
        "j": flux_free(wave),
        "rho_em": density_em(wave, params.phi, params.e),
        "j_em": flux_em(wave, params.a, params.e),
        "e": params.e,
        "phi": params.phi,
        "a": params.a,
      }
      oracle = (wave.gamma, params.lam * v,
                wave.gamma - params.lam * params.e * params.phi / params.m,
                params.lam * v - params.e * params.a / params.m)
      computed = (row["rho"], row["j"], row["rho_em"], row["j_em"])
      deviation = max(deviation, max(abs(c - o) for c, o in zip(computed, oracle)))
      rows.append(row)
    self.storage.write_csv("planewave.csv", pd.DataFrame(rows))
    return _KindResult(checks=[CheckResult.upper_bound("planewave_closed_forms", deviation, 1e-12)])

  def _evolution_frame(self, report: EvolutionReport, record_every: int) -> pd.DataFrame:
    rows = [{"step": 0, "t": 0.0, "signed_norm": report.initial_norm,
             "continuity_residual": 0.0}]
    rows.extend(row for row in report.history if row["step"] % record_every == 0)
    return pd.DataFrame(rows, columns=["step", "t", "signed_norm", "continuity_residual"])

  def _evolve_kg(self, params: EvolveKGParams, seed: int) -> _KindResult:
    settings = get_settings()
    grid = params.grid
    state = kg_packet(grid, params.m, params.k0, params.sigma, params.x_c, params.branch, params.e)
    cfg = EvolutionConfig(dt=params.dt, steps=params.steps, method=params.method,
                          tolerance=params.tolerance)
    final, report = evolve(state, params.fields.to_em(), cfg)

    self.storage.write_csv("evolution.csv", self._evolution_frame(report, params.record_every))
    self.storage.write_csv("final_state.csv", pd.DataFrame({
      "x": grid.x,
      "phi1": final.phi1,
      "phi2": final.phi2,
      "density": kg_density(final),
    }))
    checks = [
      CheckResult.upper_bound("signed_norm_drift", report.max_norm_drift, 1e-8),
      CheckResult.upper_bound("continuity_residual", report.max_continuity_residual,
                              settings.CONTINUITY_TOLERANCE),
    ]
    return _KindResult(checks=checks, grid=grid)

  def _evolve_dirac(self, params: EvolveDiracParams, seed: int) -> _KindResult:
    grid = params.grid
    em = params.fields.to_em()
    cfg = EvolutionConfig(dt=params.dt, steps=params.steps, method=params.method,
                          tolerance=params.tolerance)
    checks: List[CheckResult] = []

    if params.state == "rest":
      entry = catalog_entry(params.family, params.spin, params.kind)
      state = rest_state(entry, grid, params.m, 0.0, params.e)
      final, report = evolve(state, em, cfg)
      slot = entry.basis_index - 1
      if em.sample(grid).is_free:
        # e_k·exp(phase·i|m|t) is an eigenmode with ω = −phase·|m|
        omega = -entry.phase_sign * abs(params.m)
        expected = state.psi[slot] * discrete_phase(omega, params.dt, params.method) ** params.steps
        phase_error = float(np.max(np.abs(final.psi[slot] - expected)))
        checks.append(CheckResult.upper_bound("rest_phase", phase_error, 1e-10))
      else:
        logger.info("Rest-phase check skipped: fields are present")
      others = np.delete(final.psi, slot, axis=0)
      checks.append(CheckResult.upper_bound("rest_block_leakage", float(np.max(np.abs(others))),
                                            1e-10))
      logger.info(f"Evolved rest spinor {entry.notation}")
    else:
      state = dirac_packet(grid, params.m, params.k0, params.sigma, params.x_c,
                           params.phi_spinor, params.chi_spinor, params.branch, params.e)
      final, report = evolve(state, em, cfg)
      checks.append(CheckResult.upper_bound(
          "final_state_finite", 0.0 if np.all(np.isfinite(final.psi)) else math.inf, 0.0))

    self.storage.write_csv("evolution.csv", self._evolution_frame(report, params.record_every))
    columns: Dict[str, Any] = {"x": grid.x}
    for index in range(8):
      columns[f"psi{index + 1}"] = final.psi[index]
    columns["density"] = dirac_density(final)
    self.storage.write_csv("final_state.csv", pd.DataFrame(columns))
    return _KindResult(checks=checks, grid=grid)

  def _tables(self, params: TablesParams, seed: int) -> _KindResult:
    kg_amplitudes = pd.DataFrame(kg_amplitude_table())
    self.storage.write_csv("kg_amplitudes.csv", kg_amplitudes[
        ["label", "basis", "phase", "mass", "charge", "amplitude", "component"]])
    rows = table_rows()
    self.storage.write_csv("spin_amplitudes.csv", pd.DataFrame(
        rows["spin_amplitudes"], columns=["mass", "charge", "spin", "amplitude"]))
    self.storage.write_csv("annihilation.csv", pd.DataFrame(
        rows["annihilation"], columns=["source", "c1_partner", "c1_photon_spin", "c2_partner",
                                       "c2_photon_spin"]))
    self.storage.write_csv("catalog.csv", pd.DataFrame([
      {
        "family": entry.family,
        "notation": entry.notation,
        "basis": f"e{entry.basis_index}",
        "phase": "-" if entry.phase_sign < 0 else "+",
        "spin_projection": entry.label.spin_projection,
        "parity": entry.label.spin_parity,
      }
      for entry in rest_catalog()
    ]))
    rng = np.random.default_rng(seed)
    checks = check_tables(rng, 0) + check_catalog(rng, 0)
    return _KindResult(checks=checks, discrepancies=known_discrepancies())

  def _phasespace(self, params: PhaseSpaceParams, seed: int) -> _KindResult:
    x = params.dx * (np.arange(params.n_x) - params.n_x // 2)
    count = int(round((params.p_max - params.p_min) / params.dp)) + 1
    p = np.linspace(params.p_min, params.p_max, count)
    F = gaussian_density(x, p, params.x0, params.sigma_x, params.p0, params.sigma_p)

    delta = np.linspace(-params.delta_max, params.delta_max, params.n_delta)
    plus = wigner_moyal_transform(F, delta, "+")
    minus = wigner_moyal_transform(F, delta, "-")
    xx, dd = np.meshgrid(x, delta, indexing="ij")
    self.storage.write_csv("phasespace_slice.csv", pd.DataFrame({
      "x": xx.ravel(),
      "delta": dd.ravel(),
      "rho_plus": plus.values.ravel(),
      "rho_minus": minus.values.ravel(),
    }))

    stencil = delta_stencil(params.h)
    plus_stencil = wigner_moyal_transform(F, stencil, "+")
    minus_stencil = wigner_moyal_transform(F, stencil, "-")
    p_plus = momentum_expectation(plus_stencil, 1)
    p_reversed = momentum_expectation(minus_stencil, 1)
    p_restored = momentum_expectation(minus_stencil, -1)
    energy, p_relativistic = four_momentum_expectation(F, params.m, 1, "+", params.h)
    residual_plus = free_equation_residual(F, params.m, params.dt, "+", 1, stencil)
    residual_minus = free_equation_residual(F, params.m, params.dt, "-", 1, stencil)
    residual_relativistic = relativistic_free_residual(F, params.m, params.dt, params.h)

    moments = {
      "p_orientation_plus": p_plus,
      "p_orientation_minus": p_reversed,
      "p_orientation_minus_restored": p_restored,
      "p_mean_direct": float(np.sum(F.marginal_p() * p) * F.dp),
      "relativistic_energy": energy,
      "relativistic_momentum": p_relativistic,
      "free_residual_plus": residual_plus,
      "free_residual_minus": residual_minus,
      "relativistic_free_residual": residual_relativistic,
    }
    self.storage.write_csv("phasespace_moments.csv", pd.DataFrame(
        {"quantity": list(moments), "value": list(moments.values())}))

    symmetry = abs(residual_plus - residual_minus) / max(residual_plus, 1e-300)
    checks = [
      CheckResult.upper_bound("momentum_orientation_plus", abs(p_plus - params.p0), 1e-6),
      CheckResult.upper_bound("momentum_orientation_minus_reversed",
                              abs(p_reversed + params.p0), 1e-6),
      CheckResult.upper_bound("momentum_lambda_restored", abs(p_restored - params.p0), 1e-6),
      CheckResult.upper_bound("free_residual_orientation_symmetry", symmetry, 1e-8),
    ]
    return _KindResult(checks=checks)

  def _trajectory(self, params: TrajectoryParams, seed: int) -> _KindResult:
    particle = PointParticle(m=params.m, e=params.e, x=params.x, v=params.v)
    tracks = []
    checks: List[CheckResult] = []
    if params.mode in ("magnetic", "both"):
      p_track, a_track = pair_magnetic(particle, params.b, params.t_end, params.dt)
      p_track.label, a_track.label = "magnetic/particle", "magnetic/antiparticle"
      tracks.extend([p_track, a_track])
      if p_track.omega is not None and a_track.omega is not None and p_track.omega != 0.0:
        checks.append(CheckResult.upper_bound(
            "magnetic_omega_opposite",
            abs(p_track.omega + a_track.omega) / abs(p_track.omega), 1e-9))
        checks.append(CheckResult.upper_bound(
            "magnetic_radius_equal",
            abs(p_track.radius - a_track.radius) / p_track.radius, 1e-9))
    if params.mode in ("gravity", "both"):
      p_track, a_track = pair_gravity(particle, params.g, params.t_end, params.dt)
      p_track.label, a_track.label = "gravity/particle", "gravity/antiparticle"
      tracks.extend([p_track, a_track])
      reversal = float(np.max(np.abs(a_track.velocity[0] + p_track.velocity[0])))
      checks.append(CheckResult.upper_bound("gravity_velocity_reversal", reversal, 0.0))

    self.storage.write_csv("trajectories.csv", trajectory_frame(tracks))
    summary = pd.DataFrame(summarize(tracks))
    summary["notes"] = summary["notes"].map("; ".join)
    self.storage.write_csv("trajectory_summary.csv", summary)
    return _KindResult(checks=checks)

  def _verify(self, params: VerifyParams, seed: int) -> _KindResult:
    results = run_checks(params.checks, seed, params.samples, params.include_slow)
    return _KindResult(checks=results, discrepancies=known_discrepancies())


def run_scenario(scenario: Scenario, output_dir: Optional[Path] = None) -> RunOutcome:
  """Run one scenario into `output_dir` (or the scenario's own output path)."""
  target = output_dir or (Path(scenario.output_path) if scenario.output_path else None)
  runner = ScenarioRunner(ArtifactStorage(target))
  return runner.run(scenario)
