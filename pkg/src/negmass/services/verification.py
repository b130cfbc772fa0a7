"""
Identity suite: one named check per reproducible claim of the workbench.

Every check draws from a numpy Generator seeded by the caller, so a given
(seed, samples) pair always produces the same report.
"""
import logging
import math
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..algebra.spinors import conjugation_discrepancy
from ..core.config import get_settings
from ..core.exceptions import ArgumentError
from ..core.fields import EMConfig
from ..core.grid import GridSpec
from ..evolution import EvolutionConfig, evolve
from ..models.states import PlaneWave, PointParticle
from ..phase_space import delta_stencil, energy_density, gaussian_density, momentum_expectation
from ..phase_space import wigner_moyal_transform
from ..trajectories import gravity_energy, gyro_period, pair_gravity, pair_magnetic
from ..waves import (
  annihilation_table,
  catalog_aliases,
  density_em,
  density_free,
  dirac_decompose,
  family_parities,
  flux_em,
  flux_free,
  fv_decompose,
  kg_amplitude_table,
  kg_packet,
  kg_spectrum,
  spin_table,
)
from ..waves.dirac import density_forms, dirac_c1_residual, dirac_c2_residual
from ..waves.dirac import dirac_equation_residual, dirac_momentum_hamiltonian
from ..waves.feshbach_villars import kg_conjugate_residual, kg_momentum_hamiltonian
from .report import CheckResult

logger = logging.getLogger(__name__)

EXPECTED_KG_AMPLITUDES = [
  ("+", "+", "χ1"),
  ("+", "-", "χ2†"),
  ("-", "-", "χ1†"),
  ("-", "+", "χ2"),
]

EXPECTED_SPIN_AMPLITUDES = [
  ("+", "+", "↑", "φ1"),
  ("+", "+", "↓", "χ1"),
  ("+", "-", "↑", "χ2†"),
  ("+", "-", "↓", "φ2†"),
  ("-", "+", "↑", "φ2"),
  ("-", "+", "↓", "χ2"),
  ("-", "-", "↑", "χ1†"),
  ("-", "-", "↓", "φ1†"),
]

EXPECTED_ANNIHILATION = [
  ("u0↑(+)^(P,+)", "μ0↓(+)^(A,-)", "0", "ω0↑(-)^(A,-)", "+1"),
  ("u0↓(+)^(P,+)", "μ0↑(+)^(A,-)", "0", "ω0↓(-)^(A,-)", "-1"),
  ("u0↓(+)^(A,+)", "μ0↑(+)^(P,-)", "0", "ω0↓(-)^(P,-)", "-1"),
  ("u0↑(+)^(A,+)", "μ0↓(+)^(P,-)", "0", "ω0↑(-)^(P,-)", "+1"),
  ("v0↑(-)^(P,+)", "ν0↓(-)^(A,-)", "0", "η0↑(+)^(A,-)", "+1"),
  ("v0↓(-)^(P,+)", "ν0↑(-)^(A,-)", "0", "η0↓(+)^(A,-)", "-1"),
  ("v0↓(-)^(A,+)", "ν0↑(-)^(P,-)", "0", "η0↓(+)^(P,-)", "-1"),
  ("v0↑(-)^(A,+)", "ν0↓(-)^(P,-)", "0", "η0↑(+)^(P,-)", "+1"),
]

ACCEPTANCE_GRID = GridSpec(n=256, dx=0.25, scheme="spectral")
CONVERGENCE_GRID = GridSpec(n=128, dx=0.5, scheme="spectral")
CONJUGATION_GRID = GridSpec(n=32, dx=0.5, scheme="spectral")

Check = Callable[[np.random.Generator, int], List[CheckResult]]


def _mismatches(rows: Sequence[tuple], expected: Sequence[tuple]) -> int:
  if len(rows) != len(expected):
    return max(len(rows), len(expected))
  return sum(1 for row, want in zip(rows, expected) if tuple(row) != tuple(want))


def table_rows() -> Dict[str, List[tuple]]:
  kg_amplitudes = [(r["mass"], r["charge"], r["amplitude"]) for r in kg_amplitude_table()]
  spin_amplitudes = [(r["mass"], r["charge"], r["spin"], r["amplitude"]) for r in spin_table()]
  annihilation = [(r["source"], r["c1_partner"], r["c1_photon_spin"], r["c2_partner"],
                   r["c2_photon_spin"]) for r in annihilation_table()]
  return {
    "kg_amplitudes": kg_amplitudes,
    "spin_amplitudes": spin_amplitudes,
    "annihilation": annihilation,
  }


def check_tables(rng: np.random.Generator, samples: int) -> List[CheckResult]:
  rows = table_rows()
  expected = {
    "kg_amplitudes": EXPECTED_KG_AMPLITUDES,
    "spin_amplitudes": EXPECTED_SPIN_AMPLITUDES,
    "annihilation": EXPECTED_ANNIHILATION,
  }
  return [CheckResult.upper_bound(f"{name}_rows", float(_mismatches(rows[name], want)), 0.0)
          for name, want in expected.items()]


def check_catalog(rng: np.random.Generator, samples: int) -> List[CheckResult]:
  parities = family_parities()
  same_spin = [row["same_spin_holds"] for row in catalog_aliases()]
  return [
    CheckResult.upper_bound("catalog_parity", float(sum(not ok for ok in parities.values())), 0.0),
    CheckResult.upper_bound("catalog_same_spin_aliases", float(sum(not ok for ok in same_spin)), 0.0),
  ]


def random_dirac_superposition(rng: np.random.Generator, grid: GridSpec, m: float,
                               modes: int = 3) -> Tuple[np.ndarray, np.ndarray]:
  """Sum of free eigenmodes on resolved grid wavenumbers, with its exact time derivative."""
  k_all = grid.wavenumbers
  usable = np.flatnonzero(np.abs(k_all) <= 0.25 * np.max(np.abs(k_all)))
  psi = np.zeros((8, grid.n), dtype=complex)
  psi_t = np.zeros_like(psi)
  for _ in range(modes):
    k = float(k_all[rng.choice(usable)])
    frequencies, vectors = np.linalg.eig(dirac_momentum_hamiltonian(k, m))
    j = int(rng.integers(8))
    amplitude = complex(rng.normal(), rng.normal())
    mode = np.outer(vectors[:, j], np.exp(1j * k * grid.x))
    psi += amplitude * mode
    psi_t += -1j * frequencies[j] * amplitude * mode
  return psi, psi_t


def random_kg_superposition(rng: np.random.Generator, grid: GridSpec, m: float,
                            modes: int = 3) -> Tuple[np.ndarray, np.ndarray]:
  k_all = grid.wavenumbers
  usable = np.flatnonzero(np.abs(k_all) <= 0.25 * np.max(np.abs(k_all)))
  psi = np.zeros((2, grid.n), dtype=complex)
  psi_t = np.zeros_like(psi)
  for _ in range(modes):
    k = float(k_all[rng.choice(usable)])
    frequencies, vectors = np.linalg.eig(kg_momentum_hamiltonian(k, m))
    j = int(rng.integers(2))
    amplitude = complex(rng.normal(), rng.normal())
    mode = np.outer(vectors[:, j], np.exp(1j * k * grid.x))
    psi += amplitude * mode
    psi_t += -1j * frequencies[j] * amplitude * mode
  return psi, psi_t


def _random_mass(rng: np.random.Generator) -> float:
  return float(rng.choice([-1.0, 1.0]) * rng.uniform(0.5, 2.0))


def check_conjugations(rng: np.random.Generator, samples: int) -> List[CheckResult]:
  tol = get_settings().CONJUGATION_TOLERANCE
  em = EMConfig.free()
  grid = CONJUGATION_GRID
  base = c1 = c2 = kg = 0.0
  for _ in range(samples):
    m = _random_mass(rng)
    psi, psi_t = random_dirac_superposition(rng, grid, m)
    base = max(base, dirac_equation_residual(psi, psi_t, grid, m, 0.0, em))
    c1 = max(c1, dirac_c1_residual(psi, psi_t, grid, m, 0.0, em))
    c2 = max(c2, dirac_c2_residual(psi, psi_t, grid, m, 0.0, em))
    fv, fv_t = random_kg_superposition(rng, grid, m)
    kg = max(kg, kg_conjugate_residual(fv, fv_t, grid, m, 0.0, em))
  return [
    CheckResult.upper_bound("dirac_superposition_residual", base, tol),
    CheckResult.upper_bound("conjugation_c1_residual", c1, tol),
    CheckResult.upper_bound("conjugation_c2_residual", c2, tol),
    CheckResult.upper_bound("kg_conjugation_residual", kg, tol),
  ]


def check_density_equivalence(rng: np.random.Generator, samples: int) -> List[CheckResult]:
  count = 10 * samples
  psi = rng.normal(size=(8, count)) + 1j * rng.normal(size=(8, count))
  matrix_form, component_form = density_forms(psi)
  deviation = float(np.max(np.abs(matrix_form - component_form)))
  return [CheckResult.upper_bound("density_equivalence", deviation,
                                  get_settings().DENSITY_TOLERANCE)]


def check_fv_spectrum(rng: np.random.Generator, samples: int) -> List[CheckResult]:
  worst = 0.0
  for _ in range(samples):
    k = float(rng.uniform(-3.0, 3.0))
    m = _random_mass(rng)
    omega = math.sqrt(k * k + m * m)
    eigenvalues = kg_spectrum(k, m)
    worst = max(worst, float(np.max(np.abs(eigenvalues - np.array([-omega, omega])))) / omega)
  return [CheckResult.upper_bound("fv_spectrum", worst, 1e-12)]


def check_rest_round_trip(rng: np.random.Generator, samples: int) -> List[CheckResult]:
  grid = GridSpec(n=16, dx=1.0)
  m = 1.3
  t = float(rng.uniform(0.0, 2.0))
  leakage = 0.0
  for sign, empty in ((-1, 1), (1, 0)):
    phi = np.full(grid.n, np.exp(sign * 1j * m * t))
    state = fv_decompose(phi, sign * 1j * m * phi, grid, m)
    leakage = max(leakage, float(np.max(np.abs(state.psi[empty]))))

  spinor = np.array([[1.0], [0.0]]) * np.ones(grid.n)
  zero = np.zeros((2, grid.n))
  for sign, occupied in ((-1, (0, 1)), (1, (2, 3))):
    phase = np.exp(sign * 1j * m * t)
    state = dirac_decompose(spinor * phase, zero, sign * 1j * m * spinor * phase, zero, grid, m)
    rest = [k for k in range(8) if k not in occupied]
    leakage = max(leakage, float(np.max(np.abs(state.psi[rest]))))
  return [CheckResult.upper_bound("rest_round_trip_leakage", leakage, 1e-14)]


def packet_evolution(grid: GridSpec, dt: float, steps: int, m: float = 1.0, k0: float = 0.3,
                     sigma: float = 5.0):
  state = kg_packet(grid, m, k0, sigma)
  cfg = EvolutionConfig(dt=dt, steps=steps)
  return evolve(state, EMConfig.free(), cfg)


def check_conservation(rng: np.random.Generator, samples: int) -> List[CheckResult]:
  settings = get_settings()
  _, report = packet_evolution(ACCEPTANCE_GRID, 0.01, 1000)
  _, coarse = packet_evolution(CONVERGENCE_GRID, 0.02, 250)
  _, fine = packet_evolution(ACCEPTANCE_GRID, 0.01, 500)
  ratio = coarse.max_continuity_residual / fine.max_continuity_residual
  return [
    CheckResult.upper_bound("signed_norm_drift", report.max_norm_drift, 1e-8),
    CheckResult.upper_bound("continuity_residual", report.max_continuity_residual,
                            settings.CONTINUITY_TOLERANCE),
    CheckResult.upper_bound("continuity_convergence_order", abs(ratio / 4.0 - 1.0), 0.2),
  ]


def lambda_restoration(p0: float = 2.0) -> Tuple[float, float, float]:
  x = 0.1 * (np.arange(256) - 128)
  p = np.linspace(-6.0, 10.0, 801)
  F = gaussian_density(x, p, 0.0, 1.0, p0, 0.5)
  stencil = delta_stencil()
  plus = wigner_moyal_transform(F, stencil, "+")
  minus = wigner_moyal_transform(F, stencil, "-")
  return (momentum_expectation(plus, 1), momentum_expectation(minus, 1),
          momentum_expectation(minus, -1))


def check_lambda_restoration(rng: np.random.Generator, samples: int) -> List[CheckResult]:
  p0 = 2.0
  direct, reversed_, restored = lambda_restoration(p0)
  return [
    CheckResult.upper_bound("momentum_orientation_plus", abs(direct - p0), 1e-6),
    CheckResult.upper_bound("momentum_orientation_minus_reversed", abs(reversed_ + p0), 1e-6),
    CheckResult.upper_bound("momentum_lambda_restored", abs(restored - p0), 1e-6),
  ]


def check_energy_positivity(rng: np.random.Generator, samples: int) -> List[CheckResult]:
  x = np.linspace(-10.0, 10.0, 64)
  worst = 0.0
  for _ in range(samples):
    m = float(rng.uniform(0.5, 2.0))
    p = float(rng.uniform(0.0, 3.0))
    energy = math.sqrt(p * p + m * m)
    c = rng.normal(size=2) + 1j * rng.normal(size=2)
    psi = c[0] * np.exp(1j * p * x) + c[1] * np.exp(-1j * p * x)
    for lam in (1, -1):
      field = psi if lam == 1 else np.conj(psi)
      rate = -lam * 1j * energy * field
      worst = max(worst, -float(np.min(energy_density(field, rate, lam))))
  return [CheckResult.upper_bound("energy_positivity", max(worst, 0.0), 1e-12)]


def check_trajectories(rng: np.random.Generator, samples: int) -> List[CheckResult]:
  particle = PointParticle(m=1.0, e=1.0, v=(0.5, 0.0))
  period = gyro_period(particle, 1.0)
  p_track, a_track = pair_magnetic(particle, 1.0, 2.0 * period, period / 400.0)
  omega = abs(p_track.omega + a_track.omega) / abs(p_track.omega)
  radius = abs(p_track.radius - a_track.radius) / p_track.radius

  g = (0.0, -0.01)
  p_fall, a_fall = pair_gravity(particle, g, 100.0, 0.01)
  reversal = float(np.max(np.abs(a_fall.velocity[0] + p_fall.velocity[0])))
  drift = 0.0
  for track in (p_fall, a_fall):
    energy = gravity_energy(track, g)
    drift = max(drift, float(np.max(np.abs(energy - energy[0]))) / abs(track.particle.m))
  return [
    CheckResult.upper_bound("magnetic_omega_opposite", omega, 1e-9),
    CheckResult.upper_bound("magnetic_radius_equal", radius, 1e-9),
    CheckResult.upper_bound("gravity_velocity_reversal", reversal, 0.0),
    CheckResult.upper_bound("gravity_energy_drift", drift, 1e-8),
  ]


def check_planewave(rng: np.random.Generator, samples: int) -> List[CheckResult]:
  worst = 0.0
  for _ in range(samples):
    lam = int(rng.choice([-1, 1]))
    m = float(rng.uniform(0.1, 5.0))
    v = float(rng.uniform(-0.99, 0.99))
    e, phi, a = (float(value) for value in rng.uniform(-2.0, 2.0, size=3))
    wave = PlaneWave(lam=lam, m=m, v=v)
    gamma = 1.0 / math.sqrt(1.0 - v * v)
    oracle = (gamma, lam * v, gamma - lam * e * phi / m, lam * v - e * a / m)
    computed = (density_free(wave), flux_free(wave), density_em(wave, phi, e), flux_em(wave, a, e))
    worst = max(worst, max(abs(c - o) for c, o in zip(computed, oracle)))
  return [CheckResult.upper_bound("planewave_closed_forms", worst, 1e-12)]


CHECKS: Dict[str, Check] = {
  "tables": check_tables,
  "catalog": check_catalog,
  "conjugations": check_conjugations,
  "density_equivalence": check_density_equivalence,
  "fv_spectrum": check_fv_spectrum,
  "rest_round_trip": check_rest_round_trip,
  "conservation": check_conservation,
  "lambda_restoration": check_lambda_restoration,
  "energy_positivity": check_energy_positivity,
  "trajectories": check_trajectories,
  "planewave": check_planewave,
}

SLOW_CHECKS = ("conservation",)


def run_checks(names: Optional[Sequence[str]] = None, seed: Optional[int] = None,
               samples: int = 100, include_slow: bool = True) -> List[CheckResult]:
  seed = get_settings().DEFAULT_SEED if seed is None else seed
  selected = list(CHECKS) if names is None else list(names)
  unknown = [name for name in selected if name not in CHECKS]
  if unknown:
    raise ArgumentError(f"unknown checks {unknown}; available: {sorted(CHECKS)}")

  results: List[CheckResult] = []
  for index, name in enumerate(selected):
    if name in SLOW_CHECKS and not include_slow:
      logger.info(f"⏭️ Skipping slow check {name}")
      continue
    rng = np.random.default_rng([seed, index])
    batch = CHECKS[name](rng, samples)
    for result in batch:
      status = "passed" if result.passed else "FAILED"
      logger.info(f"{name}/{result.check_name}: {status} (residual {result.residual})")
    results.extend(batch)
  return results


def known_discrepancies() -> List[dict]:
  """Conventions fixed where two readings of the same formula disagree."""
  report = conjugation_discrepancy()
  entries = []
  if not report["c2_matrix_equals_components"]:
    entries.append({
      "name": "psi_c2_global_phase",
      "detail": (f"matrix form Ψ†Σ₃iα₃β equals {report['c2_matrix_over_components']} times "
                 f"the component listing; components are used"),
    })
  broken = [row["alias"] for row in catalog_aliases() if not row["reversed_spin_holds"]]
  if broken:
    entries.append({
      "name": "rest_alias_spin_pairing",
      "detail": (f"aliases {broken} fail as basis identities; the same-spin pairing holds"),
    })
  entries.append({
    "name": "dirac_density_factor",
    "detail": "Ψ†Σ₃iα₃βΨ equals 2·Im Σ φ_ij*χ_ij, not Im Σ φ_ij*χ_ij",
  })
  entries.append({
    "name": "eta_parity_label",
    "detail": "η rest spinors are β-even; the label (−) on their definitions is read as (+)",
  })
  for entry in entries:
    logger.warning(f"⚠️ {entry['name']}: {entry['detail']}")
  return entries
