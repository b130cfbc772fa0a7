"""
Feshbach–Villars two-component Klein–Gordon system.

    φ₀ = ∂tφ + ieΦφ,   φ₁ = ½(φ + (i/m)φ₀),   φ₂ = ½(φ − (i/m)φ₀)

    i∂tΨ = [(1/2m)(−i∇ − eA)²(σ₃ + iσ₂) + mσ₃ + eΦ]Ψ,   Ψ = (φ₁, φ₂)
"""
import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np
from scipy import fft

from ..algebra.spinors import LAMBDA2, basis, conj_kg_charge, conj_kg_row, pauli
from ..core.exceptions import ArgumentError
from ..core.fields import EMConfig
from ..core.grid import GridSpec
from ..models.labels import ParticleLabel
from ..models.states import FVState
from .operators import apply, fv_generator

logger = logging.getLogger(__name__)


def _potential(grid: GridSpec, potential) -> np.ndarray:
  if potential is None:
    return np.zeros(grid.n)
  return np.broadcast_to(np.asarray(potential, dtype=float), (grid.n,))


def fv_decompose(phi: np.ndarray, phi_t: np.ndarray, grid: GridSpec, m: float,
                 potential=None, e: float = 0.0) -> FVState:
  if m == 0.0:
    raise ArgumentError("Feshbach–Villars decomposition needs a nonzero mass")
  phi = np.asarray(phi, dtype=complex)
  phi_t = np.asarray(phi_t, dtype=complex)
  if phi.shape != (grid.n,) or phi_t.shape != (grid.n,):
    raise ArgumentError(f"φ and ∂tφ must both have shape ({grid.n},)")
  phi0 = phi_t + 1j * e * _potential(grid, potential) * phi
  phi1 = 0.5 * (phi + (1j / m) * phi0)
  phi2 = 0.5 * (phi - (1j / m) * phi0)
  return FVState(psi=np.stack([phi1, phi2]), grid=grid, m=m, e=e)


def fv_reconstruct(state: FVState, potential=None) -> Tuple[np.ndarray, np.ndarray]:
  """Inverse decomposition: φ = φ₁ + φ₂ and ∂tφ = −im(φ₁ − φ₂) − ieΦφ."""
  phi = state.phi1 + state.phi2
  phi0 = -1j * state.m * (state.phi1 - state.phi2)
  return phi, phi0 - 1j * state.e * _potential(state.grid, potential) * phi


def fv_hamiltonian_apply(state: FVState, em: EMConfig) -> np.ndarray:
  fields = em.sample(state.grid)
  return apply(fv_generator(state.grid, fields, state.m, state.e), state.psi)


def kg_density(state: FVState) -> np.ndarray:
  """Ψ†σ₃Ψ = |φ₁|² − |φ₂|²."""
  row = conj_kg_row(state.psi)
  return np.real(np.sum(row * state.psi, axis=0))


def kg_current(state: FVState, em: EMConfig) -> np.ndarray:
  """(1/2mi)[Ψ_c1Λ∇Ψ − (∇Ψ_c1)ΛΨ] − (e/m)AΨ_c1ΛΨ with Ψ_c1 = Ψ†σ₃."""
  grid = state.grid
  a = em.sample(grid).a
  psi = state.psi
  row = conj_kg_row(psi)
  d_psi = grid.derivative(psi)
  d_row = grid.derivative(row)
  row_lam = np.tensordot(LAMBDA2.T, row, axes=(1, 0))
  d_row_lam = np.tensordot(LAMBDA2.T, d_row, axes=(1, 0))
  gradient_term = np.sum(row_lam * d_psi - d_row_lam * psi, axis=0) / (2j * state.m)
  coupling = np.sum(row_lam * psi, axis=0)
  return np.real(gradient_term - (state.e / state.m) * a * coupling)


@dataclass(frozen=True)
class KGRestBasis:
  label: ParticleLabel
  vector: np.ndarray
  phase_sign: int
  amplitude: str

  def state(self, grid: GridSpec, m: float = 1.0, tau: float = 0.0,
            e: Optional[float] = None) -> FVState:
    """
    Rest state e_k·exp(phase_sign·i·E_p·τ) with E_p = |m|, uniform on the grid.

    Rows of negative charge solve the conjugated equation, so the state carries
    (−|m|, −|e|); the positive-charge rows carry (|m|, |e|).
    """
    sign = self.label.charge_sign
    charge = float(sign) if e is None else sign * abs(e)
    mass = abs(m) * sign
    phase = np.exp(self.phase_sign * 1j * abs(m) * tau)
    psi = np.outer(self.vector, np.full(grid.n, phase))
    return FVState(psi=psi, grid=grid, m=mass, e=charge)


# (kind, charge) -> (basis index, phase sign, amplitude, FV component)
_KG_AMPLITUDE_ROWS = (
  ("P", 1, 1, -1, "χ1", "φ1"),
  ("P", -1, 2, -1, "χ2†", "φ2*"),
  ("A", -1, 1, 1, "χ1†", "φ1*"),
  ("A", 1, 2, 1, "χ2", "φ2"),
)


def kg_rest_basis(label: ParticleLabel) -> KGRestBasis:
  if label.spin != "none" or label.spin_parity is not None:
    raise ArgumentError(f"spinless label required, got spin={label.spin!r}")
  for kind, charge, index, phase_sign, _, component in _KG_AMPLITUDE_ROWS:
    if label.kind == kind and label.charge_sign == charge:
      return KGRestBasis(label=label, vector=basis(index, 2), phase_sign=phase_sign,
                         amplitude=component)
  raise ArgumentError(f"label {label.dyad} is not a row of the spinless table")


def kg_amplitude_table() -> List[dict]:
  rows = []
  for kind, charge, index, phase_sign, amplitude, component in _KG_AMPLITUDE_ROWS:
    rows.append({
      "mass": "+" if kind == "P" else "-",
      "charge": "+" if charge > 0 else "-",
      "amplitude": amplitude,
      "component": component,
      "label": f"({kind},{'+' if charge > 0 else '-'})",
      "basis": f"e{index}",
      "phase": "-" if phase_sign < 0 else "+",
    })
  return rows


def kg_momentum_hamiltonian(k: float, m: float, e: float = 0.0, a: float = 0.0,
                            phi: float = 0.0) -> np.ndarray:
  return ((k - e * a) ** 2 / (2.0 * m)) * LAMBDA2 + m * pauli(3) + e * phi * np.eye(2)


def kg_spectrum(k: float, m: float) -> np.ndarray:
  """Eigenvalues of the free momentum-space matrix, sorted ascending."""
  return np.sort(np.real(np.linalg.eigvals(kg_momentum_hamiltonian(k, m))))


def gaussian_profile(grid: GridSpec, k0: float, sigma: float, x_c: float = 0.0) -> np.ndarray:
  x = grid.x
  return np.exp(-((x - x_c) ** 2) / (2.0 * sigma ** 2) + 1j * k0 * x)


def kg_packet(grid: GridSpec, m: float, k0: float, sigma: float, x_c: float = 0.0,
              branch: int = 1, e: float = 0.0) -> FVState:
  """Gaussian packet on a single frequency branch, normalised to signed norm = branch."""
  if branch not in (1, -1):
    raise ArgumentError(f"branch must be ±1, got {branch!r}")
  if m == 0.0:
    raise ArgumentError("packet mass must be nonzero")
  spectrum = fft.fft(gaussian_profile(grid, k0, sigma, x_c))
  k = grid.wavenumbers
  omega = branch * np.sqrt(m * m + k * k)
  phi1 = fft.ifft(0.5 * (1.0 + omega / m) * spectrum)
  phi2 = fft.ifft(0.5 * (1.0 - omega / m) * spectrum)
  state = FVState(psi=np.stack([phi1, phi2]), grid=grid, m=m, e=e)
  norm = grid.integrate(kg_density(state))
  if norm * branch <= 0.0:
    raise ArgumentError("packet has no weight on the requested branch")
  return state.with_psi(state.psi / np.sqrt(abs(norm)))


def kg_equation_residual(psi: np.ndarray, psi_t: np.ndarray, grid: GridSpec, m: float,
                         e: float, em: EMConfig) -> float:
  """max |i∂tΨ − HΨ| for H(m, e)."""
  op = fv_generator(grid, em.sample(grid), m, e)
  return float(np.max(np.abs(1j * np.asarray(psi_t) - apply(op, psi))))


def kg_conjugate_residual(psi: np.ndarray, psi_t: np.ndarray, grid: GridSpec, m: float,
                          e: float, em: EMConfig) -> float:
  """Ψ* against the mass- and charge-flipped generator."""
  return kg_equation_residual(np.conj(psi), np.conj(psi_t), grid, -m, -e, em)


def kg_charge_conjugate_residual(psi: np.ndarray, psi_t: np.ndarray, grid: GridSpec,
                                 m: float, e: float, em: EMConfig) -> float:
  """σ₁Ψ* against the charge-flipped generator."""
  return kg_equation_residual(conj_kg_charge(psi), conj_kg_charge(psi_t), grid, m, -e, em)
