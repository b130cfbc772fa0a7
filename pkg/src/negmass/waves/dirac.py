"""
Second-order Dirac system in eight-component form.

    φ₀ = ∂tφ + ieΦφ,  φ₁,₂ = ½(φ ± (i/m)φ₀)   (same for χ)

    i∂tΨ = [(K/2m − (e/2m)σ·H)(Σ₃ + iΣ₂) + mΣ₃ + (ie/2m)σ·E(α₃ + iα₂) + eΦ]Ψ

with K = (−i∇ − eA)² and σ·X acting inside every two-component sub-spinor.
"""
import logging
from typing import Optional, Tuple

import numpy as np
from scipy import fft

from ..algebra.spinors import (
  GAMMA8,
  LAMBDA8,
  big_matrix,
  conj_dirac_c1,
  conj_dirac_c2,
  conj_dirac_c2_matrix,
  spin_embedding,
  spin_dot,
)
from ..core.config import get_settings
from ..core.exceptions import ArgumentError, ConsistencyError
from ..core.fields import EMConfig
from ..core.grid import GridSpec
from ..models.states import DiracState
from .operators import apply, dirac_generator
from .scalar import check_branch

logger = logging.getLogger(__name__)


def _potential(grid: GridSpec, potential) -> np.ndarray:
  if potential is None:
    return np.zeros(grid.n)
  return np.broadcast_to(np.asarray(potential, dtype=float), (grid.n,))


def _pair(values: np.ndarray, grid: GridSpec, name: str) -> np.ndarray:
  values = np.asarray(values, dtype=complex)
  if values.shape != (2, grid.n):
    raise ArgumentError(f"{name} must have shape (2, {grid.n}), got {values.shape}")
  return values


def dirac_decompose(phi: np.ndarray, chi: np.ndarray, phi_t: np.ndarray, chi_t: np.ndarray,
                    grid: GridSpec, m: float, potential=None, e: float = 0.0) -> DiracState:
  if m == 0.0:
    raise ArgumentError("decomposition needs a nonzero mass")
  phi, chi = _pair(phi, grid, "φ"), _pair(chi, grid, "χ")
  phi_t, chi_t = _pair(phi_t, grid, "∂tφ"), _pair(chi_t, grid, "∂tχ")
  coupling = 1j * e * _potential(grid, potential)
  phi0 = phi_t + coupling * phi
  chi0 = chi_t + coupling * chi
  psi = np.concatenate([
    0.5 * (phi + (1j / m) * phi0),
    0.5 * (phi - (1j / m) * phi0),
    0.5 * (chi + (1j / m) * chi0),
    0.5 * (chi - (1j / m) * chi0),
  ])
  return DiracState(psi=psi, grid=grid, m=m, e=e)


def dirac_reconstruct(state: DiracState, potential=None):
  """(φ, χ, ∂tφ, ∂tχ) from the eight components."""
  (phi1, phi2), (chi1, chi2) = state.phi, state.chi
  coupling = 1j * state.e * _potential(state.grid, potential)
  phi = phi1 + phi2
  chi = chi1 + chi2
  phi_t = -1j * state.m * (phi1 - phi2) - coupling * phi
  chi_t = -1j * state.m * (chi1 - chi2) - coupling * chi
  return phi, chi, phi_t, chi_t


def dirac_hamiltonian_apply(state: DiracState, em: EMConfig) -> np.ndarray:
  fields = em.sample(state.grid)
  return apply(dirac_generator(state.grid, fields, state.m, state.e), state.psi)


def dirac_momentum_hamiltonian(k: float, m: float, e: float = 0.0,
                               e_field=(0.0, 0.0, 0.0), h_field=(0.0, 0.0, 0.0),
                               a: float = 0.0, phi: float = 0.0) -> np.ndarray:
  """8×8 generator acting on a mode e^{ikx} under constant fields."""
  s_h = np.kron(np.eye(4), spin_dot(np.asarray(h_field, dtype=float)[None, :])[0])
  s_e = np.kron(np.eye(4), spin_dot(np.asarray(e_field, dtype=float)[None, :])[0])
  kinetic = (k - e * a) ** 2 / (2.0 * m)
  return ((kinetic * np.eye(8) - (e / (2.0 * m)) * s_h) @ LAMBDA8
          + m * big_matrix("Sigma3")
          + (1j * e / (2.0 * m)) * s_e @ GAMMA8
          + e * phi * np.eye(8))


def dirac_density(state: DiracState, tolerance: Optional[float] = None) -> np.ndarray:
  """
  ρ = Ψ†Σ₃iα₃βΨ, cross-checked against the component form 2·Im Σ φ_ij* χ_ij.
  """
  tol = get_settings().DENSITY_TOLERANCE if tolerance is None else tolerance
  return density_from_components(state.psi, tol)


def density_forms(psi: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
  """(Ψ†Σ₃iα₃βΨ, 2·Im Σ φ_ij* χ_ij) for components along axis 0."""
  psi = np.asarray(psi, dtype=complex)
  matrix_form = np.sum(conj_dirac_c2_matrix(psi) * psi, axis=0)
  component_form = 2.0 * np.imag(np.sum(np.conj(psi[0:4]) * psi[4:8], axis=0))
  return matrix_form, component_form


def density_from_components(psi: np.ndarray, tolerance: float) -> np.ndarray:
  psi = np.asarray(psi, dtype=complex)
  matrix_form, component_form = density_forms(psi)
  scale = max(1.0, float(np.max(np.abs(psi)) ** 2)) if psi.size else 1.0
  deviation = float(np.max(np.abs(matrix_form - component_form), initial=0.0))
  if deviation > tolerance * scale:
    raise ConsistencyError(
        f"density formulas disagree by {deviation:.3e}", residual=deviation, tolerance=tolerance)
  return np.real(matrix_form)


def dirac_current(state: DiracState, em: EMConfig) -> np.ndarray:
  """(1/2mi)[Ψ_c2Λ∇Ψ − (∇Ψ_c2)ΛΨ] − (e/m)AΨ_c2ΛΨ, real part, Λ = Σ₃ + iΣ₂."""
  grid = state.grid
  a = em.sample(grid).a
  psi = state.psi
  row = conj_dirac_c2_matrix(psi)
  d_psi = grid.derivative(psi)
  d_row = grid.derivative(row)
  row_lam = np.tensordot(LAMBDA8.T, row, axes=(1, 0))
  d_row_lam = np.tensordot(LAMBDA8.T, d_row, axes=(1, 0))
  gradient_term = np.sum(row_lam * d_psi - d_row_lam * psi, axis=0) / (2j * state.m)
  coupling = np.sum(row_lam * psi, axis=0)
  return np.real(gradient_term - (state.e / state.m) * a * coupling)


def four_spinor_density(psi: np.ndarray, psi_t: np.ndarray, m: float, lam: int,
                        potential=0.0, e: float = 0.0,
                        tolerance: Optional[float] = None) -> np.ndarray:
  """
  Density of the four-spinor ψ = (φ, χ) of the squared equation with the
  positive-bracket convention: (1/2|m|)(λ·i[ψ†βψ_t − ψ_t†βψ] − 2λeΦψ†βψ).
  """
  if m == 0.0:
    raise ArgumentError("mass must be nonzero")
  psi = np.asarray(psi, dtype=complex)
  psi_t = np.asarray(psi_t, dtype=complex)
  if psi.shape[0] != 4 or psi.shape != psi_t.shape:
    raise ArgumentError(f"four-spinor fields must share a (4, n) shape, got {psi.shape}")
  beta = np.array([1.0, 1.0, -1.0, -1.0]).reshape((4,) + (1,) * (psi.ndim - 1))
  sandwich = np.sum(np.conj(psi) * beta * psi_t, axis=0)
  bilinear = -2.0 * np.imag(sandwich)
  check_branch(bilinear, lam, tolerance)
  weight = np.real(np.sum(np.conj(psi) * beta * psi, axis=0))
  return (lam * bilinear - 2.0 * lam * e * np.asarray(potential) * weight) / (2.0 * abs(m))


def conjugated_generators(grid: GridSpec, em: EMConfig, m: float, e: float):
  """Generators solved by the components of Ψ_c1 and Ψ_c2 (both as columns)."""
  fields = em.sample(grid)
  c1 = dirac_generator(grid, fields, -m, -e)
  c2 = dirac_generator(
    grid, fields, -m, -e,
    kinetic_coeff=-1.0 / (2.0 * m),
    kinetic_charge=-e,
    spin_h_coeff=e / (2.0 * m),
    spin_e_coeff=-1j * e / (2.0 * m),
    potential_coeff=-e,
    transpose_spin=True,
  )
  return c1, c2


def _residual(op, psi, psi_t) -> float:
  return float(np.max(np.abs(1j * np.asarray(psi_t) - apply(op, psi))))


def dirac_equation_residual(psi: np.ndarray, psi_t: np.ndarray, grid: GridSpec, m: float,
                            e: float, em: EMConfig) -> float:
  return _residual(dirac_generator(grid, em.sample(grid), m, e), psi, psi_t)


def dirac_c1_residual(psi: np.ndarray, psi_t: np.ndarray, grid: GridSpec, m: float,
                      e: float, em: EMConfig) -> float:
  """Ψ_c1 = iβσ₂Ψ* against the mass- and charge-inverted equation."""
  op, _ = conjugated_generators(grid, em, m, e)
  return _residual(op, conj_dirac_c1(psi), conj_dirac_c1(psi_t))


def dirac_c2_residual(psi: np.ndarray, psi_t: np.ndarray, grid: GridSpec, m: float,
                      e: float, em: EMConfig) -> float:
  """Ψ_c2 components against the mass-, charge- and parity-inverted equation."""
  _, op = conjugated_generators(grid, em, m, e)
  return _residual(op, conj_dirac_c2(psi), conj_dirac_c2(psi_t))


def spin_parity(vector: np.ndarray) -> Optional[int]:
  """β eigenvalue of a rest spinor, None when it is not an eigenvector."""
  vector = np.asarray(vector, dtype=complex)
  image = big_matrix("beta") @ vector
  if np.array_equal(image, vector):
    return 1
  if np.array_equal(image, -vector):
    return -1
  return None


def embedded_spin_commutes() -> Tuple[bool, bool]:
  """Block-structure check of the spin embedding against β and Σ₃."""
  ok_beta = ok_sigma = True
  for axis in (1, 2, 3):
    s = spin_embedding(axis)
    ok_beta &= np.array_equal(s @ big_matrix("beta"), big_matrix("beta") @ s)
    ok_sigma &= np.array_equal(s @ big_matrix("Sigma3"), big_matrix("Sigma3") @ s)
  return bool(ok_beta), bool(ok_sigma)


def dirac_packet(grid: GridSpec, m: float, k0: float, sigma: float, x_c: float = 0.0,
                 phi_spinor=(1.0, 0.0), chi_spinor=(0.0, 0.0), branch: int = 1,
                 e: float = 0.0) -> DiracState:
  """
  Free Gaussian packet with fixed spinor parts, every component projected on
  one frequency branch as in the spinless case.
  """
  if branch not in (1, -1):
    raise ArgumentError(f"branch must be ±1, got {branch!r}")
  if m == 0.0:
    raise ArgumentError("packet mass must be nonzero")
  envelope = fft.fft(np.exp(-((grid.x - x_c) ** 2) / (2.0 * sigma ** 2) + 1j * k0 * grid.x))
  omega = branch * np.sqrt(m * m + grid.wavenumbers ** 2)
  upper = fft.ifft(0.5 * (1.0 + omega / m) * envelope)
  lower = fft.ifft(0.5 * (1.0 - omega / m) * envelope)
  phi_s = np.asarray(phi_spinor, dtype=complex)
  chi_s = np.asarray(chi_spinor, dtype=complex)
  psi = np.concatenate([
    np.outer(phi_s, upper), np.outer(phi_s, lower),
    np.outer(chi_s, upper), np.outer(chi_s, lower),
  ])
  return DiracState(psi=psi, grid=grid, m=m, e=e)
