"""
Spinless plane-wave phenomenology: λ classification, densities and fluxes.

Natural units ħ = c = 1. The mass m is nominal and positive; λ carries the
particle (+1) / antiparticle (−1) sign.
"""
import logging
from typing import Optional, Tuple

import numpy as np

from ..core.config import get_settings
from ..core.exceptions import ArgumentError, DegenerateClassificationError
from ..models.states import PlaneWave

logger = logging.getLogger(__name__)


def _check_mass(m: float) -> None:
  if m == 0.0:
    raise ArgumentError("mass must be nonzero")


def lambda_bilinear(phi: np.ndarray, phi_t: np.ndarray) -> np.ndarray:
  """b = i(φ*∂tφ − φ∂tφ*), real; positive for positive frequency."""
  phi = np.asarray(phi, dtype=complex)
  phi_t = np.asarray(phi_t, dtype=complex)
  if phi.shape != phi_t.shape:
    raise ArgumentError(f"field and time derivative differ in shape: {phi.shape} vs {phi_t.shape}")
  return -2.0 * np.imag(np.conj(phi) * phi_t)


def classify_lambda(phi: np.ndarray, phi_t: np.ndarray,
                    tolerance: Optional[float] = None) -> np.ndarray:
  """Pointwise sign of the density bilinear; +1 for positive frequency."""
  tol = get_settings().LAMBDA_TOLERANCE if tolerance is None else tolerance
  b = lambda_bilinear(phi, phi_t)
  degenerate = np.flatnonzero(np.abs(b).reshape(-1) <= tol)
  if degenerate.size:
    raise DegenerateClassificationError(degenerate, tol)
  return np.where(b > 0, 1, -1).astype(int)


def density_free(w: PlaneWave) -> float:
  """E_p/(λm) with the [ ]₊ sign folded in, hence always positive."""
  _check_mass(w.m)
  return abs(w.energy / (w.lam * w.m))


def flux_free(w: PlaneWave) -> float:
  _check_mass(w.m)
  return w.lam * w.v


def density_em(w: PlaneWave, phi: float, e: float) -> float:
  """
  (E_p − λeΦ)/(λm) with the [ ]₊ sign folded in: E_p and m enter as magnitudes,
  so a negative nominal mass gives γ − λeΦ/|m| and Φ = 0 reduces to density_free.
  """
  _check_mass(w.m)
  return (abs(w.energy) - w.lam * e * phi) / abs(w.m)


def flux_em(w: PlaneWave, a: float, e: float) -> float:
  _check_mass(w.m)
  return w.lam * w.v - (e / w.m) * a


def plane_wave_field(w: PlaneWave, x: np.ndarray, t: float = 0.0) -> Tuple[np.ndarray, np.ndarray]:
  """φ_λ = exp[−λi(E_p t − p x)] and its time derivative at the points x."""
  x = np.asarray(x, dtype=float)
  phase = -w.lam * 1j * (w.energy * t - w.momentum * x)
  phi = np.exp(phase)
  return phi, -w.lam * 1j * w.energy * phi


def probability_density(phi: np.ndarray, phi_t: np.ndarray, m: float, lam: int,
                         potential: float | np.ndarray = 0.0, e: float = 0.0,
                         tolerance: Optional[float] = None) -> np.ndarray:
  """ρ_λ = (1/2λm)([b]₊ − 2λeΦ|φ|²) with [b]₊ = λb."""
  _check_mass(m)
  b = lambda_bilinear(phi, phi_t)
  check_branch(b, lam, tolerance)
  norm2 = np.abs(np.asarray(phi)) ** 2
  return (lam * b - 2.0 * lam * e * np.asarray(potential) * norm2) / (2.0 * abs(m))


def mass_density(phi: np.ndarray, phi_t: np.ndarray, m: float,
                 tolerance: Optional[float] = None) -> np.ndarray:
  """m·ρ_λ: positive where λ = +1, negative where λ = −1."""
  _check_mass(m)
  lam = classify_lambda(phi, phi_t, tolerance)
  b = lambda_bilinear(phi, phi_t)
  return 0.5 * lam * np.abs(b)


def check_branch(b: np.ndarray, lam: int, tolerance: Optional[float]) -> None:
  if lam not in (1, -1):
    raise ArgumentError(f"λ must be ±1, got {lam!r}")
  tol = get_settings().LAMBDA_TOLERANCE if tolerance is None else tolerance
  scale = max(1.0, float(np.max(np.abs(b)))) if np.size(b) else 1.0
  if np.any(lam * b < -tol * scale):
    raise ArgumentError(f"λ = {lam} does not match the sign of the density bilinear")
