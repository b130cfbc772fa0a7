"""
Classical phase-space densities and the infinitesimal Wigner–Moyal transform.

    ρ(x − δ/2, x + δ/2; t) = ∫ F(x, p; t) e^{ipδ} dp                 (orientation +)
    ρ(x; δt, δx)           = ∫ F(x, p; t) e^{i(E(p)δt − pδx)} dp      (on shell, E = √(p² + m²))

Orientation − is the conjugate ordering ψ*(x + δ/2)ψ(x − δ/2), i.e. the complex
conjugate of the + slice. Spatial derivatives are spectral, so the x grid is
treated as periodic.
"""
import logging
from typing import Literal, Optional, Tuple

import numpy as np
from scipy import fft

from ..core.exceptions import ArgumentError
from ..models.states import CorrelationSlice, PhaseSpaceDensity
from ..waves.scalar import check_branch, lambda_bilinear

logger = logging.getLogger(__name__)

Orientation = Literal["+", "-"]

DEFAULT_STEP = 1e-3


def gaussian_density(x: np.ndarray, p: np.ndarray, x0: float = 0.0, sigma_x: float = 1.0,
                     p0: float = 0.0, sigma_p: float = 1.0, t: float = 0.0) -> PhaseSpaceDensity:
  """Product of Gaussians in x and p, normalised on the grid."""
  if sigma_x <= 0.0 or sigma_p <= 0.0:
    raise ArgumentError("Gaussian widths must be positive")
  x = np.asarray(x, dtype=float)
  p = np.asarray(p, dtype=float)
  F = np.outer(np.exp(-0.5 * ((x - x0) / sigma_x) ** 2), np.exp(-0.5 * ((p - p0) / sigma_p) ** 2))
  F /= np.sum(F) * (x[1] - x[0]) * (p[1] - p[0])
  return PhaseSpaceDensity(F=F, x=x, p=p, t=t)


def delta_stencil(h: float = DEFAULT_STEP) -> np.ndarray:
  """δ samples {0, ±h, ±2h} needed by the extrapolated derivative."""
  if h <= 0.0:
    raise ArgumentError(f"step must be positive, got {h}")
  return h * np.arange(-2, 3, dtype=float)


def _check_nyquist(p: np.ndarray, delta: np.ndarray) -> None:
  dp = float(p[1] - p[0])
  limit = np.pi / dp
  largest = float(np.max(np.abs(delta), initial=0.0))
  if largest >= limit:
    raise ArgumentError(
        f"|δx| up to {largest:g} aliases on a momentum grid with dp = {dp:g} (limit {limit:g})")


def _orient(values: np.ndarray, orientation: Orientation) -> np.ndarray:
  if orientation not in ("+", "-"):
    raise ArgumentError(f"orientation must be '+' or '-', got {orientation!r}")
  return values if orientation == "+" else np.conj(values)


def wigner_moyal_transform(F: PhaseSpaceDensity, delta: np.ndarray,
                           orientation: Orientation = "+") -> CorrelationSlice:
  delta = np.asarray(delta, dtype=float).reshape(-1)
  _check_nyquist(F.p, delta)
  kernel = np.exp(1j * np.outer(F.p, delta))
  values = (F.F @ kernel) * F.dp
  return CorrelationSlice(values=_orient(values, orientation), x=F.x, delta=delta,
                          orientation=orientation, t=F.t)


def _slope_at_zero(g: np.ndarray, delta: np.ndarray) -> complex:
  """g'(0) by central differences, Richardson-extrapolated when ±2h is sampled."""
  positive = delta[delta > 0.0]
  if positive.size == 0:
    raise ArgumentError("slice needs samples at δ = ±h")
  h = float(np.min(positive))

  def sample(value):
    hit = np.flatnonzero(np.isclose(delta, value, rtol=0.0, atol=1e-9 * h))
    return g[hit[0]] if hit.size else None

  plus, minus = sample(h), sample(-h)
  if plus is None or minus is None:
    raise ArgumentError("slice needs samples at δ = ±h")
  coarse = (plus - minus) / (2.0 * h)
  plus2, minus2 = sample(2.0 * h), sample(-2.0 * h)
  if plus2 is None or minus2 is None:
    return coarse
  wide = (plus2 - minus2) / (4.0 * h)
  return (4.0 * coarse - wide) / 3.0


def _weight_at_zero(g: np.ndarray, delta: np.ndarray) -> float:
  zero = np.flatnonzero(np.abs(delta) < 1e-15)
  if zero.size == 0:
    raise ArgumentError("slice does not contain δ = 0")
  return float(np.real(g[zero[0]]))


def momentum_expectation(slice_: CorrelationSlice, lam: int) -> float:
  """⟨p⟩ = λ·(1/i)·d/dδ ∫ρ dx at δ = 0, normalised by ∫ρ(x, 0) dx."""
  if lam not in (1, -1):
    raise ArgumentError(f"λ must be ±1, got {lam!r}")
  g = np.sum(slice_.values, axis=0) * slice_.dx
  slope = _slope_at_zero(g, slice_.delta)
  return float(np.real(lam * slope / 1j) / _weight_at_zero(g, slice_.delta))


def energy_density(psi: np.ndarray, psi_t: np.ndarray, lam: int, potential=0.0, e: float = 0.0,
                   tolerance: Optional[float] = None) -> np.ndarray:
  """(i/2)λ[ψ*ψ_t − ψψ_t*] − λeΦ|ψ|²; the field-free part is never negative."""
  b = lambda_bilinear(psi, psi_t)
  check_branch(b, lam, tolerance)
  weight = np.abs(np.asarray(psi)) ** 2
  return 0.5 * lam * b - lam * e * np.asarray(potential) * weight


def free_flow(F: PhaseSpaceDensity, m: float, dt: float, sign: int = 1) -> PhaseSpaceDensity:
  """F(x − sign·(p/m)·dt, p): exact free streaming by a Fourier shift along x."""
  if m == 0.0:
    raise ArgumentError("free flow needs a nonzero mass")
  return _shift(F, sign * (F.p / m) * dt, F.t + dt)


def relativistic_flow(F: PhaseSpaceDensity, m: float, dt: float) -> PhaseSpaceDensity:
  """Streaming with the on-shell velocity p/E(p)."""
  return _shift(F, F.p / np.sqrt(F.p ** 2 + m * m) * dt, F.t + dt)


def _shift(F: PhaseSpaceDensity, displacement: np.ndarray, t: float) -> PhaseSpaceDensity:
  k = 2.0 * np.pi * fft.fftfreq(F.x.size, d=F.dx)
  spectrum = fft.fft(F.F, axis=0)
  moved = np.real(fft.ifft(spectrum * np.exp(-1j * np.outer(k, displacement)), axis=0))
  # Fourier ringing leaves round-off negatives in the tails
  moved = np.clip(moved, 0.0, None)
  moved /= np.sum(moved) * F.dx * F.dp
  return PhaseSpaceDensity(F=moved, x=F.x, p=F.p, t=t)


def _dx(values: np.ndarray, dx: float) -> np.ndarray:
  n = values.shape[0]
  k = 2.0 * np.pi * fft.fftfreq(n, d=dx)
  if n % 2 == 0:
    k[n // 2] = 0.0
  return fft.ifft(1j * k[:, None] * fft.fft(values, axis=0), axis=0)


def _d_delta(values: np.ndarray, delta: np.ndarray) -> np.ndarray:
  return np.gradient(values, delta, axis=1, edge_order=2)


def free_equation_residual(F: PhaseSpaceDensity, m: float, dt: float,
                           orientation: Orientation = "+", flow_sign: int = 1,
                           delta: Optional[np.ndarray] = None) -> float:
  """
  max |−(1/m)∂x∂δρ − λ·i∂tρ| between F and its free flow over dt, with λ
  matched to the orientation. The spatial term is averaged over both ends.
  """
  if m == 0.0 or dt <= 0.0:
    raise ArgumentError("free residual needs m ≠ 0 and dt > 0")
  delta = delta_stencil() if delta is None else np.asarray(delta, dtype=float)
  lam = 1 if orientation == "+" else -1
  before = wigner_moyal_transform(F, delta, orientation).values
  after = wigner_moyal_transform(free_flow(F, m, dt, flow_sign), delta, orientation).values

  def spatial(values):
    return -_d_delta(_dx(values, F.dx), delta) / m

  time_term = -lam * 1j * (after - before) / dt
  residual = 0.5 * (spatial(before) + spatial(after)) + time_term
  return float(np.max(np.abs(residual)))


def relativistic_transform(F: PhaseSpaceDensity, m: float, delta_x: np.ndarray,
                           delta_t: np.ndarray, orientation: Orientation = "+") -> np.ndarray:
  """ρ[i, a, b] at (x_i; δt_a, δx_b) for an on-shell density."""
  delta_x = np.asarray(delta_x, dtype=float).reshape(-1)
  delta_t = np.asarray(delta_t, dtype=float).reshape(-1)
  _check_nyquist(F.p, delta_x)
  energy = np.sqrt(F.p ** 2 + m * m)
  phase = (energy[:, None, None] * delta_t[None, :, None]
           - F.p[:, None, None] * delta_x[None, None, :])
  values = np.tensordot(F.F, np.exp(1j * phase), axes=(1, 0)) * F.dp
  return _orient(values, orientation)


def four_momentum_expectation(F: PhaseSpaceDensity, m: float, lam: int,
                              orientation: Orientation = "+",
                              h: float = DEFAULT_STEP) -> Tuple[float, float]:
  """(⟨E⟩, ⟨p⟩) from λ·(1/i)·∂/∂δx_α at zero separation, space integrated at fixed t."""
  if lam not in (1, -1):
    raise ArgumentError(f"λ must be ±1, got {lam!r}")
  stencil = delta_stencil(h)
  zero = np.zeros(1)
  along_t = np.sum(relativistic_transform(F, m, zero, stencil, orientation)[:, :, 0], axis=0) * F.dx
  along_x = np.sum(relativistic_transform(F, m, stencil, zero, orientation)[:, 0, :], axis=0) * F.dx
  weight = _weight_at_zero(along_t, stencil)
  energy = np.real(lam * _slope_at_zero(along_t, stencil) / 1j) / weight
  momentum = -np.real(lam * _slope_at_zero(along_x, stencil) / 1j) / weight
  return float(energy), float(momentum)


def relativistic_free_residual(F: PhaseSpaceDensity, m: float, dt: float,
                               h: float = DEFAULT_STEP) -> float:
  """max |∂t∂δt ρ − ∂x∂δx ρ| at δt = 0 under the flow x → x + (p/E)dt."""
  if dt <= 0.0:
    raise ArgumentError("dt must be positive")
  stencil = delta_stencil(h)
  ends = (F, relativistic_flow(F, m, dt))
  steps = (-h, 0.0, h)
  tilted = []
  sheared = []
  for density in ends:
    values = relativistic_transform(density, m, stencil, np.array(steps))
    tilted.append((values[:, 2, :] - values[:, 0, :]) / (2.0 * h))
    sheared.append(_d_delta(_dx(values[:, 1, :], F.dx), stencil))
  residual = (tilted[1] - tilted[0]) / dt - 0.5 * (sheared[0] + sheared[1])
  return float(np.max(np.abs(residual)))
