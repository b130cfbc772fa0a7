"""
Value types flowing between the physics modules.

Field states are immutable dataclasses holding numpy arrays shaped
(components, n); scalar inputs are validated pydantic models.
"""
import math
from dataclasses import dataclass, field
from typing import List, Literal, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..core.exceptions import ArgumentError
from ..core.grid import GridSpec
from .labels import ParticleLabel

# slot order of the eight-component spinor
DIRAC_COMPONENTS = ("phi11", "phi12", "phi21", "phi22", "chi11", "chi12", "chi21", "chi22")
FV_COMPONENTS = ("phi1", "phi2")


class PlaneWave(BaseModel):
  """Free solution exp[−λi(E_p t − p x)] with E_p = mγ and p = mγv."""
  model_config = ConfigDict(frozen=True, extra="forbid")

  lam: Literal[1, -1] = Field(..., description="particle (+1) or antiparticle (-1) branch")
  m: float = Field(1.0, description="nominal positive mass; λ carries the sign")
  v: float = Field(0.0, gt=-1.0, lt=1.0, description="velocity as a fraction of c")

  @field_validator("m")
  @classmethod
  def _mass_nonzero(cls, value: float) -> float:
    if value == 0.0 or not math.isfinite(value):
      raise ValueError("mass must be finite and nonzero")
    return value

  @property
  def gamma(self) -> float:
    return 1.0 / math.sqrt(1.0 - self.v * self.v)

  @property
  def energy(self) -> float:
    return self.m * self.gamma

  @property
  def momentum(self) -> float:
    return self.m * self.v * self.gamma

  def label(self, charge_sign: int = 1) -> ParticleLabel:
    return ParticleLabel.from_dyad("P" if self.lam == 1 else "A", charge_sign)


def _check_field(psi: np.ndarray, components: int, grid: GridSpec, name: str) -> np.ndarray:
  psi = np.asarray(psi, dtype=complex)
  if psi.shape != (components, grid.n):
    raise ArgumentError(f"{name} must have shape ({components}, {grid.n}), got {psi.shape}")
  if not np.all(np.isfinite(psi)):
    raise ArgumentError(f"{name} contains non-finite entries")
  return psi


def _check_mass(m: float) -> None:
  if m == 0.0 or not math.isfinite(m):
    raise ArgumentError("mass must be finite and nonzero")


@dataclass(frozen=True)
class FVState:
  """Feshbach–Villars two-component field (φ₁, φ₂)."""
  psi: np.ndarray
  grid: GridSpec
  m: float = 1.0
  e: float = 0.0

  def __post_init__(self):
    object.__setattr__(self, "psi", _check_field(self.psi, 2, self.grid, "FV field"))
    _check_mass(self.m)

  @property
  def phi1(self) -> np.ndarray:
    return self.psi[0]

  @property
  def phi2(self) -> np.ndarray:
    return self.psi[1]

  def with_psi(self, psi: np.ndarray) -> "FVState":
    return FVState(psi=psi, grid=self.grid, m=self.m, e=self.e)


@dataclass(frozen=True)
class DiracState:
  """Eight-component field ordered (φ₁₁, φ₁₂, φ₂₁, φ₂₂, χ₁₁, χ₁₂, χ₂₁, χ₂₂)."""
  psi: np.ndarray
  grid: GridSpec
  m: float = 1.0
  e: float = 0.0

  def __post_init__(self):
    object.__setattr__(self, "psi", _check_field(self.psi, 8, self.grid, "Dirac field"))
    _check_mass(self.m)

  @property
  def phi(self) -> Tuple[np.ndarray, np.ndarray]:
    return self.psi[0:2], self.psi[2:4]

  @property
  def chi(self) -> Tuple[np.ndarray, np.ndarray]:
    return self.psi[4:6], self.psi[6:8]

  def with_psi(self, psi: np.ndarray) -> "DiracState":
    return DiracState(psi=psi, grid=self.grid, m=self.m, e=self.e)


class PointParticle(BaseModel):
  model_config = ConfigDict(frozen=True, extra="forbid")

  m: float
  e: float = 0.0
  x: Tuple[float, float] = (0.0, 0.0)
  v: Tuple[float, float] = (0.0, 0.0)

  @field_validator("m")
  @classmethod
  def _mass_nonzero(cls, value: float) -> float:
    if value == 0.0:
      raise ValueError("mass must be nonzero")
    return value

  @model_validator(mode="after")
  def _subluminal(self) -> "PointParticle":
    if math.hypot(*self.v) >= 1.0:
      raise ValueError("speed must be below c")
    return self

  def antiparticle(self) -> "PointParticle":
    """Opposite mass, charge and velocity at the same creation point."""
    return PointParticle(m=-self.m, e=-self.e, x=self.x, v=(-self.v[0], -self.v[1]))


@dataclass(frozen=True)
class PhaseSpaceDensity:
  """Nonnegative F(x, p) with F[i, j] at (x[i], p[j]), normalised to one."""
  F: np.ndarray
  x: np.ndarray
  p: np.ndarray
  t: float = 0.0

  def __post_init__(self):
    F = np.asarray(self.F, dtype=float)
    x = np.asarray(self.x, dtype=float)
    p = np.asarray(self.p, dtype=float)
    if F.shape != (x.size, p.size):
      raise ArgumentError(f"F must have shape ({x.size}, {p.size}), got {F.shape}")
    if np.any(F < 0.0):
      raise ArgumentError("phase-space density must be nonnegative")
    object.__setattr__(self, "F", F)
    object.__setattr__(self, "x", x)
    object.__setattr__(self, "p", p)
    total = self.total()
    if abs(total - 1.0) > 1e-10:
      raise ArgumentError(f"phase-space density integrates to {total!r}, expected 1")

  @property
  def dx(self) -> float:
    return float(self.x[1] - self.x[0])

  @property
  def dp(self) -> float:
    return float(self.p[1] - self.p[0])

  def total(self) -> float:
    return float(np.sum(self.F) * self.dx * self.dp)

  def marginal_x(self) -> np.ndarray:
    return np.sum(self.F, axis=1) * self.dp

  def marginal_p(self) -> np.ndarray:
    return np.sum(self.F, axis=0) * self.dx


@dataclass(frozen=True)
class CorrelationSlice:
  """ρ(x − δ/2, x + δ/2) sampled on x × δ; orientation '-' is the conjugate ordering."""
  values: np.ndarray
  x: np.ndarray
  delta: np.ndarray
  orientation: Literal["+", "-"] = "+"
  t: float = 0.0

  @property
  def dx(self) -> float:
    return float(self.x[1] - self.x[0])

  def diagonal(self) -> np.ndarray:
    zero = np.flatnonzero(np.isclose(self.delta, 0.0, atol=1e-15))
    if zero.size == 0:
      raise ArgumentError("slice does not contain δ = 0")
    return self.values[:, zero[0]]

  def swapped(self) -> "CorrelationSlice":
    return CorrelationSlice(
      values=np.conj(self.values),
      x=self.x,
      delta=self.delta,
      orientation="-" if self.orientation == "+" else "+",
      t=self.t,
    )


@dataclass
class Trajectory:
  """Sampled track of one point particle plus the fitted orbit data."""
  label: str
  particle: PointParticle
  t: np.ndarray
  position: np.ndarray
  velocity: np.ndarray
  omega: Optional[float] = None
  radius: Optional[float] = None
  centre: Optional[Tuple[float, float]] = None
  notes: List[str] = field(default_factory=list)
