"""
Static electromagnetic configurations sampled on a grid.

Φ and A are scalar functions of x (A is the x-component of the vector
potential). E and H are 3-vectors per point; only their spin coupling
enters the eight-component system.
"""
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np

from .exceptions import ArgumentError
from .grid import GridSpec

ScalarProfile = Callable[[np.ndarray], np.ndarray]
VectorProfile = Callable[[np.ndarray], np.ndarray]


def _zero_scalar(x: np.ndarray) -> np.ndarray:
  return np.zeros_like(x, dtype=float)


def _zero_vector(x: np.ndarray) -> np.ndarray:
  return np.zeros((x.size, 3), dtype=float)


@dataclass(frozen=True)
class SampledFields:
  phi: np.ndarray
  a: np.ndarray
  e: np.ndarray
  h: np.ndarray

  @property
  def is_free(self) -> bool:
    return not (np.any(self.phi) or np.any(self.a) or np.any(self.e) or np.any(self.h))


@dataclass(frozen=True)
class EMConfig:
  phi: ScalarProfile = _zero_scalar
  a: ScalarProfile = _zero_scalar
  e: VectorProfile = _zero_vector
  h: VectorProfile = _zero_vector
  derive_e_from_phi: bool = False
  description: dict = field(default_factory=dict, compare=False)

  @classmethod
  def free(cls) -> "EMConfig":
    return cls(description={"type": "free"})

  @classmethod
  def uniform(
      cls,
      phi0: float = 0.0,
      phi_slope: float = 0.0,
      a0: float = 0.0,
      e_field: Optional[Sequence[float]] = None,
      h_field: Optional[Sequence[float]] = None,
      derive_e_from_phi: bool = False,
  ) -> "EMConfig":
    """Constant fields and a potential Φ = phi0 + phi_slope·x."""
    e_vec = _as_vector(e_field, "e_field")
    h_vec = _as_vector(h_field, "h_field")
    if derive_e_from_phi and np.any(e_vec):
      raise ArgumentError("e_field must be omitted when E is derived from Φ")

    return cls(
      phi=lambda x: phi0 + phi_slope * np.asarray(x, dtype=float),
      a=lambda x: np.full(np.shape(x), a0, dtype=float),
      e=lambda x: np.tile(e_vec, (np.size(x), 1)),
      h=lambda x: np.tile(h_vec, (np.size(x), 1)),
      derive_e_from_phi=derive_e_from_phi,
      description={
        "phi0": phi0,
        "phi_slope": phi_slope,
        "a0": a0,
        "e_field": e_vec.tolist(),
        "h_field": h_vec.tolist(),
        "derive_e_from_phi": derive_e_from_phi,
      },
    )

  def sample(self, grid: GridSpec) -> SampledFields:
    x = grid.x
    phi = np.asarray(self.phi(x), dtype=float).reshape(grid.n)
    a = np.asarray(self.a(x), dtype=float).reshape(grid.n)
    h = np.asarray(self.h(x), dtype=float).reshape(grid.n, 3)
    if self.derive_e_from_phi:
      e = np.zeros((grid.n, 3))
      e[:, 0] = -np.gradient(phi, grid.dx, edge_order=2)
    else:
      e = np.asarray(self.e(x), dtype=float).reshape(grid.n, 3)
    for name, values in (("phi", phi), ("a", a), ("e", e), ("h", h)):
      if not np.all(np.isfinite(values)):
        raise ArgumentError(f"field {name} is not finite on the grid")
    return SampledFields(phi=phi, a=a, e=e, h=h)


def _as_vector(values: Optional[Sequence[float]], name: str) -> np.ndarray:
  if values is None:
    return np.zeros(3)
  vec = np.asarray(values, dtype=float).reshape(-1)
  if vec.size != 3:
    raise ArgumentError(f"{name} must have 3 components, got {vec.size}")
  return vec
