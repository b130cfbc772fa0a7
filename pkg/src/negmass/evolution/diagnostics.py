"""
Conservation diagnostics shared by both first-order-in-time systems.
"""
from typing import Union

import numpy as np

from ..core.exceptions import ArgumentError
from ..core.fields import EMConfig
from ..models.states import DiracState, FVState
from ..waves.dirac import dirac_current, dirac_density
from ..waves.feshbach_villars import kg_current, kg_density

State = Union[FVState, DiracState]


def density(state: State) -> np.ndarray:
  if isinstance(state, FVState):
    return kg_density(state)
  if isinstance(state, DiracState):
    return dirac_density(state)
  raise ArgumentError(f"unsupported state type {type(state).__name__}")


def current(state: State, em: EMConfig) -> np.ndarray:
  if isinstance(state, FVState):
    return kg_current(state, em)
  if isinstance(state, DiracState):
    return dirac_current(state, em)
  raise ArgumentError(f"unsupported state type {type(state).__name__}")


def signed_norm(state: State) -> float:
  """∫ρ dx over the grid; equals λ for a normalised single-branch state."""
  return float(state.grid.integrate(density(state)))


def continuity_residual(before: State, after: State, em: EMConfig, dt: float) -> float:
  """max |(ρ_after − ρ_before)/dt + ∂x j̄| with j̄ the mean of the endpoint currents."""
  if dt <= 0.0:
    raise ArgumentError(f"dt must be positive, got {dt}")
  if type(before) is not type(after) or before.grid != after.grid:
    raise ArgumentError("continuity needs two states of the same kind on the same grid")
  grid = before.grid
  rate = (density(after) - density(before)) / dt
  mean_current = 0.5 * (current(before, em) + current(after, em))
  return float(np.max(np.abs(rate + grid.derivative(mean_current))))
