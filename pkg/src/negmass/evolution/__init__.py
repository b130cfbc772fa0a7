"""
Time integration of the Feshbach–Villars and eight-component systems.
"""

from .propagator import (
  EvolutionConfig,
  EvolutionReport,
  Propagator,
  stability_bound,
  discrete_phase,
  step_kg,
  step_dirac,
  evolve,
)
from .diagnostics import continuity_residual, signed_norm, density, current

__all__ = [
  "EvolutionConfig",
  "EvolutionReport",
  "Propagator",
  "stability_bound",
  "discrete_phase",
  "step_kg",
  "step_dirac",
  "evolve",
  "continuity_residual",
  "signed_norm",
  "density",
  "current",
]
