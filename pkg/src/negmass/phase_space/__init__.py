"""
Phase-space densities and their infinitesimal Wigner–Moyal transforms.
"""

from .wigner_moyal import (
  gaussian_density,
  delta_stencil,
  wigner_moyal_transform,
  momentum_expectation,
  energy_density,
  free_flow,
  relativistic_flow,
  free_equation_residual,
  relativistic_transform,
  four_momentum_expectation,
  relativistic_free_residual,
)

__all__ = [
  "gaussian_density",
  "delta_stencil",
  "wigner_moyal_transform",
  "momentum_expectation",
  "energy_density",
  "free_flow",
  "relativistic_flow",
  "free_equation_residual",
  "relativistic_transform",
  "four_momentum_expectation",
  "relativistic_free_residual",
]
