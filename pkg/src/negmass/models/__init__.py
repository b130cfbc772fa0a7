"""
Domain types of the workbench.
"""

from .labels import ParticleLabel, RestSpinor
from .scenario import KINDS, PARAMETER_MODELS, Scenario
from .states import (
  DIRAC_COMPONENTS,
  FV_COMPONENTS,
  PlaneWave,
  FVState,
  DiracState,
  PointParticle,
  PhaseSpaceDensity,
  CorrelationSlice,
  Trajectory,
)

__all__ = [
  "ParticleLabel",
  "RestSpinor",
  "DIRAC_COMPONENTS",
  "FV_COMPONENTS",
  "PlaneWave",
  "FVState",
  "DiracState",
  "PointParticle",
  "PhaseSpaceDensity",
  "CorrelationSlice",
  "Trajectory",
  "KINDS",
  "PARAMETER_MODELS",
  "Scenario",
]
