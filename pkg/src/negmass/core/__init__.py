"""
Core utilities and configurations.
"""

from .config import get_settings, Settings
from .exceptions import (
  NegMassError,
  ArgumentError,
  DegenerateClassificationError,
  NumericalError,
  SolverConvergenceError,
  ConsistencyError,
  ConfigurationError,
)
from .grid import GridSpec
from .fields import EMConfig, SampledFields

__all__ = [
  'get_settings',
  'Settings',
  'NegMassError',
  'ArgumentError',
  'DegenerateClassificationError',
  'NumericalError',
  'SolverConvergenceError',
  'ConsistencyError',
  'ConfigurationError',
  'GridSpec',
  'EMConfig',
  'SampledFields',
]
