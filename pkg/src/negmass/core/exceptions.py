"""
Exception hierarchy shared by every negmass module.

Argument problems map to CLI exit code 1, numerical failures to exit code 2.
"""
from typing import Iterable, List, Optional, Sequence, Tuple


class NegMassError(Exception):
  """Base class for all workbench errors."""


class ArgumentError(NegMassError, ValueError):
  """A precondition on the inputs of an operation does not hold."""


class DegenerateClassificationError(ArgumentError):
  """The λ bilinear vanishes, so the particle/antiparticle sign is undefined."""

  def __init__(self, indices: Sequence[int], tolerance: float):
    self.indices = [int(i) for i in indices]
    self.tolerance = tolerance
    shown = self.indices[:10]
    more = "" if len(self.indices) <= 10 else f" (+{len(self.indices) - 10} more)"
    super().__init__(
        f"λ bilinear within {tolerance:g} of zero at grid points {shown}{more}")


class NumericalError(NegMassError, ArithmeticError):
  """A numerical procedure failed; carries the offending residual."""

  def __init__(self, message: str, residual: float = float("nan"),
               tolerance: Optional[float] = None):
    self.residual = float(residual)
    self.tolerance = tolerance
    super().__init__(message)


class SolverConvergenceError(NumericalError):
  """The implicit step did not reach the requested residual."""


class ConsistencyError(NumericalError):
  """Two independent evaluations of the same quantity disagree."""


class ConfigurationError(NegMassError):
  """A scenario configuration is malformed or fails validation."""

  def __init__(self, message: str, diagnostics: Optional[Iterable[Tuple[str, str]]] = None):
    self.diagnostics: List[Tuple[str, str]] = list(diagnostics or [])
    super().__init__(message)

  def __str__(self) -> str:
    base = super().__str__()
    if not self.diagnostics:
      return base
    lines = [f"  {loc}: {msg}" for loc, msg in self.diagnostics]
    return base + "\n" + "\n".join(lines)
