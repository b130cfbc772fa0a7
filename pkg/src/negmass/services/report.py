"""
Machine-readable verification report.
"""
import math
from typing import Any, Dict, Iterable, List, Optional

import numpy as np
import pandas as pd
import pydantic
import scipy
from pydantic import BaseModel, ConfigDict, Field, field_validator

TOOL_NAME = "negmass"


class CheckResult(BaseModel):
  model_config = ConfigDict(populate_by_name=True)

  check_name: str
  residual: Optional[float]
  tolerance: float
  passed: bool = Field(..., alias="pass")

  @field_validator("residual", mode="before")
  @classmethod
  def _finite_or_none(cls, value):
    if value is None:
      return None
    value = float(value)
    return value if math.isfinite(value) else None

  @classmethod
  def upper_bound(cls, name: str, residual: float, tolerance: float) -> "CheckResult":
    """Pass when residual ≤ tolerance (non-finite residuals fail)."""
    ok = bool(math.isfinite(residual) and residual <= tolerance)
    return cls(check_name=name, residual=residual, tolerance=tolerance, passed=ok)

  def to_dict(self) -> Dict[str, Any]:
    return self.model_dump(by_alias=True)


def versions() -> Dict[str, str]:
  from .. import __version__
  return {
    "negmass": __version__,
    "numpy": np.__version__,
    "pandas": pd.__version__,
    "pydantic": pydantic.VERSION,
    "scipy": scipy.__version__,
  }


def emit_report(results: Iterable[CheckResult], kind: str = "verify", seed: Optional[int] = None,
                grid: Optional[Dict[str, Any]] = None, parameters: Optional[Dict[str, Any]] = None,
                discrepancies: Optional[List[Dict[str, Any]]] = None,
                artifacts: Optional[List[str]] = None) -> Dict[str, Any]:
  """Report document; key order is fixed at serialisation time by sorting."""
  checks = [result.to_dict() for result in results]
  return {
    "tool": TOOL_NAME,
    "version": versions()["negmass"],
    "versions": versions(),
    "kind": kind,
    "seed": seed,
    "grid": grid,
    "parameters": _jsonable(parameters or {}),
    "checks": checks,
    "discrepancies": list(discrepancies or []),
    "artifacts": sorted(artifacts or []),
    "passed": all(check["pass"] for check in checks),
  }


def _jsonable(value: Any) -> Any:
  if isinstance(value, BaseModel):
    return _jsonable(value.model_dump(mode="json", by_alias=True))
  if isinstance(value, dict):
    return {str(k): _jsonable(v) for k, v in value.items()}
  if isinstance(value, (list, tuple)):
    return [_jsonable(v) for v in value]
  if isinstance(value, np.generic):
    return value.item()
  return value
