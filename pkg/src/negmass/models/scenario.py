"""
Scenario configuration: one `Scenario` per run plus a parameter model per kind.

Every parameter has a default, so an empty `parameters` map is a valid run.
"""
from typing import Any, Dict, List, Literal, Optional, Tuple, Type, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from ..core.exceptions import ConfigurationError
from ..core.fields import EMConfig
from ..core.grid import GridSpec

Kind = Literal["planewave", "evolve-kg", "evolve-dirac", "tables", "phasespace", "trajectory",
               "verify"]
KINDS: Tuple[str, ...] = ("planewave", "evolve-kg", "evolve-dirac", "tables", "phasespace",
                          "trajectory", "verify")


class _Params(BaseModel):
  model_config = ConfigDict(extra="forbid", populate_by_name=True)


class FieldParams(_Params):
  phi0: float = 0.0
  phi_slope: float = 0.0
  a0: float = 0.0
  e_field: Optional[Tuple[float, float, float]] = None
  h_field: Optional[Tuple[float, float, float]] = None
  derive_e_from_phi: bool = False

  def to_em(self) -> EMConfig:
    return EMConfig.uniform(
      phi0=self.phi0,
      phi_slope=self.phi_slope,
      a0=self.a0,
      e_field=self.e_field,
      h_field=self.h_field,
      derive_e_from_phi=self.derive_e_from_phi,
    )


class PlaneWaveParams(_Params):
  lam: Literal[1, -1] = Field(1, alias="lambda")
  m: float = Field(1.0, gt=0.0)
  v: List[float] = Field(default_factory=lambda: [0.6])
  e: float = 0.0
  phi: float = 0.0
  a: float = 0.0

  @field_validator("v", mode="before")
  @classmethod
  def _as_list(cls, value):
    return value if isinstance(value, (list, tuple)) else [value]

  @field_validator("v")
  @classmethod
  def _subluminal(cls, values: List[float]) -> List[float]:
    for value in values:
      if not -1.0 < value < 1.0:
        raise ValueError(f"|v| must be below 1, got {value}")
    return values


def _default_grid() -> GridSpec:
  return GridSpec(n=256, dx=0.25, scheme="spectral")


class EvolveKGParams(_Params):
  grid: GridSpec = Field(default_factory=_default_grid)
  fields: FieldParams = Field(default_factory=FieldParams)
  m: float = 1.0
  e: float = 0.0
  k0: float = 0.3
  sigma: float = Field(5.0, gt=0.0)
  x_c: float = 0.0
  branch: Literal[1, -1] = 1
  dt: float = Field(0.01, gt=0.0)
  steps: int = Field(1000, ge=1)
  method: Literal["implicit-midpoint", "explicit-rk4"] = "implicit-midpoint"
  tolerance: Optional[float] = Field(None, gt=0.0)
  record_every: int = Field(10, ge=1)

  @field_validator("m")
  @classmethod
  def _mass_nonzero(cls, value: float) -> float:
    if value == 0.0:
      raise ValueError("mass must be nonzero")
    return value


class EvolveDiracParams(EvolveKGParams):
  state: Literal["rest", "packet"] = "rest"
  family: Literal["u", "v"] = "u"
  spin: Literal["up", "down"] = "up"
  kind: Literal["P", "A"] = "P"
  phi_spinor: Tuple[float, float] = (1.0, 0.0)
  chi_spinor: Tuple[float, float] = (0.0, 0.0)
  grid: GridSpec = Field(default_factory=lambda: GridSpec(n=64, dx=0.5, scheme="spectral"))
  steps: int = Field(200, ge=1)


class TablesParams(_Params):
  pass


class PhaseSpaceParams(_Params):
  n_x: int = Field(256, ge=8)
  dx: float = Field(0.1, gt=0.0)
  p_min: float = -6.0
  p_max: float = 10.0
  dp: float = Field(0.02, gt=0.0)
  x0: float = 0.0
  sigma_x: float = Field(1.0, gt=0.0)
  p0: float = 2.0
  sigma_p: float = Field(0.5, gt=0.0)
  m: float = 1.0
  dt: float = Field(0.01, gt=0.0)
  h: float = Field(1e-3, gt=0.0)
  delta_max: float = Field(0.5, gt=0.0)
  n_delta: int = Field(41, ge=3)


class TrajectoryParams(_Params):
  mode: Literal["magnetic", "gravity", "both"] = "both"
  m: float = 1.0
  e: float = 1.0
  x: Tuple[float, float] = (0.0, 0.0)
  v: Tuple[float, float] = (0.5, 0.0)
  b: float = 1.0
  g: Tuple[float, float] = (0.0, -0.01)
  t_end: float = Field(20.0, gt=0.0)
  dt: float = Field(0.01, gt=0.0)

  @field_validator("m")
  @classmethod
  def _mass_nonzero(cls, value: float) -> float:
    if value == 0.0:
      raise ValueError("mass must be nonzero")
    return value


class VerifyParams(_Params):
  samples: int = Field(100, ge=1)
  checks: Optional[List[str]] = None
  include_slow: bool = True


PARAMETER_MODELS: Dict[str, Type[_Params]] = {
  "planewave": PlaneWaveParams,
  "evolve-kg": EvolveKGParams,
  "evolve-dirac": EvolveDiracParams,
  "tables": TablesParams,
  "phasespace": PhaseSpaceParams,
  "trajectory": TrajectoryParams,
  "verify": VerifyParams,
}

ParamsModel = Union[PlaneWaveParams, EvolveKGParams, EvolveDiracParams, TablesParams,
                    PhaseSpaceParams, TrajectoryParams, VerifyParams]


class Scenario(BaseModel):
  model_config = ConfigDict(extra="forbid")

  kind: Kind
  parameters: Dict[str, Any] = Field(default_factory=dict)
  seed: Optional[int] = None
  output_path: Optional[str] = None

  def params(self) -> ParamsModel:
    """Validated parameter model for this kind."""
    try:
      return PARAMETER_MODELS[self.kind].model_validate(self.parameters)
    except ValidationError as exc:
      raise ConfigurationError(
          f"invalid parameters for '{self.kind}'", diagnostics=_diagnostics(exc, "parameters")) from exc

  @classmethod
  def load(cls, data: Dict[str, Any]) -> "Scenario":
    try:
      scenario = cls.model_validate(data)
    except ValidationError as exc:
      raise ConfigurationError("invalid scenario", diagnostics=_diagnostics(exc)) from exc
    scenario.params()
    return scenario


def _diagnostics(exc: ValidationError, prefix: str = "") -> List[Tuple[str, str]]:
  out = []
  for error in exc.errors():
    loc = ".".join(str(part) for part in error["loc"])
    out.append((f"{prefix}.{loc}" if prefix and loc else (loc or prefix), error["msg"]))
  return out
