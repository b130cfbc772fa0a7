from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

Kind = Literal["P", "A"]
Spin = Literal["up", "down", "none"]
Family = Literal["u", "v", "mu", "nu", "omega", "eta"]

SPIN_ARROWS = {"up": "↑", "down": "↓", "none": ""}
FAMILY_SYMBOLS = {"u": "u", "v": "v", "mu": "μ", "nu": "ν", "omega": "ω", "eta": "η"}


def _sign(value: int) -> str:
  return "+" if value > 0 else "-"


class ParticleLabel(BaseModel):
  """Mass/charge dyad plus optional spin data. P carries positive mass, A negative."""
  model_config = ConfigDict(frozen=True, extra="forbid")

  mass_sign: Literal[1, -1]
  charge_sign: Literal[1, -1]
  kind: Kind
  spin: Spin = "none"
  spin_parity: Optional[Literal[1, -1]] = None

  @model_validator(mode="after")
  def _kind_matches_mass(self) -> "ParticleLabel":
    if (self.kind == "P") != (self.mass_sign == 1):
      raise ValueError(f"kind {self.kind} inconsistent with mass sign {self.mass_sign}")
    return self

  @classmethod
  def from_dyad(cls, kind: Kind, charge_sign: int, spin: Spin = "none",
                spin_parity: Optional[int] = None) -> "ParticleLabel":
    return cls(
      mass_sign=1 if kind == "P" else -1,
      charge_sign=charge_sign,
      kind=kind,
      spin=spin,
      spin_parity=spin_parity,
    )

  @property
  def lam(self) -> int:
    return self.mass_sign

  @property
  def dyad(self) -> str:
    return f"({self.kind},{_sign(self.charge_sign)})"

  @property
  def spin_projection(self) -> float:
    return {"up": 0.5, "down": -0.5, "none": 0.0}[self.spin]

  def conjugate(self) -> "ParticleLabel":
    """Opposite mass and charge, same spin data."""
    return ParticleLabel(
      mass_sign=-self.mass_sign,
      charge_sign=-self.charge_sign,
      kind="A" if self.kind == "P" else "P",
      spin=self.spin,
      spin_parity=self.spin_parity,
    )


class RestSpinor(BaseModel):
  """Rest-frame eight-component basis spinor e_k·exp(phase_sign·i·m·τ)."""
  model_config = ConfigDict(frozen=True, extra="forbid")

  family: Family
  label: ParticleLabel
  basis_index: int = Field(..., ge=1, le=8)
  phase_sign: Literal[1, -1]

  @property
  def notation(self) -> str:
    arrow = SPIN_ARROWS[self.label.spin]
    parity = "" if self.label.spin_parity is None else f"({_sign(self.label.spin_parity)})"
    return f"{FAMILY_SYMBOLS[self.family]}0{arrow}{parity}^{self.label.dyad}"
