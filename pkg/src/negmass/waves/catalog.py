"""
Rest-frame spinor catalog of the eight-component system and the tables built on it.

The u/v families solve the original equation, μ/ν the Ψ_c1 equation and ω/η
the Ψ_c2 equation. Every entry is a canonical basis vector times
exp(±i·E_p·τ) with E_p = |m|.
"""
import logging
from functools import lru_cache
from typing import Dict, List, Tuple

import numpy as np

from ..algebra.spinors import SPIN_Z, basis, big_matrix, conj_dirac_c1, conj_dirac_c2
from ..core.exceptions import ArgumentError, ConsistencyError
from ..core.grid import GridSpec
from ..models.labels import SPIN_ARROWS, FAMILY_SYMBOLS, ParticleLabel, RestSpinor
from ..models.states import DiracState
from .dirac import spin_parity

logger = logging.getLogger(__name__)

# family -> β eigenvalue
FAMILY_PARITY: Dict[str, int] = {"u": 1, "v": -1, "mu": 1, "nu": -1, "omega": -1, "eta": 1}

# family, kind, charge, spin, basis index, phase sign
_REST_ROWS = (
  ("u", "P", 1, "up", 1, -1),
  ("u", "P", 1, "down", 2, -1),
  ("u", "A", 1, "down", 3, 1),
  ("u", "A", 1, "up", 4, 1),
  ("v", "P", 1, "up", 5, -1),
  ("v", "P", 1, "down", 6, -1),
  ("v", "A", 1, "down", 7, 1),
  ("v", "A", 1, "up", 8, 1),
  ("mu", "A", -1, "up", 1, 1),
  ("mu", "A", -1, "down", 2, 1),
  ("mu", "P", -1, "down", 3, -1),
  ("mu", "P", -1, "up", 4, -1),
  ("nu", "A", -1, "up", 5, 1),
  ("nu", "A", -1, "down", 6, 1),
  ("nu", "P", -1, "down", 7, -1),
  ("nu", "P", -1, "up", 8, -1),
  ("omega", "A", -1, "up", 5, 1),
  ("omega", "A", -1, "down", 6, 1),
  ("omega", "P", -1, "down", 7, -1),
  ("omega", "P", -1, "up", 8, -1),
  ("eta", "A", -1, "up", 1, 1),
  ("eta", "A", -1, "down", 2, 1),
  ("eta", "P", -1, "down", 3, -1),
  ("eta", "P", -1, "up", 4, -1),
)

# (family, aliased family) pairs, listed with reversed arrows: ω₀↑ = ν₀↓, ω₀↓ = ν₀↑, η₀↑ = μ₀↓, η₀↓ = μ₀↑
_ALIAS_FAMILIES = (("omega", "nu"), ("eta", "mu"))

# source family -> (Ψ_c1 partner family, Ψ_c2 partner family)
_PARTNER_FAMILIES = {"u": ("mu", "omega"), "v": ("nu", "eta")}

# amplitude of each (mass, charge, spin) combination for spinning particles
_SPIN_AMPLITUDE_ROWS = (
  ("+", "+", "up", "φ1"),
  ("+", "+", "down", "χ1"),
  ("+", "-", "up", "χ2†"),
  ("+", "-", "down", "φ2†"),
  ("-", "+", "up", "φ2"),
  ("-", "+", "down", "χ2"),
  ("-", "-", "up", "χ1†"),
  ("-", "-", "down", "φ1†"),
)


def spin_projection(basis_index: int) -> float:
  """±½ from Σ₃ combined with the embedded σ₃ on basis vector e_k."""
  vector = basis(basis_index, 8)
  return 0.5 * float(np.real(vector.conj() @ SPIN_Z @ vector))


def rest_vector(entry: RestSpinor) -> np.ndarray:
  return basis(entry.basis_index, 8)


@lru_cache(maxsize=1)
def _build_catalog() -> Tuple[RestSpinor, ...]:
  entries = []
  for family, kind, charge, spin, index, phase in _REST_ROWS:
    label = ParticleLabel.from_dyad(kind, charge, spin, FAMILY_PARITY[family])
    entries.append(RestSpinor(family=family, label=label, basis_index=index, phase_sign=phase))
  _validate(entries)
  return tuple(entries)


def _validate(entries: List[RestSpinor]) -> None:
  for entry in entries:
    vector = basis(entry.basis_index, 8)
    parity = spin_parity(vector)
    if parity != entry.label.spin_parity:
      raise ConsistencyError(f"{entry.notation}: β eigenvalue {parity} contradicts the label")
    if spin_projection(entry.basis_index) != entry.label.spin_projection:
      raise ConsistencyError(f"{entry.notation}: spin projection contradicts the label")
    if entry.phase_sign != -entry.label.mass_sign:
      raise ConsistencyError(f"{entry.notation}: time phase contradicts the mass sign")


def rest_catalog() -> List[RestSpinor]:
  """All 24 rest spinors, checked for parity, spin projection and phase."""
  return list(_build_catalog())


def catalog_entry(family: str, spin: str, kind: str) -> RestSpinor:
  for entry in _build_catalog():
    if entry.family == family and entry.label.spin == spin and entry.label.kind == kind:
      return entry
  raise ArgumentError(f"no rest spinor for family={family!r}, spin={spin!r}, kind={kind!r}")


def rest_state(entry: RestSpinor, grid: GridSpec, m: float = 1.0, tau: float = 0.0,
               e: float = 1.0) -> DiracState:
  """
  Uniform rest state of one catalog entry at proper time τ.

  u/v entries carry (|m|, |e|); the conjugated families carry (−|m|, −|e|).
  """
  if m == 0.0:
    raise ArgumentError("rest states need a nonzero mass")
  sign = entry.label.charge_sign
  phase = np.exp(entry.phase_sign * 1j * abs(m) * tau)
  psi = np.outer(rest_vector(entry), np.full(grid.n, phase))
  return DiracState(psi=psi, grid=grid, m=sign * abs(m), e=sign * abs(e))


def _indices(family: str, spin: str) -> Tuple[int, ...]:
  return tuple(sorted(entry.basis_index for entry in _build_catalog()
                      if entry.family == family and entry.label.spin == spin))


def catalog_aliases() -> List[dict]:
  """
  Basis-vector identities between the Ψ_c2 and Ψ_c1 families.

  `reversed_spin_holds` tests the pairing with reversed arrows, `same_spin_holds`
  the pairing with equal arrows.
  """
  flip = {"up": "down", "down": "up"}
  rows = []
  for family, other in _ALIAS_FAMILIES:
    for spin in ("up", "down"):
      rows.append({
        "alias": (f"{FAMILY_SYMBOLS[family]}0{SPIN_ARROWS[spin]} = "
                  f"{FAMILY_SYMBOLS[other]}0{SPIN_ARROWS[flip[spin]]}"),
        "reversed_spin_holds": _indices(family, spin) == _indices(other, flip[spin]),
        "same_spin_holds": _indices(family, spin) == _indices(other, spin),
      })
  broken = [row["alias"] for row in rows if not row["reversed_spin_holds"]]
  if broken:
    logger.debug(f"alias pairing with reversed spins fails for {broken}")
  return rows


def family_parities() -> Dict[str, bool]:
  """β·f₀ = ±f₀ for every member of each family."""
  beta = big_matrix("beta")
  result = {}
  for family, parity in FAMILY_PARITY.items():
    vectors = [rest_vector(entry) for entry in _build_catalog() if entry.family == family]
    result[family] = all(np.array_equal(beta @ v, parity * v) for v in vectors)
  return result


def _photon_spin(total: float) -> str:
  if total == 0.0:
    return "0"
  return f"{int(total):+d}"


def _partner(entry: RestSpinor, conjugation, family: str) -> RestSpinor:
  image = conjugation(rest_vector(entry))
  support = np.flatnonzero(np.abs(image) > 0.0)
  if support.size != 1:
    raise ConsistencyError(f"conjugate of {entry.notation} is not a single basis vector")
  index = int(support[0]) + 1
  for candidate in _build_catalog():
    if candidate.family == family and candidate.basis_index == index:
      if candidate.phase_sign != -entry.phase_sign:
        raise ConsistencyError(f"{candidate.notation} does not carry the conjugated phase")
      if (candidate.label.mass_sign != -entry.label.mass_sign
          or candidate.label.charge_sign != -entry.label.charge_sign):
        raise ConsistencyError(
            f"{entry.notation} and {candidate.notation} do not have opposite mass and charge")
      return candidate
  raise ConsistencyError(f"no {family} entry on basis slot {index}")


def annihilation_table() -> List[dict]:
  """
  Ψ_c1 and Ψ_c2 partners of every u/v rest spinor with the spin carried by the
  emitted quantum (sum of the two spin projections).
  """
  rows = []
  for entry in _build_catalog():
    if entry.family not in _PARTNER_FAMILIES:
      continue
    c1_family, c2_family = _PARTNER_FAMILIES[entry.family]
    c1 = _partner(entry, conj_dirac_c1, c1_family)
    c2 = _partner(entry, conj_dirac_c2, c2_family)
    rows.append({
      "source": entry.notation,
      "c1_partner": c1.notation,
      "c1_photon_spin": _photon_spin(entry.label.spin_projection + c1.label.spin_projection),
      "c2_partner": c2.notation,
      "c2_photon_spin": _photon_spin(entry.label.spin_projection + c2.label.spin_projection),
    })
  return rows


def spin_table() -> List[dict]:
  return [
    {"mass": mass, "charge": charge, "spin": SPIN_ARROWS[spin], "amplitude": amplitude}
    for mass, charge, spin, amplitude in _SPIN_AMPLITUDE_ROWS
  ]
