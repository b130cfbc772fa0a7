"""
Small-dimension spinor algebra.

Pauli matrices, the 8×8 block matrices of the second-order Dirac system,
canonical basis vectors, the embedded spin operators and the conjugation
maps. Every matrix holds entries in {0, ±1, ±i}, so products of them are
exact in floating point.

Eight-component ordering is (φ₁₁, φ₁₂, φ₂₁, φ₂₂, χ₁₁, χ₁₂, χ₂₁, χ₂₂): the
4×4 block index selects (φ₁, φ₂, χ₁, χ₂) and the inner index the spinor
component, so a block matrix B expands to kron(B, I₂) and an in-block spin
operator σ to kron(I₄, σ).
"""
import logging
from typing import Dict

import numpy as np

from ..core.exceptions import ArgumentError

logger = logging.getLogger(__name__)


def _frozen(values) -> np.ndarray:
  arr = np.array(values, dtype=complex)
  arr.flags.writeable = False
  return arr


_I2 = np.eye(2, dtype=complex)
_PAULI = {
  1: _frozen([[0, 1], [1, 0]]),
  2: _frozen([[0, -1j], [1j, 0]]),
  3: _frozen([[1, 0], [0, -1]]),
}

_BLOCKS = {
  "Sigma1": [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]],
  "Sigma2": [[0, -1j, 0, 0], [1j, 0, 0, 0], [0, 0, 0, -1j], [0, 0, 1j, 0]],
  "Sigma3": [[1, 0, 0, 0], [0, -1, 0, 0], [0, 0, 1, 0], [0, 0, 0, -1]],
  "alpha1": [[0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0], [1, 0, 0, 0]],
  "alpha2": [[0, 0, 0, -1j], [0, 0, 1j, 0], [0, -1j, 0, 0], [1j, 0, 0, 0]],
  "alpha3": [[0, 0, 1, 0], [0, 0, 0, -1], [1, 0, 0, 0], [0, -1, 0, 0]],
  "beta": [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1]],
}
_BIG = {name: _frozen(np.kron(np.array(block, dtype=complex), _I2)) for name, block in _BLOCKS.items()}

_ALIASES: Dict[str, str] = {
  "Σ₁": "Sigma1", "Σ1": "Sigma1", "sigma1": "Sigma1",
  "Σ₂": "Sigma2", "Σ2": "Sigma2", "sigma2": "Sigma2",
  "Σ₃": "Sigma3", "Σ3": "Sigma3", "sigma3": "Sigma3",
  "α₁": "alpha1", "α1": "alpha1",
  "α₂": "alpha2", "α2": "alpha2",
  "α₃": "alpha3", "α3": "alpha3",
  "β": "beta",
}

BIG_MATRIX_NAMES = tuple(_BLOCKS)


def pauli(axis: int) -> np.ndarray:
  if axis not in _PAULI:
    raise ArgumentError(f"Pauli axis must be 1, 2 or 3, got {axis!r}")
  return _PAULI[axis].copy()


def big_matrix(name: str) -> np.ndarray:
  key = _ALIASES.get(name, name)
  if key not in _BIG:
    raise ArgumentError(f"unknown 8×8 matrix {name!r}; expected one of {BIG_MATRIX_NAMES}")
  return _BIG[key].copy()


def basis(index: int, dim: int) -> np.ndarray:
  """Canonical basis vector e_index (1-based)."""
  if dim <= 0 or not 1 <= index <= dim:
    raise ArgumentError(f"basis index {index} outside 1..{dim}")
  vec = np.zeros(dim, dtype=complex)
  vec[index - 1] = 1.0
  return vec


def spin_embedding(axis: int) -> np.ndarray:
  """σ_axis repeated on each two-component sub-spinor."""
  return np.kron(np.eye(4, dtype=complex), pauli(axis))


def spin_dot(vectors: np.ndarray) -> np.ndarray:
  """Pointwise σ·X for X of shape (n, 3); returns (n, 2, 2)."""
  vectors = np.asarray(vectors, dtype=float)
  return np.einsum("nk,kab->nab", vectors, np.stack([_PAULI[1], _PAULI[2], _PAULI[3]]))


# σ₃ + iσ₂ and its eight-component analogues
LAMBDA2 = _frozen(_PAULI[3] + 1j * _PAULI[2])
LAMBDA8 = _frozen(_BIG["Sigma3"] + 1j * _BIG["Sigma2"])
GAMMA8 = _frozen(_BIG["alpha3"] + 1j * _BIG["alpha2"])

# rest-frame spin projection operator used by the catalog labels
SPIN_Z = _frozen(_BIG["Sigma3"] @ spin_embedding(3))

# Ψ†Σ₃iα₃β = C2_MATRIX_PHASE · (component listing)ᵀ
C2_MATRIX_PHASE = 1j
_C2_COMPONENT_MATRIX = _frozen(_BIG["Sigma3"] @ _BIG["alpha3"] @ _BIG["beta"])


def conj_kg_charge(psi: np.ndarray) -> np.ndarray:
  """σ₁Ψ*: same mass sign, charge sign reverted."""
  psi = _components(psi, 2)
  return np.stack([np.conj(psi[1]), np.conj(psi[0])])


def conj_kg_row(psi: np.ndarray) -> np.ndarray:
  """Row vector Ψ†σ₃ (entries along axis 0)."""
  psi = _components(psi, 2)
  return np.stack([np.conj(psi[0]), -np.conj(psi[1])])


def conj_dirac_c1(psi: np.ndarray) -> np.ndarray:
  """Ψ_c1 by components: mass and charge inverted, parity kept."""
  psi = _components(psi, 8)
  c = np.conj(psi)
  return np.stack([c[1], -c[0], c[3], -c[2], -c[5], c[4], -c[7], c[6]])


def conj_dirac_c1_matrix(psi: np.ndarray) -> np.ndarray:
  """Ψ_c1 = iβσ₂Ψ* with σ₂ embedded per sub-spinor."""
  psi = _components(psi, 8)
  op = 1j * _BIG["beta"] @ spin_embedding(2)
  return np.tensordot(op, np.conj(psi), axes=(1, 0))


def conj_dirac_c2(psi: np.ndarray) -> np.ndarray:
  """Ψ_c2 by components (transposed row): mass, charge and parity inverted."""
  psi = _components(psi, 8)
  c = np.conj(psi)
  return np.stack([c[4], c[5], c[6], c[7], -c[0], -c[1], -c[2], -c[3]])


def conj_dirac_c2_matrix(psi: np.ndarray) -> np.ndarray:
  """Row Ψ†Σ₃iα₃β evaluated by matrix products (entries along axis 0)."""
  psi = _components(psi, 8)
  op = _BIG["Sigma3"] @ (1j * _BIG["alpha3"]) @ _BIG["beta"]
  return np.tensordot(op.T, np.conj(psi), axes=(1, 0))


def conjugation_discrepancy() -> dict:
  """Compare matrix and component forms of both Dirac conjugations on the basis."""
  c1_mismatch = []
  c2_mismatch = []
  for k in range(1, 9):
    e_k = basis(k, 8)
    if not np.array_equal(conj_dirac_c1(e_k), conj_dirac_c1_matrix(e_k)):
      c1_mismatch.append(k)
    if not np.array_equal(conj_dirac_c2_matrix(e_k), C2_MATRIX_PHASE * conj_dirac_c2(e_k)):
      c2_mismatch.append(k)
  c2_plain = [k for k in range(1, 9)
              if not np.array_equal(conj_dirac_c2_matrix(basis(k, 8)), conj_dirac_c2(basis(k, 8)))]
  report = {
    "c1_matrix_equals_components": not c1_mismatch,
    "c2_matrix_equals_components": not c2_plain,
    "c2_matrix_over_components": "i" if not c2_mismatch else None,
    "authoritative": "components",
  }
  if c2_plain:
    logger.warning(
        f"Ψ_c2 matrix form differs from the component listing by the global factor "
        f"{report['c2_matrix_over_components']} on basis vectors {c2_plain}; using components")
  return report


def _components(psi: np.ndarray, dim: int) -> np.ndarray:
  psi = np.asarray(psi, dtype=complex)
  if psi.ndim == 0 or psi.shape[0] != dim:
    raise ArgumentError(f"expected {dim} components along axis 0, got shape {psi.shape}")
  return psi
