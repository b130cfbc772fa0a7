"""
Spinor algebra: Pauli and 8×8 block matrices, basis vectors and conjugations.
"""

from .spinors import (
  pauli,
  big_matrix,
  basis,
  spin_embedding,
  spin_dot,
  conj_kg_charge,
  conj_kg_row,
  conj_dirac_c1,
  conj_dirac_c1_matrix,
  conj_dirac_c2,
  conj_dirac_c2_matrix,
  conjugation_discrepancy,
  BIG_MATRIX_NAMES,
  LAMBDA2,
  LAMBDA8,
  GAMMA8,
  SPIN_Z,
  C2_MATRIX_PHASE,
)

__all__ = [
  "pauli",
  "big_matrix",
  "basis",
  "spin_embedding",
  "spin_dot",
  "conj_kg_charge",
  "conj_kg_row",
  "conj_dirac_c1",
  "conj_dirac_c1_matrix",
  "conj_dirac_c2",
  "conj_dirac_c2_matrix",
  "conjugation_discrepancy",
  "BIG_MATRIX_NAMES",
  "LAMBDA2",
  "LAMBDA8",
  "GAMMA8",
  "SPIN_Z",
  "C2_MATRIX_PHASE",
]
