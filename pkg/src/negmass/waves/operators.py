"""
Sparse assembly of the first-order-in-time generators.

A K-component field sampled on n points is flattened component-major, so a
constant K×K matrix M acting on the components becomes kron(M, I_n) and a
spatial operator L acting on every component becomes kron(I_K, L).
"""
from typing import Optional

import numpy as np
from scipy import sparse

from ..algebra.spinors import GAMMA8, LAMBDA2, LAMBDA8, big_matrix, pauli, spin_dot
from ..core.fields import SampledFields
from ..core.grid import GridSpec


def kinetic_matrix(grid: GridSpec, charge: float, a: np.ndarray) -> sparse.csr_matrix:
  """(−i∂ − eA)² = −∂² + ie(∂A + A∂) + e²A²."""
  d1, d2 = grid.operators()
  op = -d2.astype(complex)
  if charge != 0.0 and np.any(a):
    a_diag = sparse.diags(a)
    op = op + 1j * charge * (d1 @ a_diag + a_diag @ d1) + sparse.diags(charge ** 2 * a ** 2)
  return sparse.csr_matrix(op)


def pointwise_block(matrices: np.ndarray) -> sparse.csr_matrix:
  """Block operator from per-point K×K matrices of shape (n, K, K)."""
  n, k, _ = matrices.shape
  blocks = [[None] * k for _ in range(k)]
  for row in range(k):
    for col in range(k):
      entries = matrices[:, row, col]
      if np.any(entries):
        blocks[row][col] = sparse.diags(entries)
  if all(block is None for line in blocks for block in line):
    return sparse.csr_matrix((k * n, k * n), dtype=complex)
  for i in range(k):
    if blocks[i][i] is None:
      blocks[i][i] = sparse.csr_matrix((n, n), dtype=complex)
  return sparse.bmat(blocks, format="csr")


def fv_generator(grid: GridSpec, fields: SampledFields, m: float, e: float) -> sparse.csr_matrix:
  """(1/2m)(−i∇ − eA)²(σ₃ + iσ₂) + mσ₃ + eΦ on the flattened (φ₁, φ₂) field."""
  n = grid.n
  eye = sparse.identity(n, dtype=complex, format="csr")
  kin = kinetic_matrix(grid, e, fields.a)
  op = sparse.kron(LAMBDA2, kin) / (2.0 * m) + m * sparse.kron(pauli(3), eye)
  if e != 0.0 and np.any(fields.phi):
    op = op + e * sparse.kron(np.eye(2), sparse.diags(fields.phi))
  return sparse.csr_matrix(op)


def dirac_generator(
    grid: GridSpec,
    fields: SampledFields,
    m: float,
    e: float,
    kinetic_coeff: Optional[float] = None,
    kinetic_charge: Optional[float] = None,
    spin_h_coeff: Optional[complex] = None,
    spin_e_coeff: Optional[complex] = None,
    potential_coeff: Optional[float] = None,
    transpose_spin: bool = False,
) -> sparse.csr_matrix:
  """
  Eight-component generator

      (K/2m − (e/2m)σ·H)(Σ₃ + iΣ₂) + mΣ₃ + (ie/2m)σ·E(α₃ + iα₂) + eΦ

  Coefficients can be overridden to assemble the conjugated equations.
  """
  n = grid.n
  kinetic_coeff = 1.0 / (2.0 * m) if kinetic_coeff is None else kinetic_coeff
  kinetic_charge = e if kinetic_charge is None else kinetic_charge
  spin_h_coeff = -e / (2.0 * m) if spin_h_coeff is None else spin_h_coeff
  spin_e_coeff = 1j * e / (2.0 * m) if spin_e_coeff is None else spin_e_coeff
  potential_coeff = e if potential_coeff is None else potential_coeff

  eye = sparse.identity(n, dtype=complex, format="csr")
  kin = kinetic_matrix(grid, kinetic_charge, fields.a)
  op = kinetic_coeff * sparse.kron(LAMBDA8, kin) + m * sparse.kron(big_matrix("Sigma3"), eye)

  if spin_h_coeff != 0.0 and np.any(fields.h):
    op = op + spin_h_coeff * pointwise_block(_embedded(fields.h, transpose_spin) @ LAMBDA8)
  if spin_e_coeff != 0.0 and np.any(fields.e):
    op = op + spin_e_coeff * pointwise_block(_embedded(fields.e, transpose_spin) @ GAMMA8)
  if potential_coeff != 0.0 and np.any(fields.phi):
    op = op + potential_coeff * sparse.kron(np.eye(8), sparse.diags(fields.phi))
  return sparse.csr_matrix(op)


def _embedded(vectors: np.ndarray, transpose: bool) -> np.ndarray:
  """Per-point kron(I₄, σ·X), shape (n, 8, 8)."""
  local = spin_dot(vectors)
  if transpose:
    local = np.transpose(local, (0, 2, 1))
  n = local.shape[0]
  out = np.zeros((n, 8, 8), dtype=complex)
  for block in range(4):
    out[:, 2 * block:2 * block + 2, 2 * block:2 * block + 2] = local
  return out


def apply(op: sparse.spmatrix, psi: np.ndarray) -> np.ndarray:
  psi = np.asarray(psi, dtype=complex)
  return np.asarray(op @ psi.reshape(-1)).reshape(psi.shape)
