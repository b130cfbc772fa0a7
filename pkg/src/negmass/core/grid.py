"""
One-dimensional spatial grids and their derivative operators.

Two schemes are supported:
  - "fd": centered second-order finite differences (sparse)
  - "spectral": Fourier differentiation on a periodic grid (dense)

Non-periodic finite-difference grids use zero ghost values at both ends.
"""
import logging
from functools import lru_cache
from typing import Literal, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator
from scipy import fft, sparse
from scipy.integrate import trapezoid

from .exceptions import ArgumentError

logger = logging.getLogger(__name__)

Scheme = Literal["fd", "spectral"]


class GridSpec(BaseModel):
  """Uniform 1-D grid in Compton-wavelength units."""
  model_config = ConfigDict(frozen=True, extra="forbid")

  n: int = Field(..., ge=8, description="number of points")
  dx: float = Field(..., gt=0.0, description="spacing")
  periodic: bool = True
  scheme: Scheme = "fd"
  x0: Optional[float] = Field(None, description="first grid point; defaults to a centred grid")

  @model_validator(mode="after")
  def _check_scheme(self) -> "GridSpec":
    if self.scheme == "spectral" and not self.periodic:
      raise ValueError("spectral differentiation requires a periodic grid")
    return self

  @property
  def length(self) -> float:
    return self.n * self.dx

  @property
  def start(self) -> float:
    return -0.5 * self.length if self.x0 is None else self.x0

  @property
  def x(self) -> np.ndarray:
    return self.start + self.dx * np.arange(self.n)

  @property
  def wavenumbers(self) -> np.ndarray:
    return 2.0 * np.pi * fft.fftfreq(self.n, d=self.dx)

  def operators(self) -> Tuple[sparse.csr_matrix, sparse.csr_matrix]:
    """First and second derivative matrices (n×n)."""
    return _derivative_operators(self.n, self.dx, self.periodic, self.scheme)

  def derivative(self, f: np.ndarray, order: int = 1) -> np.ndarray:
    """Differentiate along the last axis."""
    if order not in (1, 2):
      raise ArgumentError(f"derivative order must be 1 or 2, got {order}")
    op = self.operators()[order - 1]
    f = np.asarray(f)
    flat = f.reshape(-1, self.n)
    out = (op @ flat.T).T
    return np.asarray(out).reshape(f.shape)

  def integrate(self, f: np.ndarray) -> float:
    """Trapezoidal rule along the last axis (plain sum·dx on periodic grids)."""
    f = np.asarray(f)
    if self.periodic:
      return np.sum(f, axis=-1) * self.dx
    return trapezoid(f, dx=self.dx, axis=-1)

  def describe(self) -> dict:
    return {
      "n": self.n,
      "dx": self.dx,
      "periodic": self.periodic,
      "scheme": self.scheme,
      "x0": self.start,
    }


@lru_cache(maxsize=32)
def _derivative_operators(n: int, dx: float, periodic: bool, scheme: str):
  if scheme == "spectral":
    k = 2.0 * np.pi * fft.fftfreq(n, d=dx)
    k_first = k.copy()
    if n % 2 == 0:
      k_first[n // 2] = 0.0
    eye = np.eye(n)
    spectrum = fft.fft(eye, axis=0)
    d1 = np.real(fft.ifft(1j * k_first[:, None] * spectrum, axis=0))
    d2 = np.real(fft.ifft(-(k ** 2)[:, None] * spectrum, axis=0))
    logger.debug(f"Built spectral derivative matrices for n={n}, dx={dx}")
    return sparse.csr_matrix(d1), sparse.csr_matrix(d2)

  ones = np.ones(n)
  d1 = sparse.diags([-ones[:-1], ones[:-1]], [-1, 1], shape=(n, n), format="lil")
  d2 = sparse.diags([ones[:-1], -2.0 * ones, ones[:-1]], [-1, 0, 1], shape=(n, n), format="lil")
  if periodic:
    d1[0, n - 1] = -1.0
    d1[n - 1, 0] = 1.0
    d2[0, n - 1] = 1.0
    d2[n - 1, 0] = 1.0
  return (d1.tocsr() / (2.0 * dx)), (d2.tocsr() / dx ** 2)
