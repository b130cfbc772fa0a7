"""
Wave equations: spinless plane waves, the Feshbach–Villars system and the
eight-component second-order Dirac system.
"""

from .scalar import (
  lambda_bilinear,
  classify_lambda,
  density_free,
  flux_free,
  density_em,
  flux_em,
  plane_wave_field,
  probability_density,
  mass_density,
)
from .operators import fv_generator, dirac_generator, apply
from .feshbach_villars import (
  fv_decompose,
  fv_reconstruct,
  fv_hamiltonian_apply,
  kg_density,
  kg_current,
  kg_rest_basis,
  kg_amplitude_table,
  kg_momentum_hamiltonian,
  kg_spectrum,
  kg_packet,
)
from .dirac import (
  dirac_decompose,
  dirac_reconstruct,
  dirac_hamiltonian_apply,
  dirac_momentum_hamiltonian,
  dirac_density,
  dirac_current,
  four_spinor_density,
  dirac_packet,
)
from .catalog import (
  rest_catalog,
  rest_state,
  catalog_aliases,
  family_parities,
  annihilation_table,
  spin_table,
  spin_projection,
)

__all__ = [
  "lambda_bilinear",
  "classify_lambda",
  "density_free",
  "flux_free",
  "density_em",
  "flux_em",
  "plane_wave_field",
  "probability_density",
  "mass_density",
  "fv_generator",
  "dirac_generator",
  "apply",
  "fv_decompose",
  "fv_reconstruct",
  "fv_hamiltonian_apply",
  "kg_density",
  "kg_current",
  "kg_rest_basis",
  "kg_amplitude_table",
  "kg_momentum_hamiltonian",
  "kg_spectrum",
  "kg_packet",
  "dirac_decompose",
  "dirac_reconstruct",
  "dirac_hamiltonian_apply",
  "dirac_momentum_hamiltonian",
  "dirac_density",
  "dirac_current",
  "four_spinor_density",
  "dirac_packet",
  "rest_catalog",
  "rest_state",
  "catalog_aliases",
  "family_parities",
  "annihilation_table",
  "spin_table",
  "spin_projection",
]
