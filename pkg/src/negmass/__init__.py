"""
negmass: numerical workbench for relativistic wave equations with signed mass.

Subpackages:
  algebra       Pauli/Dirac matrices and the eight-component conjugations
  waves         plane waves, Feshbach–Villars and eight-component systems
  evolution     time stepping with conservation diagnostics
  phase_space   Wigner–Moyal transforms of classical densities
  trajectories  particle/antiparticle point tracks
  services      scenario runner, verification suite and artifacts
"""

__version__ = "1.0.0"
