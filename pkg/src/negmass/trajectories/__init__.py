"""
Classical particle/antiparticle tracks with signed mass and charge.
"""

from .pusher import (
  boris_rotate,
  gyro_period,
  gyro_radius,
  discrete_gyro_radius,
  integrate_magnetic,
  integrate_gravity,
  gravity_energy,
  pair_magnetic,
  pair_gravity,
  fit_circle,
  trajectory_frame,
  summarize,
  FRAME_COLUMNS,
)

__all__ = [
  "boris_rotate",
  "gyro_period",
  "gyro_radius",
  "discrete_gyro_radius",
  "integrate_magnetic",
  "integrate_gravity",
  "gravity_energy",
  "pair_magnetic",
  "pair_gravity",
  "fit_circle",
  "trajectory_frame",
  "summarize",
  "FRAME_COLUMNS",
]
