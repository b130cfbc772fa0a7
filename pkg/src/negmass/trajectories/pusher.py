"""
Signed-mass, signed-charge point particles in the x–y plane.

Velocities are stored as u = γv. Under a homogeneous magnetic field
B ẑ the Lorentz force gives du/dt = (e/m)(v × B), which depends on e/m
only; a uniform gravitational field acts kinematically, du/dt = g.
Both equations are linear in u, so reversing the initial velocity of a
pair reverses the whole u history and the tracks are point reflections
of each other about the creation point.
"""
import logging
import math
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from ..core.config import get_settings
from ..core.exceptions import ArgumentError
from ..models.states import PointParticle, Trajectory

logger = logging.getLogger(__name__)

FRAME_COLUMNS = ["t", "x", "y", "vx", "vy", "label"]


def _gamma(u: np.ndarray) -> float:
  return math.sqrt(1.0 + float(u[0] * u[0] + u[1] * u[1]))


def _initial_u(p: PointParticle) -> np.ndarray:
  v = np.asarray(p.v, dtype=float)
  return v / math.sqrt(1.0 - float(v @ v))


def _step_count(t_end: float, dt: float) -> int:
  if dt <= 0.0 or t_end <= 0.0:
    raise ArgumentError("t_end and dt must be positive")
  return int(round(t_end / dt))


def boris_rotate(u: np.ndarray, charge_over_mass: float, b: float, dt: float) -> np.ndarray:
  """Velocity rotation of the Boris scheme for B along z (no electric field)."""
  tz = 0.5 * charge_over_mass * b * dt / _gamma(u)
  ux_prime = u[0] + u[1] * tz
  uy_prime = u[1] - u[0] * tz
  sz = 2.0 * tz / (1.0 + tz * tz)
  return np.array([u[0] + uy_prime * sz, u[1] - ux_prime * sz])


def gyro_period(p: PointParticle, b: float) -> float:
  """2πγ|m|/(|e|B); infinite without magnetic coupling."""
  if p.e == 0.0 or b == 0.0:
    return math.inf
  return 2.0 * math.pi * _gamma(_initial_u(p)) * abs(p.m) / (abs(p.e) * abs(b))


def gyro_radius(p: PointParticle, b: float) -> float:
  """γ|m||v|/(|e|B)."""
  if p.e == 0.0 or b == 0.0:
    return math.inf
  return float(np.linalg.norm(_initial_u(p))) * abs(p.m) / (abs(p.e) * abs(b))


def discrete_gyro_radius(p: PointParticle, b: float, dt: float) -> float:
  """Radius of the polygon traced by the pusher: R·√(1 + t²), t = (e/m)B·dt/(2γ)."""
  t = 0.5 * (p.e / p.m) * b * dt / _gamma(_initial_u(p))
  return gyro_radius(p, b) * math.sqrt(1.0 + t * t)


def integrate_magnetic(p: PointParticle, b: float, t_end: float, dt: float,
                       label: Optional[str] = None) -> Trajectory:
  steps = _step_count(t_end, dt)
  period = gyro_period(p, b)
  min_steps = get_settings().MIN_GYRO_STEPS
  if period / dt < min_steps:
    raise ArgumentError(
        f"dt = {dt:g} resolves the gyro period {period:g} with fewer than {min_steps} steps")

  ratio = p.e / p.m
  u = _initial_u(p)
  position = np.array(p.x, dtype=float)
  t = np.arange(steps + 1) * dt
  positions = np.empty((steps + 1, 2))
  velocities = np.empty((steps + 1, 2))
  positions[0] = position
  velocities[0] = u / _gamma(u)

  for n in range(1, steps + 1):
    if ratio != 0.0 and b != 0.0:
      u = boris_rotate(u, ratio, b, dt)
    position = position + (u / _gamma(u)) * dt
    positions[n] = position
    velocities[n] = u / _gamma(u)

  track = Trajectory(label=label or _default_label(p), particle=p, t=t,
                     position=positions, velocity=velocities)
  if math.isinf(period):
    track.notes.append("no magnetic coupling: straight line")
    return track

  centre, radius, omega = fit_circle(track)
  track.centre, track.radius, track.omega = centre, radius, omega
  logger.debug(f"{track.label}: R = {radius:.6g}, Ω = {omega:.6g}")
  return track


def integrate_gravity(p: PointParticle, g: Sequence[float], t_end: float, dt: float,
                      label: Optional[str] = None) -> Trajectory:
  """
  Leapfrog for du/dt = g with u staggered by half a step; positions and
  velocities are reported at whole steps.
  """
  steps = _step_count(t_end, dt)
  g = np.asarray(g, dtype=float).reshape(-1)
  if g.size != 2:
    raise ArgumentError(f"g must have 2 components, got {g.size}")

  u0 = _initial_u(p)
  u_half = u0 + 0.5 * dt * g
  position = np.array(p.x, dtype=float)
  t = np.arange(steps + 1) * dt
  positions = np.empty((steps + 1, 2))
  velocities = np.empty((steps + 1, 2))
  positions[0] = position
  velocities[0] = u0 / _gamma(u0)

  for n in range(1, steps + 1):
    position = position + (u_half / _gamma(u_half)) * dt
    u_next = u_half + dt * g
    u_whole = 0.5 * (u_half + u_next)
    positions[n] = position
    velocities[n] = u_whole / _gamma(u_whole)
    u_half = u_next

  return Trajectory(label=label or _default_label(p), particle=p, t=t,
                    position=positions, velocity=velocities)


def gravity_energy(track: Trajectory, g: Sequence[float]) -> np.ndarray:
  """m(γ − 1) − m·g·x along the track."""
  g = np.asarray(g, dtype=float)
  m = track.particle.m
  speed2 = np.sum(track.velocity ** 2, axis=1)
  gamma = 1.0 / np.sqrt(1.0 - speed2)
  return m * (gamma - 1.0) - m * (track.position @ g)


def pair_magnetic(p: PointParticle, b: float, t_end: float,
                  dt: float) -> Tuple[Trajectory, Trajectory]:
  anti = p.antiparticle()
  return (integrate_magnetic(p, b, t_end, dt, label="particle"),
          integrate_magnetic(anti, b, t_end, dt, label="antiparticle"))


def pair_gravity(p: PointParticle, g: Sequence[float], t_end: float,
                 dt: float) -> Tuple[Trajectory, Trajectory]:
  anti = p.antiparticle()
  return (integrate_gravity(p, g, t_end, dt, label="particle"),
          integrate_gravity(anti, g, t_end, dt, label="antiparticle"))


def fit_circle(track: Trajectory) -> Tuple[Tuple[float, float], float, float]:
  """
  Algebraic (Kåsa) circle fit of the positions.

  Returns the centre, the mean distance to it and Ω: the slope of the
  unwrapped polar angle about the centre, signed by the mass.
  """
  x, y = track.position[:, 0], track.position[:, 1]
  design = np.column_stack([x, y, np.ones_like(x)])
  coeffs, *_ = np.linalg.lstsq(design, -(x * x + y * y), rcond=None)
  cx, cy = -0.5 * coeffs[0], -0.5 * coeffs[1]
  radius = float(np.mean(np.hypot(x - cx, y - cy)))
  angle = np.unwrap(np.arctan2(y - cy, x - cx))
  slope = float(np.polyfit(track.t, angle, 1)[0])
  omega = math.copysign(1.0, track.particle.m) * slope
  return (float(cx), float(cy)), radius, omega


def trajectory_frame(tracks: Iterable[Trajectory]) -> pd.DataFrame:
  frames = []
  for track in tracks:
    frames.append(pd.DataFrame({
      "t": track.t,
      "x": track.position[:, 0],
      "y": track.position[:, 1],
      "vx": track.velocity[:, 0],
      "vy": track.velocity[:, 1],
      "label": track.label,
    }))
  if not frames:
    return pd.DataFrame(columns=FRAME_COLUMNS)
  return pd.concat(frames, ignore_index=True)[FRAME_COLUMNS]


def _default_label(p: PointParticle) -> str:
  kind = "P" if p.m > 0 else "A"
  charge = "+" if p.e >= 0 else "-"
  return f"({kind},{charge})"


def summarize(tracks: List[Trajectory]) -> List[dict]:
  return [
    {"label": track.label, "m": track.particle.m, "e": track.particle.e,
     "omega": track.omega, "radius": track.radius, "notes": list(track.notes)}
    for track in tracks
  ]
