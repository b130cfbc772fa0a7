import os
from dataclasses import dataclass
from functools import lru_cache

from dotenv import load_dotenv


@dataclass
class Settings:
  LOG_LEVEL: str = "INFO"
  OUTPUT_DIR: str = "results"
  DEFAULT_SEED: int = 20240101

  SOLVER_TOLERANCE: float = 1e-10
  DENSITY_TOLERANCE: float = 1e-12
  CONJUGATION_TOLERANCE: float = 1e-10
  CONTINUITY_TOLERANCE: float = 1e-6
  LAMBDA_TOLERANCE: float = 1e-12

  # explicit stepping requires dt <= STABILITY_CONSTANT * dx**2 * |m|
  STABILITY_CONSTANT: float = 0.25
  MIN_GYRO_STEPS: int = 32

  CSV_FLOAT_FORMAT: str = "%.17g"

  def __post_init__(self):
    self.LOG_LEVEL = os.getenv("NEGMASS_LOG_LEVEL", self.LOG_LEVEL).upper()
    self.OUTPUT_DIR = os.getenv("NEGMASS_OUTPUT_DIR", self.OUTPUT_DIR)
    self.DEFAULT_SEED = int(os.getenv("NEGMASS_DEFAULT_SEED", str(self.DEFAULT_SEED)))
    self.SOLVER_TOLERANCE = float(
        os.getenv("NEGMASS_SOLVER_TOLERANCE", str(self.SOLVER_TOLERANCE)))
    self.DENSITY_TOLERANCE = float(
        os.getenv("NEGMASS_DENSITY_TOLERANCE", str(self.DENSITY_TOLERANCE)))
    self.CONJUGATION_TOLERANCE = float(
        os.getenv("NEGMASS_CONJUGATION_TOLERANCE", str(self.CONJUGATION_TOLERANCE)))
    self.CONTINUITY_TOLERANCE = float(
        os.getenv("NEGMASS_CONTINUITY_TOLERANCE", str(self.CONTINUITY_TOLERANCE)))
    self.LAMBDA_TOLERANCE = float(
        os.getenv("NEGMASS_LAMBDA_TOLERANCE", str(self.LAMBDA_TOLERANCE)))
    self.STABILITY_CONSTANT = float(
        os.getenv("NEGMASS_STABILITY_CONSTANT", str(self.STABILITY_CONSTANT)))
    self.MIN_GYRO_STEPS = int(
        os.getenv("NEGMASS_MIN_GYRO_STEPS", str(self.MIN_GYRO_STEPS)))
    self.CSV_FLOAT_FORMAT = os.getenv("NEGMASS_CSV_FLOAT_FORMAT", self.CSV_FLOAT_FORMAT)


@lru_cache()
def get_settings() -> Settings:
  load_dotenv()
  return Settings()
