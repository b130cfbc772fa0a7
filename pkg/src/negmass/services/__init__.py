"""
Scenario orchestration, verification checks and artifact persistence.
"""

from .storage import ArtifactStorage, dumps
from .report import CheckResult, emit_report
from .verification import CHECKS, run_checks, known_discrepancies
from .scenarios import RunOutcome, ScenarioRunner, run_scenario

__all__ = [
  "ArtifactStorage",
  "dumps",
  "CheckResult",
  "emit_report",
  "CHECKS",
  "run_checks",
  "known_discrepancies",
  "RunOutcome",
  "ScenarioRunner",
  "run_scenario",
]
