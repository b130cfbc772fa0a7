"""
Shared fixtures for integration tests.
"""
import json

import pytest

from negmass.services import ArtifactStorage, ScenarioRunner


@pytest.fixture
def runner(output_dir):
    """ScenarioRunner writing into a fresh temporary directory."""
    return ScenarioRunner(ArtifactStorage(output_dir))


@pytest.fixture
def read_report():
    def _read(directory):
        return json.loads((directory / "report.json").read_text(encoding="utf-8"))
    return _read


@pytest.fixture
def write_config(tmp_path):
    """Write a scenario document and return its path."""
    def _write(data, name="scenario.json"):
        path = tmp_path / name
        path.write_text(data if isinstance(data, str) else json.dumps(data), encoding="utf-8")
        return path
    return _write
