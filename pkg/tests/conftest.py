import os
import sys
from pathlib import Path

import numpy as np
import pytest

# Add src to Python path for imports
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root / 'src'))
sys.path.insert(0, str(project_root))

from negmass.core.config import get_settings
from negmass.core.fields import EMConfig
from negmass.core.grid import GridSpec


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch):
    """Settings are cached per process; every test starts from the defaults."""
    for name in list(os.environ):
        if name.startswith('NEGMASS_'):
            monkeypatch.delenv(name, raising=False)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


@pytest.fixture
def spectral_grid():
    return GridSpec(n=64, dx=0.5, scheme="spectral")


@pytest.fixture
def fd_grid():
    return GridSpec(n=64, dx=0.25)


@pytest.fixture
def free_fields():
    return EMConfig.free()


@pytest.fixture
def output_dir(tmp_path):
    path = tmp_path / "results"
    path.mkdir()
    return path
