"""
Tests for settings, grids and field configurations.
"""
import numpy as np
import pytest
from pydantic import ValidationError

from negmass.core.config import Settings, get_settings
from negmass.core.exceptions import ArgumentError
from negmass.core.fields import EMConfig
from negmass.core.grid import GridSpec


class TestSettings:
    """Test suite for environment-driven settings."""

    def test_defaults(self):
        settings = get_settings()
        assert settings.LOG_LEVEL == "INFO"
        assert settings.CSV_FLOAT_FORMAT == "%.17g"
        assert settings.CONJUGATION_TOLERANCE == 1e-10

    def test_environment_override(self, monkeypatch):
        monkeypatch.setenv("NEGMASS_DEFAULT_SEED", "7")
        monkeypatch.setenv("NEGMASS_LOG_LEVEL", "debug")
        get_settings.cache_clear()
        settings = get_settings()
        assert settings.DEFAULT_SEED == 7
        assert settings.LOG_LEVEL == "DEBUG"

    def test_settings_are_cached(self):
        assert get_settings() is get_settings()

    def test_direct_construction(self, monkeypatch):
        monkeypatch.setenv("NEGMASS_MIN_GYRO_STEPS", "64")
        assert Settings().MIN_GYRO_STEPS == 64


class TestGridSpec:
    """Test suite for grid validation and calculus."""

    def test_centred_points(self):
        grid = GridSpec(n=8, dx=0.5)
        assert grid.x[0] == pytest.approx(-2.0)
        assert grid.length == pytest.approx(4.0)

    def test_explicit_origin(self):
        grid = GridSpec(n=8, dx=1.0, x0=3.0)
        assert grid.x[0] == 3.0
        assert grid.describe()["x0"] == 3.0

    def test_too_few_points(self):
        with pytest.raises(ValidationError):
            GridSpec(n=4, dx=0.1)

    def test_spectral_needs_periodic(self):
        with pytest.raises(ValidationError):
            GridSpec(n=16, dx=0.1, periodic=False, scheme="spectral")

    def test_spectral_derivative(self, spectral_grid):
        k = 2.0 * np.pi / spectral_grid.length
        f = np.sin(k * spectral_grid.x)
        assert np.allclose(spectral_grid.derivative(f), k * np.cos(k * spectral_grid.x), atol=1e-12)
        assert np.allclose(spectral_grid.derivative(f, 2), -k * k * f, atol=1e-12)

    def test_fd_derivative_is_second_order(self):
        errors = []
        for n in (64, 128):
            grid = GridSpec(n=n, dx=32.0 / n)
            k = 2.0 * np.pi / grid.length
            f = np.sin(k * grid.x)
            errors.append(np.max(np.abs(grid.derivative(f) - k * np.cos(k * grid.x))))
        assert errors[0] / errors[1] == pytest.approx(4.0, rel=0.05)

    def test_derivative_along_last_axis(self, fd_grid):
        f = np.vstack([fd_grid.x, 2.0 * fd_grid.x])
        assert fd_grid.derivative(f).shape == (2, fd_grid.n)

    def test_bad_order(self, fd_grid):
        with pytest.raises(ArgumentError):
            fd_grid.derivative(fd_grid.x, order=3)

    def test_integrate(self, spectral_grid):
        assert spectral_grid.integrate(np.ones(spectral_grid.n)) == pytest.approx(spectral_grid.length)
        open_grid = GridSpec(n=11, dx=0.1, periodic=False, x0=0.0)
        assert open_grid.integrate(open_grid.x) == pytest.approx(0.5)


class TestEMConfig:
    """Test suite for static field configurations."""

    def test_free(self, fd_grid):
        assert EMConfig.free().sample(fd_grid).is_free

    def test_uniform_profiles(self, fd_grid):
        sampled = EMConfig.uniform(phi0=1.0, phi_slope=0.5, a0=0.2,
                                   h_field=(0.0, 0.0, 1.0)).sample(fd_grid)
        assert np.allclose(sampled.phi, 1.0 + 0.5 * fd_grid.x)
        assert np.all(sampled.a == 0.2)
        assert sampled.h.shape == (fd_grid.n, 3)
        assert not sampled.is_free

    def test_derived_electric_field(self, fd_grid):
        sampled = EMConfig.uniform(phi_slope=0.3, derive_e_from_phi=True).sample(fd_grid)
        assert np.allclose(sampled.e[:, 0], -0.3)
        assert np.all(sampled.e[:, 1:] == 0.0)

    def test_derived_field_excludes_explicit(self):
        with pytest.raises(ArgumentError):
            EMConfig.uniform(e_field=(1.0, 0.0, 0.0), derive_e_from_phi=True)

    def test_vector_size(self):
        with pytest.raises(ArgumentError):
            EMConfig.uniform(h_field=(1.0, 0.0))

    def test_non_finite_profile(self, fd_grid):
        em = EMConfig(phi=lambda x: np.full(np.shape(x), np.inf))
        with pytest.raises(ArgumentError):
            em.sample(fd_grid)

    def test_hashable(self):
        em = EMConfig.free()
        assert hash(em) == hash(em)
        assert em in {em}
