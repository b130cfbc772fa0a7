"""
Tests for Wigner–Moyal transforms of classical phase-space densities.
"""
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from negmass.core.exceptions import ArgumentError
from negmass.phase_space import (
    delta_stencil,
    energy_density,
    four_momentum_expectation,
    free_equation_residual,
    free_flow,
    gaussian_density,
    momentum_expectation,
    relativistic_free_residual,
    relativistic_flow,
    relativistic_transform,
    wigner_moyal_transform,
)
from negmass.services.verification import lambda_restoration


@pytest.fixture
def density():
    x = 0.1 * (np.arange(256) - 128)
    p = np.linspace(-6.0, 10.0, 801)
    return gaussian_density(x, p, 0.0, 1.0, 2.0, 0.5)


class TestTransform:
    """Test suite for the spatial correlation slices."""

    def test_density_is_normalised(self, density):
        assert density.total() == pytest.approx(1.0, abs=1e-12)

    def test_zero_separation_is_marginal(self, density):
        slice_ = wigner_moyal_transform(density, np.array([-0.1, 0.0, 0.1]))
        assert np.allclose(slice_.diagonal(), density.marginal_x(), atol=1e-14)

    def test_orientations_are_conjugate(self, density):
        delta = np.linspace(-0.5, 0.5, 11)
        plus = wigner_moyal_transform(density, delta, "+")
        minus = wigner_moyal_transform(density, delta, "-")
        assert np.array_equal(minus.values, np.conj(plus.values))
        assert np.array_equal(plus.swapped().values, minus.values)
        assert plus.swapped().orientation == "-"

    def test_nyquist_limit(self, density):
        with pytest.raises(ArgumentError):
            wigner_moyal_transform(density, np.array([0.0, np.pi / density.dp]))

    def test_invalid_orientation(self, density):
        with pytest.raises(ArgumentError):
            wigner_moyal_transform(density, np.zeros(1), "x")

    def test_stencil(self):
        assert np.allclose(delta_stencil(0.5), [-1.0, -0.5, 0.0, 0.5, 1.0])
        with pytest.raises(ArgumentError):
            delta_stencil(0.0)


class TestMomentum:
    """Test suite for momentum moments and the λ sign."""

    def test_lambda_restores_momentum(self):
        direct, reversed_, restored = lambda_restoration(2.0)
        assert direct == pytest.approx(2.0, abs=1e-6)
        assert reversed_ == pytest.approx(-2.0, abs=1e-6)
        assert restored == pytest.approx(2.0, abs=1e-6)

    def test_slice_without_stencil_points(self, density):
        slice_ = wigner_moyal_transform(density, np.array([0.0, 0.3]))
        with pytest.raises(ArgumentError):
            momentum_expectation(slice_, 1)

    def test_invalid_lambda(self, density):
        slice_ = wigner_moyal_transform(density, delta_stencil())
        with pytest.raises(ArgumentError):
            momentum_expectation(slice_, 0)

    def test_four_momentum(self, density):
        marginal = density.marginal_p()
        energy_direct = np.sum(marginal * np.sqrt(density.p ** 2 + 1.0)) * density.dp
        energy, momentum = four_momentum_expectation(density, 1.0, 1)
        assert energy == pytest.approx(energy_direct, abs=1e-6)
        assert momentum == pytest.approx(2.0, abs=1e-6)

    def test_relativistic_transform_shape(self, density):
        values = relativistic_transform(density, 1.0, np.zeros(3), np.zeros(2))
        assert values.shape == (density.x.size, 2, 3)
        assert np.allclose(values[:, 0, 0], density.marginal_x(), atol=1e-14)


class TestFreeFlow:
    """Test suite for free streaming and the transformed free equation."""

    def test_flow_moves_the_mean(self, density):
        moved = free_flow(density, 1.0, 0.1)
        mean_x = np.sum(density.x * moved.marginal_x()) * density.dx
        assert moved.total() == pytest.approx(1.0, abs=1e-12)
        assert mean_x == pytest.approx(0.2, abs=1e-6)
        assert moved.t == pytest.approx(0.1)

    def test_relativistic_flow_is_slower(self, density):
        moved = relativistic_flow(density, 1.0, 0.1)
        mean_x = np.sum(density.x * moved.marginal_x()) * density.dx
        assert 0.0 < mean_x < 0.2

    def test_residual_magnitude_matches_across_orientations(self, density):
        plus = free_equation_residual(density, 1.0, 0.01, "+")
        minus = free_equation_residual(density, 1.0, 0.01, "-")
        assert minus == pytest.approx(plus, rel=1e-8)

    def test_residual_shrinks_with_dt(self, density):
        coarse = free_equation_residual(density, 1.0, 0.04)
        fine = free_equation_residual(density, 1.0, 0.01)
        assert fine < coarse

    def test_wrong_flow_direction_is_detected(self, density):
        forward = free_equation_residual(density, 1.0, 0.01, flow_sign=1)
        backward = free_equation_residual(density, 1.0, 0.01, flow_sign=-1)
        assert backward > 100.0 * forward

    def test_relativistic_residual_is_small(self, density):
        right = relativistic_free_residual(density, 1.0, 0.01)
        values = relativistic_transform(density, 1.0, delta_stencil(), np.zeros(1))
        scale = np.max(np.abs(values))
        assert right < 1e-2 * scale

    def test_invalid_arguments(self, density):
        with pytest.raises(ArgumentError):
            free_flow(density, 0.0, 0.1)
        with pytest.raises(ArgumentError):
            free_equation_residual(density, 1.0, 0.0)
        with pytest.raises(ArgumentError):
            relativistic_free_residual(density, 1.0, -0.1)


class TestEnergyDensity:
    """Test suite for the energy density of monochromatic superpositions."""

    @settings(max_examples=100, deadline=None)
    @given(m=st.floats(0.5, 2.0), p=st.floats(0.0, 3.0),
           c=st.lists(st.floats(-1.0, 1.0), min_size=4, max_size=4),
           lam=st.sampled_from([1, -1]))
    def test_nonnegative(self, m, p, c, lam):
        x = np.linspace(-10.0, 10.0, 64)
        energy = np.sqrt(p * p + m * m)
        psi = (c[0] + 1j * c[1]) * np.exp(1j * p * x) + (c[2] + 1j * c[3]) * np.exp(-1j * p * x)
        field = psi if lam == 1 else np.conj(psi)
        values = energy_density(field, -lam * 1j * energy * field, lam)
        assert np.min(values) >= -1e-12

    def test_wrong_branch(self):
        psi = np.ones(3, dtype=complex)
        with pytest.raises(ArgumentError):
            energy_density(psi, -1j * psi, -1)
