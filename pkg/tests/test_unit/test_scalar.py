"""
Tests for spinless plane waves: λ classification, densities and fluxes.
"""
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from pydantic import ValidationError

from negmass.core.exceptions import ArgumentError, DegenerateClassificationError
from negmass.models.states import PlaneWave
from negmass.waves import (
    classify_lambda,
    density_em,
    density_free,
    flux_em,
    flux_free,
    lambda_bilinear,
    mass_density,
    plane_wave_field,
    probability_density,
)

velocities = st.floats(min_value=-0.99, max_value=0.99, allow_nan=False)
masses = st.floats(min_value=0.1, max_value=5.0, allow_nan=False)
signed_masses = st.one_of(masses, masses.map(lambda m: -m))
branches = st.sampled_from([1, -1])


class TestPlaneWaveModel:
    """Test suite for the PlaneWave type."""

    def test_kinematics(self):
        w = PlaneWave(lam=1, m=2.0, v=0.6)
        assert w.gamma == pytest.approx(1.25)
        assert w.energy == pytest.approx(2.5)
        assert w.momentum == pytest.approx(1.5)

    @pytest.mark.parametrize("v", [1.0, -1.0, 1.5])
    def test_superluminal_rejected(self, v):
        with pytest.raises(ValidationError):
            PlaneWave(lam=1, m=1.0, v=v)

    def test_zero_mass_rejected(self):
        with pytest.raises(ValidationError):
            PlaneWave(lam=1, m=0.0, v=0.1)

    def test_label_follows_branch(self):
        assert PlaneWave(lam=1, v=0.0).label().kind == "P"
        assert PlaneWave(lam=-1, v=0.0).label(-1).dyad == "(A,-)"


class TestClosedForms:
    """Test suite for the plane-wave density and flux formulas."""

    def test_antiparticle_example(self):
        w = PlaneWave(lam=-1, m=1.0, v=0.6)
        assert density_free(w) == pytest.approx(1.25, rel=1e-15)
        assert flux_free(w) == pytest.approx(-0.6, rel=1e-15)

    def test_rest_density_is_one(self):
        assert density_free(PlaneWave(lam=1, m=3.0, v=0.0)) == 1.0
        assert density_free(PlaneWave(lam=-1, m=3.0, v=0.0)) == 1.0

    @settings(max_examples=200, deadline=None)
    @given(lam=branches, m=masses, v=velocities)
    def test_density_positive_flux_subluminal(self, lam, m, v):
        w = PlaneWave(lam=lam, m=m, v=v)
        assert density_free(w) >= 1.0
        assert abs(flux_free(w)) < 1.0

    @settings(max_examples=200, deadline=None)
    @given(lam=branches, m=signed_masses, v=velocities,
           e=st.floats(-2, 2), phi=st.floats(-2, 2), a=st.floats(-2, 2))
    def test_em_forms_match_oracle(self, lam, m, v, e, phi, a):
        w = PlaneWave(lam=lam, m=m, v=v)
        gamma = 1.0 / math.sqrt(1.0 - v * v)
        assert density_em(w, phi, e) == pytest.approx(gamma - lam * e * phi / abs(m), abs=1e-12)
        assert flux_em(w, a, e) == pytest.approx(lam * v - e * a / m, abs=1e-12)

    def test_em_forms_reduce_without_fields(self):
        w = PlaneWave(lam=-1, m=1.5, v=0.3)
        assert density_em(w, 0.0, 1.0) == pytest.approx(density_free(w))
        assert flux_em(w, 0.0, 1.0) == flux_free(w)

    @pytest.mark.parametrize("lam", [1, -1])
    def test_negative_nominal_mass_folds_sign(self, lam):
        w = PlaneWave(lam=lam, m=-2.0, v=0.6)
        assert density_free(w) == pytest.approx(1.25)
        assert density_em(w, 0.0, 1.0) == pytest.approx(density_free(w))
        assert density_em(w, 0.4, 1.0) == pytest.approx(1.25 - lam * 0.2)

    @pytest.mark.parametrize("form", [density_free, flux_free])
    def test_zero_mass_raises_argument_error(self, form):
        w = PlaneWave.model_construct(lam=1, m=0.0, v=0.1)
        with pytest.raises(ArgumentError):
            form(w)

    @pytest.mark.parametrize("form", [density_em, flux_em])
    def test_zero_mass_raises_in_field_forms(self, form):
        w = PlaneWave.model_construct(lam=1, m=0.0, v=0.1)
        with pytest.raises(ArgumentError):
            form(w, 0.5, 1.0)


class TestLambdaClassification:
    """Test suite for the pointwise particle/antiparticle sign."""

    @pytest.mark.parametrize("lam", [1, -1])
    def test_plane_wave_sign(self, lam):
        w = PlaneWave(lam=lam, m=1.0, v=0.4)
        phi, phi_t = plane_wave_field(w, np.linspace(-3, 3, 11), t=0.7)
        assert np.all(classify_lambda(phi, phi_t) == lam)

    def test_bilinear_of_plane_wave(self):
        w = PlaneWave(lam=1, m=1.0, v=0.6)
        phi, phi_t = plane_wave_field(w, np.zeros(3))
        assert np.allclose(lambda_bilinear(phi, phi_t), 2.0 * w.energy)

    def test_degenerate_points_reported(self):
        phi = np.array([1.0, 0.0, 1.0, 0.0], dtype=complex)
        phi_t = -1j * phi
        with pytest.raises(DegenerateClassificationError) as exc:
            classify_lambda(phi, phi_t)
        assert exc.value.indices == [1, 3]

    def test_shape_mismatch(self):
        with pytest.raises(ArgumentError):
            lambda_bilinear(np.ones(3), np.ones(4))


class TestPointwiseDensities:
    """Test suite for probability and mass densities of sampled fields."""

    @pytest.mark.parametrize("lam", [1, -1])
    def test_probability_density_of_plane_wave(self, lam):
        w = PlaneWave(lam=lam, m=2.0, v=0.6)
        phi, phi_t = plane_wave_field(w, np.linspace(0, 1, 5))
        rho = probability_density(phi, phi_t, w.m, lam)
        assert np.allclose(rho, density_free(w))

    def test_wrong_branch_rejected(self):
        w = PlaneWave(lam=1, m=1.0, v=0.2)
        phi, phi_t = plane_wave_field(w, np.linspace(0, 1, 5))
        with pytest.raises(ArgumentError):
            probability_density(phi, phi_t, 1.0, -1)

    def test_potential_shifts_density(self):
        w = PlaneWave(lam=1, m=1.0, v=0.0)
        phi, phi_t = plane_wave_field(w, np.zeros(2))
        rho = probability_density(phi, phi_t, 1.0, 1, potential=0.5, e=1.0)
        assert np.allclose(rho, density_em(w, 0.5, 1.0))

    @pytest.mark.parametrize("lam", [1, -1])
    def test_mass_density_sign(self, lam):
        w = PlaneWave(lam=lam, m=1.0, v=0.5)
        phi, phi_t = plane_wave_field(w, np.linspace(0, 2, 7))
        assert np.all(np.sign(mass_density(phi, phi_t, 1.0)) == lam)

    @pytest.mark.parametrize("m", [0.5, 3.0])
    def test_mass_density_is_half_the_bilinear(self, m):
        w = PlaneWave(lam=-1, m=1.0, v=0.6)
        phi, phi_t = plane_wave_field(w, np.linspace(0, 2, 7))
        assert np.allclose(mass_density(phi, phi_t, m), -1.25)
        with pytest.raises(ArgumentError):
            mass_density(phi, phi_t, 0.0)

    def test_zero_mass(self):
        with pytest.raises(ArgumentError):
            probability_density(np.ones(2), np.ones(2), 0.0, 1)
