"""
Tests for the time integrators and their conservation diagnostics.
"""
import math

import numpy as np
import pytest
from pydantic import ValidationError

from negmass.core.exceptions import ArgumentError, SolverConvergenceError
from negmass.core.fields import EMConfig
from negmass.core.grid import GridSpec
from negmass.evolution import (
    EvolutionConfig,
    Propagator,
    continuity_residual,
    discrete_phase,
    evolve,
    signed_norm,
    stability_bound,
    step_dirac,
    step_kg,
)
from negmass.models.labels import ParticleLabel
from negmass.waves import fv_generator, kg_packet, kg_rest_basis, rest_state
from negmass.waves.catalog import catalog_entry


class TestDiscretePhase:
    """Test suite for per-step amplification factors."""

    @pytest.mark.parametrize("omega", [0.3, -1.0, 7.5])
    def test_midpoint_is_unitary(self, omega):
        assert abs(discrete_phase(omega, 0.1)) == pytest.approx(1.0, abs=1e-15)

    def test_rk4_matches_exponential_to_fifth_order(self):
        omega, dt = 1.0, 0.01
        exact = np.exp(-1j * omega * dt)
        assert abs(discrete_phase(omega, dt, "explicit-rk4") - exact) < (omega * dt) ** 5

    def test_stability_bound(self):
        grid = GridSpec(n=8, dx=0.5)
        assert stability_bound(grid, -2.0) == pytest.approx(0.125)


class TestEvolutionConfig:
    """Test suite for the evolution settings model."""

    def test_defaults(self):
        cfg = EvolutionConfig(dt=0.1)
        assert cfg.steps == 1
        assert cfg.method == "implicit-midpoint"

    @pytest.mark.parametrize("kwargs", [{"dt": 0.0}, {"dt": 0.1, "steps": 0},
                                        {"dt": 0.1, "method": "euler"}])
    def test_invalid(self, kwargs):
        with pytest.raises(ValidationError):
            EvolutionConfig(**kwargs)


class TestRestModes:
    """Test suite for uniform rest states, whose evolution is a pure phase."""

    @pytest.mark.parametrize("method", ["implicit-midpoint", "explicit-rk4"])
    @pytest.mark.parametrize("kind,charge", [("P", 1), ("A", 1), ("A", -1)])
    def test_kg_rest_phase(self, method, kind, charge):
        grid = GridSpec(n=8, dx=1.0)
        rest = kg_rest_basis(ParticleLabel.from_dyad(kind, charge))
        state = rest.state(grid, m=1.0)
        cfg = EvolutionConfig(dt=0.05, steps=40, method=method)
        final, _ = evolve(state, EMConfig.free(), cfg)
        omega = -rest.phase_sign * 1.0
        expected = state.psi * discrete_phase(omega, cfg.dt, method) ** cfg.steps
        assert np.allclose(final.psi, expected, atol=1e-12)

    def test_rk4_returns_after_one_period(self):
        grid = GridSpec(n=8, dx=1.0)
        state = kg_rest_basis(ParticleLabel.from_dyad("P", 1)).state(grid, m=1.0)
        cfg = EvolutionConfig(dt=2 * math.pi / 400, steps=400, method="explicit-rk4")
        final, _ = evolve(state, EMConfig.free(), cfg)
        assert np.max(np.abs(final.psi - state.psi)) <= 1e-7

    def test_dirac_rest_phase(self):
        grid = GridSpec(n=16, dx=0.5, scheme="spectral")
        entry = catalog_entry("v", "down", "A")
        state = rest_state(entry, grid, m=1.0)
        cfg = EvolutionConfig(dt=0.02, steps=50)
        final, _ = evolve(state, EMConfig.free(), cfg)
        slot = entry.basis_index - 1
        omega = -entry.phase_sign * 1.0
        expected = state.psi[slot] * discrete_phase(omega, cfg.dt) ** cfg.steps
        assert np.allclose(final.psi[slot], expected, atol=1e-10)
        assert np.max(np.abs(np.delete(final.psi, slot, axis=0))) <= 1e-10


class TestPropagator:
    """Test suite for the one-step maps."""

    def test_explicit_step_rejects_large_dt(self):
        grid = GridSpec(n=8, dx=0.5)
        state = kg_packet(grid, 1.0, 0.0, 1.0)
        with pytest.raises(ArgumentError):
            step_kg(state, EMConfig.free(), EvolutionConfig(dt=0.1, method="explicit-rk4"))

    def test_state_type_checked(self, spectral_grid):
        state = kg_packet(spectral_grid, 1.0, 0.3, 2.0)
        with pytest.raises(ArgumentError):
            step_dirac(state, EMConfig.free(), EvolutionConfig(dt=0.01))

    def test_unreachable_tolerance(self, spectral_grid):
        state = kg_packet(spectral_grid, 1.0, 0.3, 2.0)
        generator = fv_generator(spectral_grid, EMConfig.free().sample(spectral_grid), 1.0, 0.0)
        prop = Propagator(generator, 0.01, tolerance=1e-40, dense=True)
        with pytest.raises(SolverConvergenceError) as exc:
            prop.step(state.psi)
        assert exc.value.tolerance == 1e-40

    def test_sparse_and_dense_solves_agree(self, spectral_grid):
        state = kg_packet(spectral_grid, 1.0, 0.3, 2.0)
        generator = fv_generator(spectral_grid, EMConfig.free().sample(spectral_grid), 1.0, 0.0)
        dense = Propagator(generator, 0.01, dense=True).step(state.psi)
        sparse = Propagator(generator, 0.01, dense=False).step(state.psi)
        assert np.allclose(dense, sparse, atol=1e-12)


class TestConservation:
    """Test suite for signed norm and local continuity."""

    @pytest.mark.parametrize("branch", [1, -1])
    def test_signed_norm_conserved(self, spectral_grid, branch):
        state = kg_packet(spectral_grid, 1.0, 0.3, 3.0, branch=branch)
        final, report = evolve(state, EMConfig.free(), EvolutionConfig(dt=0.02, steps=100))
        assert report.initial_norm == pytest.approx(branch, abs=1e-12)
        assert report.max_norm_drift <= 1e-10
        assert signed_norm(final) == pytest.approx(branch, abs=1e-10)
        assert len(report.history) == 100

    def test_signed_norm_conserved_in_potential(self, spectral_grid):
        state = kg_packet(spectral_grid, 1.0, 0.3, 3.0, e=1.0)
        em = EMConfig.uniform(phi0=0.2, phi_slope=0.01)
        _, report = evolve(state, em, EvolutionConfig(dt=0.02, steps=50))
        assert report.max_norm_drift <= 1e-10

    def test_continuity_residual_small(self, spectral_grid):
        state = kg_packet(spectral_grid, 1.0, 0.3, 3.0)
        _, report = evolve(state, EMConfig.free(), EvolutionConfig(dt=0.01, steps=20))
        assert report.max_continuity_residual <= 1e-5

    def test_continuity_needs_matching_states(self, spectral_grid, fd_grid):
        a = kg_packet(spectral_grid, 1.0, 0.3, 3.0)
        b = kg_packet(fd_grid, 1.0, 0.3, 3.0)
        with pytest.raises(ArgumentError):
            continuity_residual(a, b, EMConfig.free(), 0.01)
        with pytest.raises(ArgumentError):
            continuity_residual(a, a, EMConfig.free(), 0.0)

    def test_observer_sees_every_step(self, spectral_grid):
        seen = []
        state = kg_packet(spectral_grid, 1.0, 0.3, 3.0)
        evolve(state, EMConfig.free(), EvolutionConfig(dt=0.01, steps=5),
               observer=lambda step, s: seen.append(step), diagnostics=False)
        assert seen == [1, 2, 3, 4, 5]


@pytest.mark.slow
class TestAcceptanceEvolution:
    """Test suite for the reference packet run and its convergence order."""

    def test_reference_packet(self):
        from negmass.services.verification import ACCEPTANCE_GRID, packet_evolution
        _, report = packet_evolution(ACCEPTANCE_GRID, 0.01, 1000)
        assert report.max_norm_drift <= 1e-8
        assert report.max_continuity_residual <= 1e-6

    def test_continuity_converges_at_second_order(self):
        from negmass.services.verification import (
            ACCEPTANCE_GRID,
            CONVERGENCE_GRID,
            packet_evolution,
        )
        _, coarse = packet_evolution(CONVERGENCE_GRID, 0.02, 250)
        _, fine = packet_evolution(ACCEPTANCE_GRID, 0.01, 500)
        ratio = coarse.max_continuity_residual / fine.max_continuity_residual
        assert 3.2 <= ratio <= 4.8
