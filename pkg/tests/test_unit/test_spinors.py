"""
Tests for the Pauli/Dirac matrix algebra and the conjugation maps.
"""
import numpy as np
import pytest

from negmass.algebra.spinors import (
    BIG_MATRIX_NAMES,
    GAMMA8,
    LAMBDA2,
    LAMBDA8,
    SPIN_Z,
    basis,
    big_matrix,
    conj_dirac_c1,
    conj_dirac_c1_matrix,
    conj_dirac_c2,
    conj_dirac_c2_matrix,
    conj_kg_charge,
    conj_kg_row,
    conjugation_discrepancy,
    pauli,
    spin_dot,
    spin_embedding,
)
from negmass.core.exceptions import ArgumentError


class TestPauli:
    """Test suite for the 2×2 Pauli matrices."""

    @pytest.mark.parametrize("i,j", [(1, 2), (2, 3), (3, 1)])
    def test_anticommute(self, i, j):
        a, b = pauli(i), pauli(j)
        assert np.array_equal(a @ b + b @ a, np.zeros((2, 2)))

    @pytest.mark.parametrize("axis", [1, 2, 3])
    def test_square_to_identity(self, axis):
        assert np.array_equal(pauli(axis) @ pauli(axis), np.eye(2))

    def test_product_relation(self):
        """σ₁σ₂ = iσ₃."""
        assert np.array_equal(pauli(1) @ pauli(2), 1j * pauli(3))

    @pytest.mark.parametrize("axis", [0, 4, "x"])
    def test_invalid_axis(self, axis):
        with pytest.raises(ArgumentError):
            pauli(axis)

    def test_returned_matrix_is_a_copy(self):
        m = pauli(1)
        m[0, 0] = 5.0
        assert pauli(1)[0, 0] == 0.0


class TestBigMatrices:
    """Test suite for the 8×8 block matrices."""

    @pytest.mark.parametrize("name", BIG_MATRIX_NAMES)
    def test_hermitian_involutions(self, name):
        m = big_matrix(name)
        assert np.array_equal(m, m.conj().T)
        assert np.array_equal(m @ m, np.eye(8))

    def test_unicode_aliases(self):
        assert np.array_equal(big_matrix("β"), big_matrix("beta"))
        assert np.array_equal(big_matrix("Σ₃"), big_matrix("Sigma3"))
        assert np.array_equal(big_matrix("α₂"), big_matrix("alpha2"))

    def test_unknown_name(self):
        with pytest.raises(ArgumentError):
            big_matrix("gamma5")

    def test_block_structure(self):
        """Block matrices act on the block index only."""
        beta = big_matrix("beta")
        assert np.array_equal(np.diag(beta).real, [1, 1, 1, 1, -1, -1, -1, -1])

    def test_lambda_operators_are_nilpotent(self):
        assert np.array_equal(LAMBDA2 @ LAMBDA2, np.zeros((2, 2)))
        assert np.array_equal(LAMBDA8 @ LAMBDA8, np.zeros((8, 8)))
        assert np.array_equal(GAMMA8 @ GAMMA8, np.zeros((8, 8)))

    def test_spin_z_diagonal(self):
        assert np.array_equal(np.diag(SPIN_Z).real, [1, -1, -1, 1, 1, -1, -1, 1])

    @pytest.mark.parametrize("axis", [1, 2, 3])
    def test_spin_embedding_commutes_with_blocks(self, axis):
        s = spin_embedding(axis)
        for name in ("beta", "Sigma3", "Sigma2", "alpha3"):
            b = big_matrix(name)
            assert np.array_equal(s @ b, b @ s)

    def test_spin_dot(self):
        values = spin_dot(np.array([[0.0, 0.0, 2.0], [1.0, 0.0, 0.0]]))
        assert values.shape == (2, 2, 2)
        assert np.array_equal(values[0], 2.0 * pauli(3))
        assert np.array_equal(values[1], pauli(1))


class TestBasis:
    """Test suite for canonical basis vectors."""

    def test_one_based(self):
        assert np.array_equal(basis(1, 2), [1, 0])
        assert np.array_equal(basis(8, 8)[-1], 1)

    @pytest.mark.parametrize("index,dim", [(0, 8), (9, 8), (1, 0)])
    def test_out_of_range(self, index, dim):
        with pytest.raises(ArgumentError):
            basis(index, dim)


class TestConjugations:
    """Test suite for the two-component and eight-component conjugations."""

    def test_kg_row_is_sigma3_adjoint(self, rng):
        psi = rng.normal(size=(2, 5)) + 1j * rng.normal(size=(2, 5))
        row = conj_kg_row(psi)
        assert np.allclose(row, (pauli(3) @ np.conj(psi)))

    def test_kg_charge_swaps_components(self):
        psi = np.array([[1.0 + 2.0j], [3.0 - 1.0j]])
        assert np.array_equal(conj_kg_charge(psi), [[3.0 + 1.0j], [1.0 - 2.0j]])

    def test_c1_components_match_matrix_form(self, rng):
        psi = rng.normal(size=(8, 7)) + 1j * rng.normal(size=(8, 7))
        assert np.allclose(conj_dirac_c1(psi), conj_dirac_c1_matrix(psi), atol=0.0, rtol=1e-15)

    def test_c1_applied_twice_is_minus_identity(self, rng):
        psi = rng.normal(size=8) + 1j * rng.normal(size=8)
        assert np.array_equal(conj_dirac_c1(conj_dirac_c1(psi)), -psi)

    def test_c2_on_basis(self):
        assert np.array_equal(conj_dirac_c2(basis(1, 8)), -basis(5, 8))
        assert np.array_equal(conj_dirac_c2(basis(5, 8)), basis(1, 8))
        assert np.array_equal(conj_dirac_c2(basis(3, 8)), -basis(7, 8))
        assert np.array_equal(conj_dirac_c2(basis(7, 8)), basis(3, 8))

    def test_c1_on_basis(self):
        assert np.array_equal(conj_dirac_c1(basis(1, 8)), -basis(2, 8))
        assert np.array_equal(conj_dirac_c1(basis(2, 8)), basis(1, 8))

    def test_c2_matrix_form_is_i_times_components(self, rng):
        psi = rng.normal(size=(8, 4)) + 1j * rng.normal(size=(8, 4))
        assert np.allclose(conj_dirac_c2_matrix(psi), 1j * conj_dirac_c2(psi))

    def test_discrepancy_report(self):
        report = conjugation_discrepancy()
        assert report["c1_matrix_equals_components"] is True
        assert report["c2_matrix_equals_components"] is False
        assert report["c2_matrix_over_components"] == "i"
        assert report["authoritative"] == "components"

    def test_wrong_component_count(self):
        with pytest.raises(ArgumentError):
            conj_dirac_c1(np.zeros(4))
        with pytest.raises(ArgumentError):
            conj_kg_row(np.zeros((3, 2)))
