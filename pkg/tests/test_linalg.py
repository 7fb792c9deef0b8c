"""Tests for the dense matrix kernel."""

import numpy as np
import pytest

from qvertex.errors import DimensionError, NonFiniteError, SingularMatrixError
from qvertex.linalg import (
    adjugate,
    is_hermitian,
    numerical_rank,
    permutation_matrix,
    rank_report,
    solve,
)


class TestRank:
    """Tests for the tolerant rank."""

    def test_examples(self):
        """Zero, identity and a rank-one outer product."""
        assert numerical_rank(np.zeros((3, 3))) == 0
        assert numerical_rank(np.eye(3)) == 3
        assert numerical_rank([[1, 2], [2, 4]]) == 1

    def test_tiny_perturbation_is_dropped(self):
        """A 1e-13 perturbation of a rank-one matrix stays rank one."""
        m = np.array([[1.0, 2.0], [2.0, 4.0 + 1e-13]])
        assert numerical_rank(m) == 1

    def test_empty_matrix(self):
        """The empty matrix has rank zero."""
        assert numerical_rank(np.zeros((0, 0))) == 0

    @pytest.mark.parametrize("r", [0, 1, 2, 3, 4])
    def test_invariant_under_invertible_factors(self, rng, r):
        """Rank does not change under multiplication by well-conditioned matrices."""
        for _ in range(10):
            low = rng.normal(size=(4, r)) @ rng.normal(size=(r, 4))
            c = np.eye(4) + 0.1 * rng.normal(size=(4, 4))
            assert numerical_rank(c @ low) == r
            assert numerical_rank(low @ c) == r

    def test_scale_floor(self):
        """A block measured against a larger scale loses its tiny singular values."""
        block = np.array([[1e-10]])
        assert rank_report(block).rank == 1
        assert rank_report(block, scale=1.0).rank == 0
        assert rank_report(block, scale=1e-3).rank == 1

    def test_ambiguous_margin(self):
        """A singular value just above the threshold is flagged as ambiguous."""
        report = rank_report(np.diag([1.0, 5e-9]))
        assert report.rank == 2
        assert report.ambiguous
        assert not rank_report(np.eye(2)).ambiguous

    def test_rejects_non_finite(self):
        """NaN entries are rejected."""
        with pytest.raises(NonFiniteError):
            numerical_rank([[np.nan, 0], [0, 1]])


class TestHermitian:
    """Tests for the Hermitian check."""

    def test_examples(self):
        """Real symmetric and complex Hermitian matrices pass, others fail."""
        assert is_hermitian([[1, 2j], [-2j, 3]])
        assert not is_hermitian([[1, 2j], [2j, 3]])
        assert not is_hermitian([[1j, 0], [0, 1]])

    def test_tolerance(self):
        """Asymmetry below the tolerance is accepted."""
        assert is_hermitian([[1, 1 + 1e-12], [1, 1]])

    def test_invariant_under_permutation(self, rng):
        """Relabelling rows and columns together keeps the Hermitian property."""
        for _ in range(10):
            m = rng.normal(size=(5, 5)) + 1j * rng.normal(size=(5, 5))
            p = permutation_matrix(tuple(int(i) for i in rng.permutation(5)))
            hermitian = (m + m.conj().T) / 2
            assert is_hermitian(p @ hermitian @ p.conj().T)
            assert not is_hermitian(p @ m @ p.conj().T)

    def test_requires_square(self):
        """Non-square input is a dimension error."""
        with pytest.raises(DimensionError):
            is_hermitian(np.zeros((2, 3)))


class TestSolve:
    """Tests for the pivoted solve."""

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
    def test_random_system(self, rng, n):
        """Solution satisfies the system to rounding."""
        for _ in range(5):
            m = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
            b = rng.normal(size=(n, 2))
            x = solve(m, b)
            np.testing.assert_allclose(m @ x, b, atol=1e-9)

    def test_vector_rhs(self):
        """A vector right-hand side returns a vector."""
        x = solve(np.diag([2.0, 4.0]), [2.0, 2.0])
        np.testing.assert_allclose(x, [1.0, 0.5])

    def test_singular(self):
        """A rank-deficient matrix raises with the offending pivot."""
        with pytest.raises(SingularMatrixError) as excinfo:
            solve([[1.0, 2.0], [2.0, 4.0]], [1.0, 1.0])
        assert excinfo.value.pivot < 1e-12

    def test_shape_mismatch(self):
        """RHS rows must match the matrix size."""
        with pytest.raises(DimensionError):
            solve(np.eye(2), np.ones(3))


class TestHelpers:
    """Tests for adjugate and permutation matrices."""

    def test_adjugate_inverse(self, rng):
        """adj(M) = det(M) M^-1 for an invertible matrix."""
        m = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
        np.testing.assert_allclose(adjugate(m), np.linalg.det(m) * np.linalg.inv(m), atol=1e-12)

    def test_adjugate_rank_one_vanishes(self):
        """A rank-one 3x3 matrix has zero adjugate."""
        v = np.array([1.0, 2.0, 3.0])
        np.testing.assert_allclose(adjugate(np.outer(v, v)), 0, atol=1e-12)

    def test_permutation_matrix(self):
        """P[order[i], i] = 1."""
        p = permutation_matrix((2, 0, 1))
        x = np.array([10, 20, 30])
        np.testing.assert_allclose(p @ x, [20, 30, 10])
