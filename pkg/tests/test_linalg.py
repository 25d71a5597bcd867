"""
Unit tests for the dense numerical kernels.
Eigenvalues and singular values are checked against scipy; determinants against cofactor expansion.
"""

import itertools

import numpy as np
import pytest
import scipy.linalg
from hypothesis import given, seed, settings
from hypothesis import strategies as st

from src.errors import KernelMismatch, NoConvergence, NotSquare, NotSymmetric
from src.spectral.linalg import integer_determinant, jacobi_eigenvalues, singular_values, sym_eigenvalues


def cofactor_determinant(m):
    n = len(m)
    if n == 0:
        return 1
    total = 0
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        product = 1
        for row, col in enumerate(perm):
            product *= m[row][col]
        total += -product if inversions % 2 else product
    return total


small_ints = st.integers(min_value=-6, max_value=6)


def integer_matrices(max_size=5):
    return st.integers(min_value=0, max_value=max_size).flatmap(
        lambda n: st.lists(st.lists(small_ints, min_size=n, max_size=n), min_size=n, max_size=n)
    )


class TestJacobi:
    """Test suite for the cyclic Jacobi eigensolver."""

    def test_diagonal(self):
        assert list(jacobi_eigenvalues(np.diag([3.0, 1.0, 2.0]))) == [1.0, 2.0, 3.0]

    def test_path_laplacian(self):
        values = jacobi_eigenvalues([[1, -1, 0], [-1, 2, -1], [0, -1, 1]])
        assert values == pytest.approx([0.0, 1.0, 3.0], abs=1e-12)

    @seed(20240607)
    @settings(max_examples=60, deadline=None)
    @given(st.integers(min_value=1, max_value=8), st.integers(min_value=0, max_value=2**32 - 1))
    def test_matches_scipy(self, n, seed):
        """Test random symmetric matrices against scipy.linalg.eigvalsh."""
        rng = np.random.default_rng(seed)
        a = rng.normal(size=(n, n))
        m = a + a.T
        expected = scipy.linalg.eigvalsh(m)
        scale = max(1.0, float(np.linalg.norm(m)))
        assert np.allclose(jacobi_eigenvalues(m), expected, atol=1e-10 * scale)

    def test_not_square(self):
        with pytest.raises(NotSquare):
            jacobi_eigenvalues(np.zeros((2, 3)))

    def test_not_symmetric(self):
        with pytest.raises(NotSymmetric):
            jacobi_eigenvalues([[1.0, 2.0], [0.0, 1.0]])

    def test_no_convergence(self):
        with pytest.raises(NoConvergence):
            jacobi_eigenvalues([[1.0, 1.0], [1.0, 1.0]], max_sweeps=0)

    def test_empty_matrix(self):
        assert jacobi_eigenvalues(np.zeros((0, 0))).size == 0


class TestKernelSnapping:
    """Test suite for the combinatorially supplied kernel dimension."""

    def test_snaps_exact_zeros(self):
        spectrum = sym_eigenvalues([[1, -1], [-1, 1]], 1)
        assert spectrum.values[0] == 0.0
        assert spectrum.positive == pytest.approx((2.0,))

    def test_kernel_too_small(self):
        with pytest.raises(KernelMismatch):
            sym_eigenvalues([[1, -1], [-1, 1]], 0)

    def test_kernel_too_large(self):
        with pytest.raises(KernelMismatch):
            sym_eigenvalues([[1, -1], [-1, 1]], 2)

    def test_zero_matrix(self):
        spectrum = sym_eigenvalues(np.zeros((3, 3)), 3)
        assert spectrum.values == (0.0, 0.0, 0.0)
        assert spectrum.positive == ()


class TestSingularValues:
    """Test suite for singular values through the smaller Gram matrix."""

    def test_incidence_of_path(self):
        c1 = np.array([[-1.0, 0.0], [1.0, -1.0], [0.0, 1.0]])
        spectrum = singular_values(c1, 0)
        assert spectrum.values == pytest.approx((1.0, np.sqrt(3.0)))

    def test_wide_matrix_pads_kernel(self):
        a = np.array([[1.0, 0.0, 0.0], [0.0, 2.0, 0.0]])
        spectrum = singular_values(a, 1)
        assert spectrum.zero_count == 1
        assert spectrum.values == pytest.approx((0.0, 1.0, 2.0))

    @seed(20240607)
    @settings(max_examples=40, deadline=None)
    @given(
        st.integers(min_value=1, max_value=6),
        st.integers(min_value=1, max_value=6),
        st.integers(min_value=0, max_value=2**32 - 1),
    )
    def test_matches_scipy(self, rows, cols, seed):
        """Test full-rank random matrices against scipy.linalg.svdvals."""
        rng = np.random.default_rng(seed)
        a = 10.0 * np.eye(rows, cols) + rng.normal(size=(rows, cols))
        kernel = cols - min(rows, cols)
        spectrum = singular_values(a, kernel)
        expected = sorted(scipy.linalg.svdvals(a))
        assert spectrum.positive == pytest.approx(expected, rel=1e-8, abs=1e-10)

    def test_incompatible_kernel(self):
        with pytest.raises(KernelMismatch):
            singular_values(np.eye(2), 3)


class TestIntegerDeterminant:
    """Test suite for Bareiss elimination."""

    def test_identity(self):
        assert integer_determinant([[1, 0], [0, 1]]) == 1

    def test_needs_pivot_swap(self):
        assert integer_determinant([[0, 1], [1, 0]]) == -1

    def test_singular(self):
        assert integer_determinant([[1, 2], [2, 4]]) == 0

    def test_empty(self):
        assert integer_determinant([]) == 1

    def test_not_square(self):
        with pytest.raises(NotSquare):
            integer_determinant([[1, 2]])

    @seed(20240607)
    @settings(max_examples=200, deadline=None)
    @given(integer_matrices())
    def test_matches_cofactor_expansion(self, m):
        assert integer_determinant(m) == cofactor_determinant(m)


if __name__ == "__main__":
    pytest.main([__file__])
