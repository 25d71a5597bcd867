"""
Dense numerical kernels: cyclic Jacobi eigensolver, singular values through
the smaller Gram matrix, and exact Bareiss determinants.

Kernel dimensions are always supplied by the caller; near-zero eigenvalues
are never classified by a floating threshold alone.
"""

import math
from typing import Sequence

import numpy as np

from ..config import DEFAULT_SETTINGS
from ..errors import KernelMismatch, NoConvergence, NotSquare, NotSymmetric
from ..models import Spectrum
from ..utils.logging import get_logger

logger = get_logger(__name__)

SYMMETRY_TOLERANCE = 1e-12
TRACE_TOLERANCE = 1e-8
KERNEL_GAP_TOLERANCE = 1e-7
PSD_TOLERANCE = 1e-9


def _as_square(m) -> np.ndarray:
    a = np.asarray(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise NotSquare("expected a square matrix", shape=a.shape)
    return a


def jacobi_eigenvalues(
    m,
    tolerance: float = DEFAULT_SETTINGS.eigen_tolerance,
    max_sweeps: int = DEFAULT_SETTINGS.jacobi_max_sweeps,
) -> np.ndarray:
    """
    Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations, ascending.

    Sweeps stop once the off-diagonal Frobenius norm is <= tolerance * ||m||_F.
    """
    a = _as_square(m)
    norm = float(np.linalg.norm(a))
    if np.linalg.norm(a - a.T) > SYMMETRY_TOLERANCE * norm:
        raise NotSymmetric("matrix is not symmetric", asymmetry=float(np.linalg.norm(a - a.T)))
    a = (a + a.T) / 2.0
    n = a.shape[0]
    target = tolerance * norm

    for sweep in range(max_sweeps):
        off = float(np.linalg.norm(a - np.diag(np.diag(a))))
        if off <= target:
            logger.debug("Jacobi converged", size=n, sweeps=sweep, off_norm=off)
            return np.sort(np.diag(a))
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(theta, 1.0))
                c = 1.0 / math.hypot(t, 1.0)
                s = t * c
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = a[q, p] = 0.0

    raise NoConvergence("Jacobi iteration did not converge", size=n, sweeps=max_sweeps)


def _snap_kernel(raw: np.ndarray, known_kernel_dim: int, norm: float, trace: float) -> Spectrum:
    n = raw.shape[0]
    if not 0 <= known_kernel_dim <= n:
        raise ValueError(f"kernel dimension {known_kernel_dim} outside 0..{n}")
    if abs(float(raw.sum()) - trace) > TRACE_TOLERANCE * norm:
        raise NoConvergence("eigenvalue sum does not match the trace", total=float(raw.sum()), trace=trace)

    threshold = KERNEL_GAP_TOLERANCE * (1.0 + norm)
    if known_kernel_dim < n and raw[known_kernel_dim] < threshold:
        raise KernelMismatch(
            "eigenvalue after the kernel is numerically zero",
            kernel_dim=known_kernel_dim,
            value=float(raw[known_kernel_dim]),
        )
    if known_kernel_dim > 0 and abs(raw[known_kernel_dim - 1]) > threshold:
        raise KernelMismatch(
            "kernel eigenvalue is not numerically zero",
            kernel_dim=known_kernel_dim,
            value=float(raw[known_kernel_dim - 1]),
        )
    values = [0.0] * known_kernel_dim + [float(v) for v in raw[known_kernel_dim:]]
    return Spectrum(values=tuple(values), zero_count=known_kernel_dim)


def sym_eigenvalues(m, known_kernel_dim: int) -> Spectrum:
    """Spectrum of a symmetric positive semidefinite matrix with its kernel snapped to exact zeros."""
    a = _as_square(m)
    raw = jacobi_eigenvalues(a)
    return _snap_kernel(raw, known_kernel_dim, float(np.linalg.norm(a)), float(np.trace(a)))


def singular_values(a, known_kernel_dim: int) -> Spectrum:
    """
    Singular values of a (rows x cols), one per domain dimension.

    Computed from the smaller of a^T a and a a^T; the nonzero eigenvalues coincide.
    """
    a = np.asarray(a, dtype=float)
    if a.ndim != 2:
        raise NotSquare("expected a two-dimensional matrix", shape=a.shape)
    rows, cols = a.shape
    rank = cols - known_kernel_dim
    if not 0 <= rank <= min(rows, cols):
        raise KernelMismatch("kernel dimension incompatible with shape", kernel_dim=known_kernel_dim, shape=a.shape)

    gram = a.T @ a if cols <= rows else a @ a.T
    gram_kernel = gram.shape[0] - rank
    norm = float(np.linalg.norm(gram))
    raw = jacobi_eigenvalues(gram)
    if raw.size and raw[0] < -PSD_TOLERANCE * norm:
        raise KernelMismatch("Gram matrix has a negative eigenvalue", value=float(raw[0]))

    spectrum = _snap_kernel(raw, gram_kernel, norm, float(np.trace(gram)))
    positive = [math.sqrt(value) for value in spectrum.positive]
    return Spectrum(values=tuple([0.0] * known_kernel_dim + positive), zero_count=known_kernel_dim)


def integer_determinant(m: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    a = [[int(x) for x in row] for row in m]
    n = len(a)
    if any(len(row) != n for row in a):
        raise NotSquare("expected a square matrix", rows=n)
    if n == 0:
        return 1

    sign = 1
    previous = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if pivot is None:
                return 0
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // previous
        previous = a[k][k]
    return sign * a[n - 1][n - 1]
