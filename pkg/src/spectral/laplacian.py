"""
Differential c_1, Laplacian Delta_0 and the first spectral density function.

F_1(X)(lam) = b_1 + #{positive eigenvalues mu of Delta_0 with mu <= lam^2}.
Kernel dimensions come from the graph (b_0 for Delta_0, b_1 for c_1^T c_1).
"""

import math
from typing import Iterable, List

import numpy as np

from ..errors import DisconnectedGraph, NoPositiveSpectrum
from ..graph.core import component_count
from ..models import MultiGraph, Spectrum, StepFunction
from ..utils.logging import get_logger
from .linalg import integer_determinant, singular_values, sym_eigenvalues

logger = get_logger(__name__)

# Relative spacing under which two computed values count as one jump point.
MERGE_TOLERANCE = 1e-9


def incidence(g: MultiGraph) -> np.ndarray:
    """|V| x |E| matrix of c_1: +1 at the head, -1 at the tail, loop columns zero."""
    c1 = np.zeros((g.vertex_count, g.edge_count))
    for index, (tail, head) in enumerate(g.edges):
        c1[head, index] += 1.0
        c1[tail, index] -= 1.0
    return c1


def integer_laplacian(g: MultiGraph) -> List[List[int]]:
    """Delta_0 with exact integer entries; loops contribute nothing."""
    n = g.vertex_count
    lap = [[0] * n for _ in range(n)]
    for tail, head in g.edges:
        if tail == head:
            continue
        lap[tail][tail] += 1
        lap[head][head] += 1
        lap[tail][head] -= 1
        lap[head][tail] -= 1
    return lap


def laplacian0(g: MultiGraph) -> np.ndarray:
    """Delta_0 = c_1 c_1^T as a float matrix."""
    return np.array(integer_laplacian(g), dtype=float).reshape(g.vertex_count, g.vertex_count)


def betti_numbers(g: MultiGraph) -> tuple:
    b0 = component_count(g)
    return b0, g.edge_count - g.vertex_count + b0


def laplacian_spectrum(g: MultiGraph) -> Spectrum:
    """Eigenvalues of Delta_0 with exactly b_0 snapped zeros."""
    b0, _ = betti_numbers(g)
    return sym_eigenvalues(laplacian0(g), b0)


def merge_close(values: Iterable[float], tolerance: float = MERGE_TOLERANCE) -> List[tuple]:
    """Group ascending values into (representative, multiplicity); the representative is the cluster minimum."""
    clusters: List[list] = []
    for value in sorted(values):
        if clusters and value - clusters[-1][2] <= tolerance * max(1.0, clusters[-1][2]):
            clusters[-1][1] += 1
            clusters[-1][2] = value
        else:
            clusters.append([value, 1, value])
    return [(first, count) for first, count, _ in clusters]


def step_function(jumps: Iterable[float], start: int, denominator: int = 1) -> StepFunction:
    """Step function starting at `start` that rises by one at every listed jump."""
    points, values = [], [start]
    for point, count in merge_close(jumps):
        points.append(point)
        values.append(values[-1] + count)
    return StepFunction(jump_points=tuple(points), values=tuple(values), denominator=denominator)


def sdf(g: MultiGraph) -> StepFunction:
    """First spectral density function F_1(X); jumps at the positive singular values of c_1."""
    b0, b1 = betti_numbers(g)
    spectrum = sym_eigenvalues(laplacian0(g), b0)
    result = step_function((math.sqrt(mu) for mu in spectrum.positive), b1)
    logger.debug("Computed spectral density", vertices=g.vertex_count, edges=g.edge_count, b1=b1, jumps=len(result.jump_points))
    return result


def sdf_dual(g: MultiGraph) -> StepFunction:
    """F(c_1^*) computed from the edge-side Gram matrix c_1^T c_1 (kernel b_1), starting at b_0."""
    b0, b1 = betti_numbers(g)
    c1 = incidence(g)
    spectrum = sym_eigenvalues(c1.T @ c1, b1)
    return step_function((math.sqrt(mu) for mu in spectrum.positive), b0)


def smallest_positive_eigenvalue(g: MultiGraph) -> float:
    """lambda_1: the smallest nonzero eigenvalue of Delta_0."""
    if all(tail == head for tail, head in g.edges):
        raise NoPositiveSpectrum("graph has no edge joining two distinct vertices", edges=g.edge_count)
    return laplacian_spectrum(g).positive[0]


def fk_det(a, known_kernel_dim: int) -> float:
    """Natural log of the Fuglede-Kadison determinant: sum of ln of the nonzero singular values (0 for the zero map)."""
    spectrum = singular_values(a, known_kernel_dim)
    return math.fsum(math.log(value) for value in spectrum.positive)


def graph_log_det(g: MultiGraph) -> float:
    """ln det^(2)(c_1(X))."""
    _, b1 = betti_numbers(g)
    return fk_det(incidence(g), b1)


def log_det_from_density(step: StepFunction, cutoff: float) -> float:
    """
    -int_0^K (F(lam) - F(0)) / lam dlam + ln(K) * (F(K) - F(0)), evaluated exactly on the steps.

    Equals the log-determinant once K bounds every jump point.
    """
    if cutoff <= 0:
        raise ValueError("cutoff must be positive")
    log_cutoff = math.log(cutoff)
    integral, below = 0.0, 0
    for index, point in enumerate(step.jump_points):
        if point > cutoff * (1.0 + MERGE_TOLERANCE):
            break
        rise = step.values[index + 1] - step.values[index]
        integral += rise * (log_cutoff - math.log(point))
        below += rise
    return (log_cutoff * below - integral) / step.denominator


def spanning_tree_count(g: MultiGraph) -> int:
    """Number of spanning trees by the matrix-tree theorem, in exact integers."""
    if component_count(g) > 1:
        raise DisconnectedGraph("spanning tree count needs a connected graph")
    if g.vertex_count <= 1:
        return 1
    lap = integer_laplacian(g)
    reduced = [row[1:] for row in lap[1:]]
    return integer_determinant(reduced)
