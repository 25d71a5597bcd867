"""
Finite quotients of Z^d-coverings built from voltage graphs.

The quotient for moduli (n_1, .., n_d) has vertices V(base) x prod Z/n_j,
indexed lexicographically with the base vertex most significant, and one edge
(tail(e), g) -> (head(e), g + sigma(e) mod n) per base edge e and group element g.

Its Laplacian splits over the characters theta = 2 pi k / n of the deck group
into twisted Laplacians Delta_0(theta) of size |V(base)|.
"""

import itertools
import math
from typing import List, Sequence, Tuple

import networkx as nx
import numpy as np
from networkx.utils import UnionFind

from ..errors import BadModuli, KernelMismatch
from ..graph.core import component_count, component_labels, joins
from ..models import MultiGraph, VoltageGraph
from ..spectral.linalg import sym_eigenvalues
from ..utils.logging import get_logger

logger = get_logger(__name__)


def check_moduli(vg: VoltageGraph, moduli: Sequence[int]) -> Tuple[int, ...]:
    moduli = tuple(moduli)
    if len(moduli) != vg.rank:
        raise BadModuli(f"expected {vg.rank} moduli", moduli=moduli)
    if any(not isinstance(n, (int, np.integer)) or n < 1 for n in moduli):
        raise BadModuli("moduli must be positive integers", moduli=moduli)
    return tuple(int(n) for n in moduli)


def group_elements(moduli: Sequence[int]) -> List[Tuple[int, ...]]:
    """Elements of prod Z/n_j in lexicographic order."""
    return list(itertools.product(*(range(n) for n in moduli)))


def build_cover(vg: VoltageGraph, moduli: Sequence[int]) -> MultiGraph:
    """The prod(moduli)-sheeted regular cover of the base graph."""
    moduli = check_moduli(vg, moduli)
    sheets = math.prod(moduli)
    elements = group_elements(moduli)
    position = {element: index for index, element in enumerate(elements)}

    edges = []
    for (tail, head), voltage in zip(vg.base.edges, vg.voltages):
        for index, element in enumerate(elements):
            shifted = tuple((g + s) % n for g, s, n in zip(element, voltage, moduli))
            edges.append((tail * sheets + index, head * sheets + position[shifted]))
    cover = MultiGraph(vertex_count=vg.base.vertex_count * sheets, edges=tuple(edges))
    logger.debug("Built cover", moduli=moduli, vertices=cover.vertex_count, edges=cover.edge_count)
    return cover


def cycle_voltages(vg: VoltageGraph) -> List[Tuple[int, Tuple[int, ...]]]:
    """
    Net voltages of the fundamental cycles, as (component root, voltage) pairs.

    Vertices get potentials along a spanning forest; every non-forest edge e
    closes a cycle with voltage p(tail) + sigma(e) - p(head). The root of a
    component is its smallest vertex.
    """
    base = vg.base
    forest = UnionFind(range(base.vertex_count))
    in_forest = [joins(forest, tail, head) for tail, head in base.edges]
    tree = nx.Graph()
    tree.add_nodes_from(range(base.vertex_count))
    for index, (tail, head) in enumerate(base.edges):
        if in_forest[index]:
            tree.add_edge(tail, head, index=index)

    voltages = [np.asarray(v, dtype=np.int64) for v in vg.voltages]
    labels = component_labels(base)
    potential: List = [None] * base.vertex_count
    for root in sorted(set(labels)):
        potential[root] = np.zeros(vg.rank, dtype=np.int64)
        for u, w in nx.bfs_edges(tree, root):
            index = tree[u][w]["index"]
            direction = 1 if base.edges[index][0] == u else -1
            potential[w] = potential[u] + direction * voltages[index]

    cycles = []
    for index, (tail, head) in enumerate(base.edges):
        if in_forest[index]:
            continue
        net = potential[tail] + voltages[index] - potential[head]
        cycles.append((labels[tail], tuple(int(x) for x in net)))
    return cycles


def block_kernel_dims(vg: VoltageGraph, moduli: Sequence[int]) -> List[int]:
    """dim ker Delta_0(theta_k) for every character k: components whose cycle voltages theta_k annihilates."""
    moduli = check_moduli(vg, moduli)
    lcm = math.lcm(*moduli)
    weights = [lcm // n for n in moduli]
    cycles = cycle_voltages(vg)
    roots = _component_roots(vg.base)

    dims = []
    for k in group_elements(moduli):
        blocked = {
            root
            for root, net in cycles
            if sum(kj * cj * wj for kj, cj, wj in zip(k, net, weights)) % lcm != 0
        }
        dims.append(len(roots - blocked))
    return dims


def _component_roots(g: MultiGraph) -> set:
    return set(component_labels(g))


def twisted_laplacians(vg: VoltageGraph, thetas: np.ndarray) -> np.ndarray:
    """Stack of Hermitian Delta_0(theta) for thetas of shape (M, d); result (M, |V|, |V|)."""
    thetas = np.atleast_2d(np.asarray(thetas, dtype=float))
    n = vg.base.vertex_count
    lap = np.zeros((thetas.shape[0], n, n), dtype=complex)
    for (tail, head), voltage in zip(vg.base.edges, vg.voltages):
        phase = np.exp(1j * (thetas @ np.asarray(voltage, dtype=float)))
        lap[:, tail, tail] += 1.0
        lap[:, head, head] += 1.0
        lap[:, tail, head] -= phase
        lap[:, head, tail] -= np.conj(phase)
    return lap


def real_lift(h: np.ndarray) -> np.ndarray:
    """Real symmetric [[A, -B], [B, A]] of H = A + iB; every eigenvalue of H appears twice."""
    a, b = h.real, h.imag
    return np.block([[a, -b], [b, a]])


def character_angles(moduli: Sequence[int]) -> np.ndarray:
    elements = np.array(group_elements(moduli), dtype=float).reshape(-1, len(moduli))
    return 2.0 * np.pi * elements / np.asarray(moduli, dtype=float)


def level_eigenvalues(vg: VoltageGraph, moduli: Sequence[int]) -> Tuple[List[float], int]:
    """
    Positive Laplacian eigenvalues of the quotient cover, and its kernel dimension.

    Each character block is solved through its real lift by the Jacobi eigensolver
    with the combinatorial kernel dimension.
    """
    moduli = check_moduli(vg, moduli)
    dims = block_kernel_dims(vg, moduli)
    blocks = twisted_laplacians(vg, character_angles(moduli))
    positive: List[float] = []
    for block, dim in zip(blocks, dims):
        spectrum = sym_eigenvalues(real_lift(block), 2 * dim)
        positive.extend(spectrum.positive[::2])
    return sorted(positive), sum(dims)


def checked_level_eigenvalues(vg: VoltageGraph, moduli: Sequence[int], cover: MultiGraph) -> Tuple[List[float], int]:
    """level_eigenvalues, cross-checked against the component count of the built cover."""
    positive, kernel = level_eigenvalues(vg, moduli)
    components = component_count(cover)
    if kernel != components:
        raise KernelMismatch("character kernels disagree with cover components", kernel=kernel, components=components)
    if len(positive) + kernel != cover.vertex_count:
        raise KernelMismatch("block spectra do not cover every vertex", eigenvalues=len(positive) + kernel)
    return positive, kernel
