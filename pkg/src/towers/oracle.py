"""
Fourier evaluation of the L2 log-determinant of c_1 over a Z^d-covering.

    ln det(c_1 over Z^d) = 1/2 (2 pi)^-d int ln det Delta_0(theta) dtheta

(the Mahler measure of det Delta_0(theta) up to the factor 1/2), integrated by
the midpoint rule on a grid shifted by half a cell so theta = 0 is never hit.
"""

import math
from typing import List, Optional, Sequence

import numpy as np

from ..config import DEFAULT_SETTINGS
from ..errors import DisconnectedGraph, VoltagesNotGenerating
from ..graph.core import is_connected
from ..models import VoltageGraph
from ..utils.logging import get_logger
from .cover import cycle_voltages, twisted_laplacians

logger = get_logger(__name__)

CHUNK = 1 << 16


def lattice_index(vectors: Sequence[Sequence[int]], rank: int) -> int:
    """Index [Z^d : L] of the lattice spanned by the vectors; 0 when L has lower rank."""
    rows: List[List[int]] = [list(map(int, v)) for v in vectors if any(v)]
    index = 1
    for column in range(rank):
        # Euclid on this column until a single row keeps a nonzero entry.
        while True:
            live = [r for r in rows if r[column] != 0]
            if len(live) <= 1:
                break
            pivot = min(live, key=lambda r: abs(r[column]))
            for r in live:
                if r is not pivot:
                    q = r[column] // pivot[column]
                    for j in range(rank):
                        r[j] -= q * pivot[j]
        live = [r for r in rows if r[column] != 0]
        if not live:
            return 0
        pivot = live[0]
        index *= abs(pivot[column])
        rows = [r for r in rows if r is not pivot and any(r)]
    return index


def check_generating(vg: VoltageGraph) -> None:
    """The infinite cover is connected iff the base is connected and cycle voltages generate Z^d."""
    if not is_connected(vg.base):
        raise DisconnectedGraph("oracle needs a connected base graph")
    nets = [net for _, net in cycle_voltages(vg)]
    index = lattice_index(nets, vg.rank)
    if index != 1:
        raise VoltagesNotGenerating("cycle voltages do not generate Z^d", index=index, rank=vg.rank)


def midpoint_angles(nodes: int, rank: int) -> np.ndarray:
    """All (nodes^rank, rank) midpoint angles 2 pi (i + 1/2) / nodes."""
    axis = 2.0 * np.pi * (np.arange(nodes) + 0.5) / nodes
    grids = np.meshgrid(*([axis] * rank), indexing="ij")
    return np.stack([grid.ravel() for grid in grids], axis=1)


def l2_log_det_oracle(vg: VoltageGraph, quadrature_nodes: Optional[int] = None) -> float:
    """Midpoint-rule value of 1/2 (2 pi)^-d int ln det Delta_0(theta) dtheta."""
    check_generating(vg)
    nodes = quadrature_nodes or DEFAULT_SETTINGS.oracle_nodes(vg.rank)
    angles = midpoint_angles(nodes, vg.rank)
    partial = []
    for start in range(0, angles.shape[0], CHUNK):
        blocks = twisted_laplacians(vg, angles[start:start + CHUNK])
        _, logdet = np.linalg.slogdet(blocks)
        partial.append(float(np.sum(logdet)))
    value = 0.5 * math.fsum(partial) / angles.shape[0]
    logger.debug("Evaluated L2 oracle", rank=vg.rank, nodes=nodes, value=value)
    return value


def l2_log_det_oracle_refined(vg: VoltageGraph, quadrature_nodes: Optional[int] = None) -> float:
    """
    Richardson extrapolation of the oracle from m and 2m nodes per axis.

    The midpoint error of the logarithmic singularity at theta = 0 decays like
    1/(total node count), i.e. m^-d.
    """
    nodes = quadrature_nodes or DEFAULT_SETTINGS.oracle_nodes(vg.rank)
    coarse = l2_log_det_oracle(vg, nodes)
    fine = l2_log_det_oracle(vg, 2 * nodes)
    factor = 2.0 ** vg.rank
    return (factor * fine - coarse) / (factor - 1.0)
