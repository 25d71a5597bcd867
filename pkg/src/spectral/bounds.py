"""
Eigenvalue and spectral density estimates for finite graphs.

verify_main_bound samples F_1(X)(lam) - F_1(X)(0) <= 2 |E| deg lam on [0, 1),
the zero regime lam < 1/(sqrt(2)|E|) for connected graphs of degree >= 2,
and the unit-interval case deg <= 1.
"""

import csv
import io
import math
from typing import List, Optional

from ..errors import DisconnectedGraph, NoPositiveSpectrum
from ..forest import split_tree
from ..graph.core import edge_subgraph, max_degree, spanning_tree, stats
from ..models import BoundReport, BoundViolation, MultiGraph, ProofTrace, StepFunction
from ..utils.logging import get_logger, log_verification_event
from .laplacian import sdf

logger = get_logger(__name__)

JUMP_OFFSET = 1e-12
CSV_HEADER = ("lambda", "gap", "bound", "regime", "violated")


def chung_bound(g: MultiGraph) -> float:
    """Lower bound 1/(diam(X) vol(X)) for the smallest nonzero Laplacian eigenvalue."""
    st = stats(g)
    if st.vertex_count < 2:
        raise NoPositiveSpectrum("graph needs at least two vertices", vertices=st.vertex_count)
    if st.diameter is None:
        raise DisconnectedGraph("Chung's bound needs a connected graph", components=st.b0)
    return 1.0 / (st.diameter * st.volume)


def fine_thresholds(edge_count: int, degree: int) -> tuple:
    """(1/(sqrt(2)|E|), 1/(2(|E|-1)deg)) with +inf where undefined."""
    zero = 1.0 / (math.sqrt(2.0) * edge_count) if edge_count > 0 else math.inf
    linear = 1.0 / (2.0 * (edge_count - 1) * degree) if edge_count > 1 and degree > 0 else math.inf
    return zero, linear


def sample_points(step: StepFunction, grid_size: int, upper: float = 1.0) -> List[float]:
    """Uniform grid on [0, upper) plus both sides of every jump below upper."""
    points = {upper * i / grid_size for i in range(grid_size)}
    for jump in step.jump_points:
        if jump >= upper:
            break
        points.add(jump)
        if jump - JUMP_OFFSET >= 0.0:
            points.add(jump - JUMP_OFFSET)
    return sorted(points)


def verify_main_bound(g: MultiGraph, grid_size: int, step: Optional[StepFunction] = None) -> BoundReport:
    """Check the first spectral density estimate on a grid plus all jump points."""
    if grid_size <= 0:
        raise ValueError("grid_size must be positive")
    st = stats(g)
    edge_count, degree = st.edge_count, st.max_degree
    connected = st.connected
    if step is None:
        step = sdf(g)
    zero_threshold, linear_threshold = fine_thresholds(edge_count, degree)
    fine_applies = connected and degree >= 2
    unit_applies = connected and degree <= 1

    samples = sample_points(step, grid_size)
    if unit_applies:
        samples.append(1.0)

    gaps, bounds, regimes = [], [], []
    violations: List[BoundViolation] = []
    for lam in samples:
        gap = step.gap(lam)
        bound = 2.0 * edge_count * degree * lam
        if lam < zero_threshold:
            regime = "zero"
        elif lam >= linear_threshold:
            regime = "linear"
        else:
            regime = "silent"
        gaps.append(gap)
        bounds.append(bound)
        regimes.append(regime)

        if lam < 1.0 and gap > bound:
            violations.append(BoundViolation(lam=lam, gap=gap, bound=bound, assertion="linear_bound"))
        if fine_applies and lam < zero_threshold and gap != 0:
            violations.append(BoundViolation(lam=lam, gap=gap, bound=0.0, assertion="zero_regime"))
        if unit_applies and lam <= 1.0 and gap != 0:
            violations.append(BoundViolation(lam=lam, gap=gap, bound=0.0, assertion="unit_interval"))

    report = BoundReport(
        edge_count=edge_count,
        max_degree=degree,
        connected=connected,
        lambda_grid=tuple(samples),
        sdf_gap=tuple(gaps),
        bound=tuple(bounds),
        regimes=tuple(regimes),
        fine_zero_threshold=zero_threshold,
        fine_linear_threshold=linear_threshold,
        violations=tuple(violations),
    )
    log_verification_event(
        logger,
        "main_bound",
        f"|V|={g.vertex_count} |E|={edge_count}",
        report.passed,
        samples=len(samples),
        violations=len(violations),
    )
    return report


def report_to_csv(report: BoundReport) -> str:
    """CSV rows lambda,gap,bound,regime,violated with 15 significant digits and LF endings."""
    violated = {violation.lam for violation in report.violations}
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for lam, gap, bound, regime in zip(report.lambda_grid, report.sdf_gap, report.bound, report.regimes):
        writer.writerow((f"{lam:.15g}", gap, f"{bound:.15g}", regime, "true" if lam in violated else "false"))
    return buffer.getvalue()


def trace_proof(g: MultiGraph, lam: float) -> ProofTrace:
    """
    Replay the splitting argument at lam for a connected graph.

    Takes the maximal tree T, splits it with budget P = 1/(2 lam) and measures
    the density gaps of X, T and the pieces T_i.
    """
    if not 0.0 < lam < 1.0:
        raise ValueError("lam must lie in (0, 1)")
    tree_edges = spanning_tree(g)
    tree = edge_subgraph(g, tree_edges, range(g.vertex_count))
    budget = 1.0 / (2.0 * lam)
    split = split_tree(tree, budget)

    gap_pieces = 0
    for edges, vertices in zip(split.components, split.component_vertices):
        piece = edge_subgraph(tree, edges, vertices)
        gap_pieces += sdf(piece).gap(lam)

    trace = ProofTrace(
        lam=lam,
        budget=budget,
        spanning_tree=tree_edges,
        split=split,
        gap_graph=sdf(g).gap(lam),
        gap_tree=sdf(tree).gap(lam),
        gap_pieces=gap_pieces,
        tree_bound=2.0 * tree.edge_count * max_degree(tree) * lam,
    )
    log_verification_event(logger, "proof_trace", f"lam={lam:.6g}", trace.chain_holds, pieces=split.piece_count)
    return trace
