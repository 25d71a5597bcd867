"""
Covering towers over Z^d: normalised log-determinants per level against the
L2 oracle, and the level-independent density estimate

    (F_1(X_i)(lam) - F_1(X_i)(0)) / [G:G_i] <= C lam,   C = 2 |E(X)| deg(X).
"""

import csv
import io
import math
from typing import List, Optional, Sequence

from ..errors import BadModuli, NotNested
from ..graph.core import max_degree
from ..models import TowerLevel, TowerReport, UniformViolation, VoltageGraph
from ..spectral.bounds import sample_points
from ..spectral.laplacian import log_det_from_density, step_function
from ..utils.logging import get_logger, log_verification_event
from .cover import build_cover, check_moduli, checked_level_eigenvalues
from .oracle import l2_log_det_oracle_refined

logger = get_logger(__name__)

UNIFORM_TOLERANCE = 1e-9
CSV_HEADER = ("sheets", "norm_log_det", "oracle", "abs_error")


def check_nested(vg: VoltageGraph, moduli_sequence: Sequence[Sequence[int]]) -> List[tuple]:
    """Validate moduli and require n_j(i) | n_j(i+1), i.e. G_0 >= G_1 >= ..."""
    if not moduli_sequence:
        raise BadModuli("need at least one level")
    levels = [check_moduli(vg, moduli) for moduli in moduli_sequence]
    for previous, current in zip(levels, levels[1:]):
        if any(b % a != 0 for a, b in zip(previous, current)):
            raise NotNested("each level's moduli must divide the next", previous=previous, current=current)
    return levels


def build_level(vg: VoltageGraph, moduli: Sequence[int], cutoff: float) -> TowerLevel:
    """Cover, spectrum and normalised density data for one quotient."""
    moduli = check_moduli(vg, moduli)
    sheets = math.prod(moduli)
    cover = build_cover(vg, moduli)
    positive, kernel = checked_level_eigenvalues(vg, moduli, cover)

    b1 = cover.edge_count - cover.vertex_count + kernel
    profile = step_function((math.sqrt(mu) for mu in positive), b1, denominator=sheets)
    log_det = 0.5 * math.fsum(math.log(mu) for mu in positive)

    level = TowerLevel(
        moduli=moduli,
        sheets=sheets,
        cover=cover,
        max_degree=max_degree(cover),
        components=kernel,
        normalized_log_det=log_det / sheets,
        density_log_det=log_det_from_density(profile, cutoff),
        sdf_gap_profile=profile,
    )
    logger.info(
        "Built tower level",
        moduli=moduli,
        sheets=sheets,
        normalized_log_det=level.normalized_log_det,
        components=kernel,
    )
    return level


def majorant_integral(levels: Sequence[TowerLevel]) -> float:
    """int_0^1 sup_i (F_1(X_i)(lam) - F_1(X_i)(0)) / ([G:G_i] lam) dlam, exactly on the steps."""
    points = sorted({p for level in levels for p in level.sdf_gap_profile.jump_points if p < 1.0})
    edges = [*points, 1.0]
    total = 0.0
    for left, right in zip(edges, edges[1:]):
        height = max(level.sdf_gap_profile.normalized_gap(left) for level in levels)
        total += height * math.log(right / left)
    return total


def tower_report(
    vg: VoltageGraph,
    moduli_sequence: Sequence[Sequence[int]],
    lambda_grid: int,
    oracle_nodes: Optional[int] = None,
) -> TowerReport:
    """Evaluate every level of a nested tower and the L2 limit."""
    if lambda_grid <= 0:
        raise ValueError("lambda_grid must be positive")
    levels_moduli = check_nested(vg, moduli_sequence)
    base_degree = max_degree(vg.base)
    cutoff = math.sqrt(2.0 * base_degree) if base_degree else 1.0

    levels = sorted(
        (build_level(vg, moduli, cutoff) for moduli in levels_moduli),
        key=lambda level: level.sheets,
    )
    oracle = l2_log_det_oracle_refined(vg, oracle_nodes)

    report = TowerReport(
        base=vg,
        levels=tuple(levels),
        oracle_limit=oracle,
        uniform_constant=2.0 * vg.base.edge_count * base_degree,
        density_cutoff=cutoff,
        majorant_integral=majorant_integral(levels),
        grid_size=lambda_grid,
    )
    logger.info(
        "Built tower report",
        levels=len(levels),
        oracle=oracle,
        last_error=report.abs_errors()[-1],
    )
    return report


def level_violations(level: TowerLevel, constant: float, grid_size: int) -> List[UniformViolation]:
    """Samples of one level where the normalised gap exceeds constant * lam."""
    violations: List[UniformViolation] = []
    profile = level.sdf_gap_profile
    for lam in sample_points(profile, grid_size):
        normalized = profile.normalized_gap(lam)
        bound = constant * lam
        if normalized > bound + UNIFORM_TOLERANCE:
            violations.append(UniformViolation(sheets=level.sheets, lam=lam, normalized_gap=normalized, bound=bound))
    return violations


def verify_uniform_estimate(report: TowerReport) -> List[UniformViolation]:
    """Sample the normalised gap against C lam at every level, on the grid and at all jumps below 1."""
    violations = [
        violation
        for level in report.levels
        for violation in level_violations(level, report.uniform_constant, report.grid_size)
    ]
    log_verification_event(
        logger,
        "uniform_estimate",
        f"levels={len(report.levels)}",
        not violations,
        violations=len(violations),
    )
    return violations


def report_to_csv(report: TowerReport) -> str:
    """CSV rows sheets,norm_log_det,oracle,abs_error with 15 significant digits."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for level, error in zip(report.levels, report.abs_errors()):
        writer.writerow((level.sheets, f"{level.normalized_log_det:.15g}", f"{report.oracle_limit:.15g}", f"{error:.15g}"))
    return buffer.getvalue()
