"""Covering towers over free abelian deck groups."""

from .cover import build_cover, level_eigenvalues, twisted_laplacians
from .oracle import check_generating, l2_log_det_oracle, l2_log_det_oracle_refined, lattice_index
from .report import level_violations, majorant_integral, tower_report, verify_uniform_estimate

__all__ = [
    "build_cover",
    "check_generating",
    "l2_log_det_oracle",
    "l2_log_det_oracle_refined",
    "lattice_index",
    "level_eigenvalues",
    "level_violations",
    "majorant_integral",
    "tower_report",
    "twisted_laplacians",
    "verify_uniform_estimate",
]
