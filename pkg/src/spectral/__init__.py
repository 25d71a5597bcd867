"""Spectra of graph differentials and the estimates built on them."""

from .bounds import chung_bound, report_to_csv, trace_proof, verify_main_bound
from .laplacian import (
    fk_det,
    graph_log_det,
    incidence,
    laplacian0,
    log_det_from_density,
    sdf,
    sdf_dual,
    smallest_positive_eigenvalue,
    spanning_tree_count,
)
from .linalg import integer_determinant, singular_values, sym_eigenvalues

__all__ = [
    "chung_bound",
    "fk_det",
    "graph_log_det",
    "incidence",
    "integer_determinant",
    "laplacian0",
    "log_det_from_density",
    "report_to_csv",
    "sdf",
    "sdf_dual",
    "singular_values",
    "smallest_positive_eigenvalue",
    "spanning_tree_count",
    "sym_eigenvalues",
    "trace_proof",
    "verify_main_bound",
]
