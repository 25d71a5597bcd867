"""
Error types raised by the spectral density toolkit.
Every error carries a short machine-readable code used by the CLI.
"""

from typing import Optional


class SpecDensError(Exception):
    """Base class for all toolkit errors."""

    code = "specdens_error"

    def __init__(self, message: str, **context):
        super().__init__(message)
        self.message = message
        self.context = context

    def __str__(self) -> str:
        if not self.context:
            return f"{self.code}: {self.message}"
        details = ", ".join(f"{key}={value}" for key, value in sorted(self.context.items()))
        return f"{self.code}: {self.message} ({details})"


class DisconnectedGraph(SpecDensError):
    code = "disconnected_graph"


class InvalidEdgeIndex(SpecDensError):
    code = "invalid_edge_index"


class NotSymmetric(SpecDensError):
    code = "not_symmetric"


class NotSquare(SpecDensError):
    code = "not_square"


class KernelMismatch(SpecDensError):
    """Combinatorial kernel dimension disagrees with the computed spectrum."""

    code = "kernel_mismatch"


class NoConvergence(SpecDensError):
    code = "no_convergence"


class NoPositiveSpectrum(SpecDensError):
    code = "no_positive_spectrum"


class NotATree(SpecDensError):
    code = "not_a_tree"


class NoEdges(SpecDensError):
    code = "no_edges"


class BudgetOutOfRange(SpecDensError):
    code = "budget_out_of_range"


class BadModuli(SpecDensError):
    code = "bad_moduli"


class NotNested(SpecDensError):
    code = "not_nested"


class VoltagesNotGenerating(SpecDensError):
    code = "voltages_not_generating"


class GraphFormatError(SpecDensError):
    """Malformed graph text; carries the offending line number when known."""

    code = "graph_format_error"

    def __init__(self, message: str, line: Optional[int] = None):
        if line is None:
            super().__init__(message)
        else:
            super().__init__(message, line=line)
        self.line = line
