"""
Data models for the spectral density toolkit.
Graphs, spectra, step functions and verification reports are immutable pydantic values.
"""

import math
from bisect import bisect_right
from collections import Counter
from typing import List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


Edge = Tuple[int, int]
Regime = Literal["zero", "silent", "linear"]


class MultiGraph(BaseModel):
    """Finite directed multigraph; loops and parallel edges allowed, edge identity is the list index."""
    model_config = ConfigDict(frozen=True)

    vertex_count: int = Field(..., ge=0, description="Number of vertices, indexed 0..n-1")
    edges: Tuple[Edge, ...] = Field(default=(), description="(tail, head) pairs in stable order")

    @model_validator(mode="after")
    def validate_endpoints(self):
        """Ensure every endpoint is a valid vertex index."""
        for index, (tail, head) in enumerate(self.edges):
            if not (0 <= tail < self.vertex_count and 0 <= head < self.vertex_count):
                raise ValueError(
                    f"edge {index} ({tail}->{head}) has an endpoint outside 0..{self.vertex_count - 1}"
                )
        return self

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def is_loop(self, edge: int) -> bool:
        tail, head = self.edges[edge]
        return tail == head


class GraphStats(BaseModel):
    """Combinatorial quantities of a multigraph."""
    model_config = ConfigDict(frozen=True)

    vertex_count: int = Field(..., ge=0)
    edge_count: int = Field(..., ge=0)
    degree_per_vertex: Tuple[int, ...] = Field(..., description="Vertex degrees, loops counted twice")
    max_degree: int = Field(..., ge=0, description="deg(X)")
    volume: int = Field(..., ge=0, description="vol(X), sum of degrees")
    diameter: Optional[int] = Field(..., ge=0, description="Path-metric diameter; None when disconnected")
    b0: int = Field(..., ge=0, description="Number of connected components")
    b1: int = Field(..., ge=0, description="Number of independent cycles")

    @model_validator(mode="after")
    def validate_identities(self):
        """Handshaking, Euler characteristic and the diameter bound."""
        if self.volume != sum(self.degree_per_vertex):
            raise ValueError("volume must equal the sum of degrees")
        if self.volume != 2 * self.edge_count:
            raise ValueError("handshaking violated: volume != 2 * edge_count")
        if self.b1 - self.b0 != self.edge_count - self.vertex_count:
            raise ValueError("Euler characteristic violated: b1 - b0 != |E| - |V|")
        if self.diameter is not None and self.diameter > max(self.edge_count, 0):
            raise ValueError("diameter of a connected graph cannot exceed |E|")
        return self

    @property
    def connected(self) -> bool:
        return self.b0 <= 1


class Spectrum(BaseModel):
    """Ascending eigenvalue (or singular value) list with an exact-zero prefix."""
    model_config = ConfigDict(frozen=True)

    values: Tuple[float, ...] = Field(default=())
    zero_count: int = Field(default=0, ge=0)

    @model_validator(mode="after")
    def validate_layout(self):
        """Sorted ascending, exact zeros first, strictly positive afterwards."""
        if self.zero_count > len(self.values):
            raise ValueError("zero_count exceeds number of values")
        if any(value != 0.0 for value in self.values[:self.zero_count]):
            raise ValueError("snapped kernel entries must be exactly zero")
        if any(value <= 0.0 for value in self.values[self.zero_count:]):
            raise ValueError("values after the kernel must be strictly positive")
        if any(a > b for a, b in zip(self.values, self.values[1:])):
            raise ValueError("values must be sorted ascending")
        return self

    @property
    def positive(self) -> Tuple[float, ...]:
        return self.values[self.zero_count:]


class StepFunction(BaseModel):
    """
    Right-continuous nondecreasing integer step function on [0, inf).

    ``values[i]`` is the value on [jump_points[i-1], jump_points[i]); ``values[0]``
    holds before the first jump. Evaluation is closed: a jump at t counts for lam >= t.
    ``denominator`` normalises per sheet in covering towers (1 for a single graph).
    """
    model_config = ConfigDict(frozen=True)

    jump_points: Tuple[float, ...] = Field(default=())
    values: Tuple[int, ...] = Field(default=(0,))
    denominator: int = Field(default=1, ge=1)

    @model_validator(mode="after")
    def validate_steps(self):
        if len(self.values) != len(self.jump_points) + 1:
            raise ValueError("need exactly one value per interval")
        if any(point < 0.0 for point in self.jump_points):
            raise ValueError("jump points must be nonnegative")
        if any(a >= b for a, b in zip(self.jump_points, self.jump_points[1:])):
            raise ValueError("jump points must be strictly increasing")
        if any(a > b for a, b in zip(self.values, self.values[1:])):
            raise ValueError("step function must be nondecreasing")
        return self

    def evaluate(self, lam: float) -> int:
        """Value at lam (closed comparison at jump points)."""
        if lam < 0:
            raise ValueError("step functions are defined on [0, inf)")
        return self.values[bisect_right(self.jump_points, lam)]

    def __call__(self, lam: float) -> int:
        return self.evaluate(lam)

    def gap(self, lam: float) -> int:
        """F(lam) - F(0)."""
        return self.evaluate(lam) - self.evaluate(0.0)

    def normalized_gap(self, lam: float) -> float:
        return self.gap(lam) / self.denominator

    @property
    def at_zero(self) -> int:
        return self.evaluate(0.0)

    @property
    def final_value(self) -> int:
        return self.values[-1]


class BoundViolation(BaseModel):
    """One failed sample of the first spectral density estimate."""
    model_config = ConfigDict(frozen=True)

    lam: float
    gap: int
    bound: float
    assertion: Literal["linear_bound", "zero_regime", "unit_interval"]


class BoundReport(BaseModel):
    """Point-by-point outcome of the first spectral density estimate for one graph."""
    model_config = ConfigDict(frozen=True)

    edge_count: int = Field(..., ge=0)
    max_degree: int = Field(..., ge=0)
    connected: bool
    lambda_grid: Tuple[float, ...]
    sdf_gap: Tuple[int, ...]
    bound: Tuple[float, ...]
    regimes: Tuple[Regime, ...]
    fine_zero_threshold: float = Field(..., description="1/(sqrt(2)*|E|), inf when |E| = 0")
    fine_linear_threshold: float = Field(..., description="1/(2*(|E|-1)*deg), inf when |E| <= 1")
    violations: Tuple[BoundViolation, ...] = Field(default=())

    @model_validator(mode="after")
    def validate_columns(self):
        size = len(self.lambda_grid)
        if not (len(self.sdf_gap) == len(self.bound) == len(self.regimes) == size):
            raise ValueError("grid columns must have equal length")
        return self

    @property
    def passed(self) -> bool:
        return not self.violations

    def violated_at(self, index: int) -> bool:
        lam = self.lambda_grid[index]
        return any(violation.lam == lam for violation in self.violations)


class ForestSplit(BaseModel):
    """Result of splitting a tree into a forest of bounded pieces."""
    model_config = ConfigDict(frozen=True)

    removed_edges: Tuple[int, ...] = Field(..., description="Removed edge indices in removal order")
    components: Tuple[Tuple[int, ...], ...] = Field(..., description="Edge sets of T_1..T_k")
    component_vertices: Tuple[Tuple[int, ...], ...] = Field(..., description="Vertex sets of T_1..T_k")
    piece_count: int = Field(..., ge=1)
    budget: float = Field(..., gt=0)
    base_degree: int = Field(..., ge=0)

    @model_validator(mode="after")
    def validate_shape(self):
        if self.piece_count != len(self.components) or self.piece_count != len(self.component_vertices):
            raise ValueError("piece_count must match the number of components")
        if len(self.removed_edges) != self.piece_count - 1:
            raise ValueError("a split into k pieces removes exactly k - 1 edges")
        return self


class ProofTrace(BaseModel):
    """Replay of the spanning-tree and splitting argument at one lambda."""
    model_config = ConfigDict(frozen=True)

    lam: float
    budget: float
    spanning_tree: Tuple[int, ...]
    split: ForestSplit
    gap_graph: int
    gap_tree: int
    gap_pieces: int
    tree_bound: float

    @property
    def chain_holds(self) -> bool:
        """gap(X) <= gap(T) <= sum gap(T_i) + (k - 1) and k - 1 <= 2|E(T)|deg(T)lam."""
        k_minus_one = self.split.piece_count - 1
        return (
            self.gap_graph <= self.gap_tree <= self.gap_pieces + k_minus_one
            and k_minus_one <= self.tree_bound
        )


class VoltageGraph(BaseModel):
    """Base multigraph with a Z^d voltage per edge."""
    model_config = ConfigDict(frozen=True)

    base: MultiGraph
    rank: int = Field(..., ge=1)
    voltages: Tuple[Tuple[int, ...], ...]

    @model_validator(mode="after")
    def validate_voltages(self):
        if len(self.voltages) != self.base.edge_count:
            raise ValueError("need exactly one voltage per base edge")
        if any(len(voltage) != self.rank for voltage in self.voltages):
            raise ValueError(f"every voltage must have length {self.rank}")
        return self


class TowerLevel(BaseModel):
    """One finite quotient X_i of the covering tower."""
    model_config = ConfigDict(frozen=True)

    moduli: Tuple[int, ...]
    sheets: int = Field(..., ge=1)
    cover: MultiGraph
    max_degree: int = Field(..., ge=0)
    components: int = Field(..., ge=0)
    normalized_log_det: float
    density_log_det: float = Field(..., description="Normalised log-determinant rebuilt from the density integral")
    sdf_gap_profile: StepFunction

    @field_validator("moduli")
    @classmethod
    def validate_moduli(cls, v):
        if not v or any(n < 1 for n in v):
            raise ValueError("moduli must be positive")
        return v

    @model_validator(mode="after")
    def validate_sheets(self):
        if self.sheets != math.prod(self.moduli):
            raise ValueError("sheets must equal the product of the moduli")
        if self.sdf_gap_profile.denominator != self.sheets:
            raise ValueError("profile must be normalised by the sheet count")
        return self


class UniformViolation(BaseModel):
    """Failed sample of the level-independent estimate."""
    model_config = ConfigDict(frozen=True)

    sheets: int
    lam: float
    normalized_gap: float
    bound: float


class TowerReport(BaseModel):
    """Per-level log-determinants and density profiles against the L2 oracle."""
    model_config = ConfigDict(frozen=True)

    base: VoltageGraph
    levels: Tuple[TowerLevel, ...]
    oracle_limit: float
    uniform_constant: float = Field(..., description="C = 2 * |E(base)| * deg(base)")
    density_cutoff: float = Field(..., description="K = sqrt(2 * deg(base)), bounds every singular value")
    majorant_integral: float
    grid_size: int = Field(default=512, ge=1, description="Uniform lambda samples for the uniform estimate")

    @model_validator(mode="after")
    def validate_levels(self):
        base = self.base.base
        endpoint_counts = Counter(vertex for edge in base.edges for vertex in edge)
        base_degree = max(endpoint_counts.values(), default=0)
        sheets = [level.sheets for level in self.levels]
        if sheets != sorted(sheets):
            raise ValueError("levels must be ordered by sheet count")
        for level in self.levels:
            if level.cover.vertex_count != level.sheets * base.vertex_count:
                raise ValueError("cover must have N * |V(base)| vertices")
            if level.cover.edge_count != level.sheets * base.edge_count:
                raise ValueError("cover must have N * |E(base)| edges")
            if level.max_degree != base_degree:
                raise ValueError("a covering keeps the degree of its base")
            cover_counts = Counter(vertex for edge in level.cover.edges for vertex in edge)
            if max(cover_counts.values(), default=0) != level.max_degree:
                raise ValueError("max_degree must be the degree of the cover")
        return self

    def abs_errors(self) -> List[float]:
        return [abs(level.normalized_log_det - self.oracle_limit) for level in self.levels]
