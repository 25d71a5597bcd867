"""
Unit tests for data models.
Tests validation and derived properties of the immutable value types.
"""

import math

import pytest
from pydantic import ValidationError

from src.models import (
    BoundReport,
    ForestSplit,
    GraphStats,
    MultiGraph,
    Spectrum,
    StepFunction,
    TowerLevel,
    TowerReport,
    VoltageGraph,
)


class TestMultiGraph:
    """Test suite for MultiGraph."""

    def test_valid_graph(self):
        """Test loops and parallel edges are accepted."""
        g = MultiGraph(vertex_count=2, edges=((0, 1), (0, 1), (1, 1)))

        assert g.edge_count == 3
        assert g.edges[0] == (0, 1)
        assert g.is_loop(2)
        assert not g.is_loop(1)

    def test_endpoint_out_of_range(self):
        """Test endpoints must be vertex indices."""
        with pytest.raises(ValidationError):
            MultiGraph(vertex_count=2, edges=((0, 2),))

    def test_negative_vertex_count(self):
        with pytest.raises(ValidationError):
            MultiGraph(vertex_count=-1)

    def test_frozen(self, triangle):
        """Test graphs are immutable."""
        with pytest.raises(ValidationError):
            triangle.vertex_count = 5


class TestGraphStats:
    """Test suite for GraphStats identities."""

    def test_handshaking_enforced(self):
        with pytest.raises(ValidationError):
            GraphStats(
                vertex_count=2, edge_count=1, degree_per_vertex=(1, 2),
                max_degree=2, volume=3, diameter=1, b0=1, b1=0,
            )

    def test_euler_characteristic_enforced(self):
        with pytest.raises(ValidationError):
            GraphStats(
                vertex_count=2, edge_count=1, degree_per_vertex=(1, 1),
                max_degree=1, volume=2, diameter=1, b0=1, b1=1,
            )

    def test_disconnected_has_no_diameter(self):
        st = GraphStats(
            vertex_count=2, edge_count=0, degree_per_vertex=(0, 0),
            max_degree=0, volume=0, diameter=None, b0=2, b1=0,
        )
        assert not st.connected


class TestSpectrum:
    """Test suite for Spectrum layout rules."""

    def test_positive_part(self):
        spectrum = Spectrum(values=(0.0, 1.0, 3.0), zero_count=1)
        assert spectrum.positive == (1.0, 3.0)

    def test_kernel_must_be_exact_zero(self):
        with pytest.raises(ValidationError):
            Spectrum(values=(1e-15, 1.0), zero_count=1)

    def test_values_after_kernel_positive(self):
        with pytest.raises(ValidationError):
            Spectrum(values=(0.0, 0.0), zero_count=1)

    def test_sorted(self):
        with pytest.raises(ValidationError):
            Spectrum(values=(2.0, 1.0), zero_count=0)


class TestStepFunction:
    """Test suite for StepFunction evaluation."""

    def test_closed_evaluation(self):
        """Test a jump at t counts for lam >= t."""
        step = StepFunction(jump_points=(1.0, 2.0), values=(1, 2, 4))

        assert step(0.0) == 1
        assert step(0.999) == 1
        assert step(1.0) == 2
        assert step(2.0) == 4
        assert step(100.0) == 4
        assert step.gap(2.5) == 3
        assert step.at_zero == 1
        assert step.final_value == 4

    def test_jump_at_zero_counts_at_zero(self):
        step = StepFunction(jump_points=(0.0,), values=(0, 1))
        assert step.at_zero == 1
        assert step.gap(5.0) == 0

    def test_normalized_gap(self):
        step = StepFunction(jump_points=(0.5,), values=(0, 3), denominator=4)
        assert step.normalized_gap(1.0) == pytest.approx(0.75)

    def test_negative_argument(self):
        with pytest.raises(ValueError):
            StepFunction()(-0.1)

    def test_rejects_decreasing(self):
        with pytest.raises(ValidationError):
            StepFunction(jump_points=(1.0,), values=(2, 1))

    def test_rejects_value_count_mismatch(self):
        with pytest.raises(ValidationError):
            StepFunction(jump_points=(1.0,), values=(0,))


class TestReports:
    """Test suite for report and split models."""

    def test_bound_report_columns(self):
        with pytest.raises(ValidationError):
            BoundReport(
                edge_count=1, max_degree=1, connected=True,
                lambda_grid=(0.0, 0.5), sdf_gap=(0,), bound=(0.0, 1.0),
                regimes=("zero", "linear"),
                fine_zero_threshold=0.7, fine_linear_threshold=math.inf,
            )

    def test_forest_split_removes_k_minus_one(self):
        with pytest.raises(ValidationError):
            ForestSplit(
                removed_edges=(), components=((0,), (1,)), component_vertices=((0, 1), (2,)),
                piece_count=2, budget=1.0, base_degree=2,
            )

    def test_voltage_lengths(self, single_loop):
        with pytest.raises(ValidationError):
            VoltageGraph(base=single_loop, rank=2, voltages=((1,),))

    def test_tower_level_sheets(self, single_loop):
        cover = MultiGraph(vertex_count=2, edges=((0, 1), (1, 0)))
        profile = StepFunction(jump_points=(2.0,), values=(1, 2), denominator=3)
        with pytest.raises(ValidationError):
            TowerLevel(
                moduli=(2,), sheets=2, cover=cover, max_degree=2, components=1,
                normalized_log_det=0.0, density_log_det=0.0, sdf_gap_profile=profile,
            )

    def test_tower_report_keeps_base_degree(self, single_loop):
        """Test a level must have the degree of its base: a loop gives 2-regular covers."""
        base = VoltageGraph(base=single_loop, rank=1, voltages=((1,),))
        cover = MultiGraph(vertex_count=2, edges=((0, 1), (1, 0)))
        profile = StepFunction(jump_points=(2.0,), values=(1, 2), denominator=2)

        def report(max_degree):
            level = TowerLevel(
                moduli=(2,), sheets=2, cover=cover, max_degree=max_degree, components=1,
                normalized_log_det=math.log(2.0) / 2.0, density_log_det=math.log(2.0) / 2.0,
                sdf_gap_profile=profile,
            )
            return TowerReport(
                base=base, levels=(level,), oracle_limit=0.0,
                uniform_constant=4.0, density_cutoff=2.0, majorant_integral=0.0,
            )

        assert report(2).levels[0].max_degree == 2
        with pytest.raises(ValidationError):
            report(4)


if __name__ == "__main__":
    pytest.main([__file__])
