"""
Unit tests for graph combinatorics, the text format and the seeded generators.
"""

import pytest
from networkx.utils import UnionFind

from src.errors import DisconnectedGraph, GraphFormatError, InvalidEdgeIndex
from src.graph.core import (
    component_count,
    component_labels,
    degrees,
    delete_edges,
    diameter,
    distance,
    edge_subgraph,
    is_tree,
    joins,
    spanning_tree,
    stats,
    to_networkx,
)
from src.graph.io import dump_graph, dump_voltage_graph, parse_graph, parse_voltage_graph
from src.graph.random_graphs import (
    Xorshift64Star,
    random_connected_multigraph,
    random_edge_subset,
    random_tree,
    splitmix64,
)
from src.models import MultiGraph


def brute_force_distances(g: MultiGraph):
    """All-pairs path distances by repeated relaxation over the edge list; None when unreachable."""
    n = g.vertex_count
    dist = [[0 if u == v else None for v in range(n)] for u in range(n)]
    changed = True
    while changed:
        changed = False
        for u in range(n):
            for tail, head in g.edges:
                for a, b in ((tail, head), (head, tail)):
                    if dist[u][a] is not None and (dist[u][b] is None or dist[u][a] + 1 < dist[u][b]):
                        dist[u][b] = dist[u][a] + 1
                        changed = True
    return dist


def brute_force_component_count(g: MultiGraph) -> int:
    dist = brute_force_distances(g)
    return len({min(v for v in range(g.vertex_count) if dist[u][v] is not None) for u in range(g.vertex_count)})


class TestStats:
    """Test suite for degrees, Betti numbers and the path metric."""

    def test_triangle(self, triangle):
        st = stats(triangle)

        assert st.vertex_count == 3
        assert st.edge_count == 3
        assert st.max_degree == 2
        assert st.volume == 6
        assert st.diameter == 1
        assert (st.b0, st.b1) == (1, 1)

    def test_loop_counts_twice(self, single_loop):
        """Test a loop contributes two to its vertex degree."""
        st = stats(single_loop)

        assert st.degree_per_vertex == (2,)
        assert st.max_degree == 2
        assert st.volume == 2
        assert st.diameter == 0
        assert (st.b0, st.b1) == (1, 1)

    def test_parallel_edges(self):
        g = MultiGraph(vertex_count=2, edges=((0, 1), (1, 0), (0, 1)))
        st = stats(g)

        assert st.degree_per_vertex == (3, 3)
        assert st.b1 == 2
        assert st.diameter == 1

    def test_disconnected(self):
        g = MultiGraph(vertex_count=4, edges=((0, 1), (2, 3)))
        st = stats(g)

        assert st.diameter is None
        assert st.b0 == 2
        assert not st.connected
        assert component_labels(g) == [0, 0, 2, 2]

    def test_empty_and_single_vertex(self):
        assert stats(MultiGraph(vertex_count=0)).b0 == 0
        single = stats(MultiGraph(vertex_count=1))
        assert single.diameter == 0
        assert single.b0 == 1

    def test_path_distances(self, path3):
        assert distance(path3, 0, 2) == 2
        assert distance(path3, 1, 1) == 0
        assert diameter(path3) == 2
        with pytest.raises(ValueError):
            distance(path3, 0, 3)

    def test_unreachable_distance(self):
        g = MultiGraph(vertex_count=3, edges=((0, 1),))
        assert distance(g, 0, 2) is None

    def test_against_brute_force(self):
        """Test the metric, components and degrees on random multigraphs and edge-deleted subgraphs."""
        rng = Xorshift64Star(7)
        for _ in range(50):
            whole = random_connected_multigraph(rng, max_vertices=9, max_edges=16)
            smaller, _ = delete_edges(whole, random_edge_subset(rng, whole))
            for g in (whole, smaller):
                dist = brute_force_distances(g)
                expected_degrees = [sum((t == v) + (h == v) for t, h in g.edges) for v in range(g.vertex_count)]
                assert degrees(g) == expected_degrees
                assert component_count(g) == brute_force_component_count(g)
                assert distance(g, 0, g.vertex_count - 1) == dist[0][g.vertex_count - 1]
                if component_count(g) == 1:
                    assert diameter(g) == max(max(row) for row in dist)
                else:
                    assert diameter(g) is None

    def test_networkx_view_keys_edges_by_index(self):
        g = MultiGraph(vertex_count=2, edges=((0, 1), (1, 1), (1, 0)))
        h = to_networkx(g)
        assert sorted(h.edges(keys=True)) == [(0, 1, 0), (0, 1, 2), (1, 1, 1)]


class TestSpanningTree:
    """Test suite for the deterministic maximal tree."""

    def test_triangle_is_breadth_first(self, triangle):
        """Test vertex 0 reaches both neighbours directly through edges 0 and 2."""
        assert spanning_tree(triangle) == (0, 2)

    def test_breadth_first_differs_from_index_order(self):
        """Test the tree grows from vertex 0 even when a lower-index edge avoids it."""
        g = MultiGraph(vertex_count=3, edges=((1, 2), (0, 1), (0, 2)))
        assert spanning_tree(g) == (1, 2)

    def test_lowest_index_parallel_edge_wins(self):
        g = MultiGraph(vertex_count=2, edges=((1, 0), (0, 1), (0, 1)))
        assert spanning_tree(g) == (0,)

    def test_skips_loops_and_parallels(self):
        g = MultiGraph(vertex_count=3, edges=((0, 0), (0, 1), (1, 0), (2, 1)))
        assert spanning_tree(g) == (1, 3)

    def test_disconnected_raises(self):
        with pytest.raises(DisconnectedGraph):
            spanning_tree(MultiGraph(vertex_count=2))

    def test_random_trees_are_trees(self):
        rng = Xorshift64Star(11)
        for _ in range(50):
            g = random_connected_multigraph(rng)
            tree = spanning_tree(g)
            assert len(tree) == g.vertex_count - 1
            assert is_tree(edge_subgraph(g, tree, range(g.vertex_count)))

    def test_tree_keeps_distances_from_vertex_zero(self):
        """Test a breadth-first tree is a shortest-path tree for vertex 0."""
        rng = Xorshift64Star(19)
        for _ in range(50):
            g = random_connected_multigraph(rng, max_vertices=12, max_edges=30)
            tree = edge_subgraph(g, spanning_tree(g), range(g.vertex_count))
            assert brute_force_distances(tree)[0] == brute_force_distances(g)[0]


class TestEdgeOperations:
    """Test suite for edge deletion and subgraphs."""

    def test_delete_edges(self, square):
        smaller, remap = delete_edges(square, {1})

        assert smaller.edges == ((0, 1), (2, 3), (3, 0))
        assert remap == {0: 0, 2: 1, 3: 2}

    def test_delete_rejects_bad_index(self, square):
        with pytest.raises(InvalidEdgeIndex):
            delete_edges(square, {4})

    def test_edge_subgraph_relabels(self, square):
        sub = edge_subgraph(square, (1, 2), (1, 2, 3))
        assert sub.vertex_count == 3
        assert sub.edges == ((0, 1), (1, 2))

    def test_edge_subgraph_needs_endpoints(self, square):
        with pytest.raises(InvalidEdgeIndex):
            edge_subgraph(square, (0,), (0,))

    def test_is_tree(self, path3, triangle, single_loop):
        assert is_tree(path3)
        assert not is_tree(triangle)
        assert not is_tree(single_loop)
        assert is_tree(MultiGraph(vertex_count=1))

    def test_joins(self):
        forest = UnionFind(range(4))
        assert joins(forest, 3, 1)
        assert not joins(forest, 1, 3)
        assert forest[3] == forest[1]
        assert len(list(forest.to_sets())) == 3


class TestGraphText:
    """Test suite for the graph text format."""

    def test_parse_with_comments(self):
        g = parse_graph("# triangle\nvertices 3\n\nedge 0 1\nedge 1 2\nedge 2 0\n")
        assert g.vertex_count == 3
        assert g.edges == ((0, 1), (1, 2), (2, 0))

    def test_dump_then_parse(self, triangle):
        assert parse_graph(dump_graph(triangle, comment="C3")) == triangle

    def test_voltage_graph(self, torus_voltage_graph):
        text = dump_voltage_graph(torus_voltage_graph)
        assert "rank 2" in text
        assert parse_voltage_graph(text) == torus_voltage_graph

    @pytest.mark.parametrize(
        "text, line",
        [
            ("vertices 2\nedge 0 2\n", 2),
            ("vertices 2\nedge 0 x\n", 2),
            ("edge 0 1\n", 1),
            ("vertices 2\nnode 0\n", 2),
            ("vertices 1\nvertices 1\n", 2),
        ],
    )
    def test_errors_carry_line(self, text, line):
        with pytest.raises(GraphFormatError) as exc_info:
            parse_graph(text)
        assert exc_info.value.line == line

    def test_missing_header(self):
        with pytest.raises(GraphFormatError):
            parse_graph("# nothing\n")

    def test_voltage_graph_needs_rank(self):
        with pytest.raises(GraphFormatError):
            parse_voltage_graph("vertices 1\nedge 0 0 1\n")

    def test_rank_after_edge_rejected(self):
        with pytest.raises(GraphFormatError):
            parse_voltage_graph("vertices 1\nedge 0 0 1\nrank 1\n")

    def test_wrong_voltage_length(self):
        with pytest.raises(GraphFormatError) as exc_info:
            parse_voltage_graph("vertices 1\nrank 2\nedge 0 0 1\n")
        assert exc_info.value.line == 3


class TestRandomGraphs:
    """Test suite for the seeded generators."""

    def test_splitmix_reference_value(self):
        assert splitmix64(0) == 0xE220A8397B1DCDAF

    def test_same_seed_same_stream(self):
        a, b = Xorshift64Star(42), Xorshift64Star(42)
        assert [a.next_u64() for _ in range(10)] == [b.next_u64() for _ in range(10)]
        assert Xorshift64Star(1).next_u64() != Xorshift64Star(2).next_u64()

    def test_randbelow_range(self):
        rng = Xorshift64Star(3)
        values = [rng.randbelow(5) for _ in range(500)]
        assert set(values) == {0, 1, 2, 3, 4}
        with pytest.raises(ValueError):
            rng.randbelow(0)

    def test_random_unit_interval(self):
        rng = Xorshift64Star(5)
        assert all(0.0 <= rng.random() < 1.0 for _ in range(200))

    def test_connected_multigraphs(self):
        rng = Xorshift64Star(9)
        for _ in range(100):
            g = random_connected_multigraph(rng, max_vertices=8, max_edges=20)
            assert 1 <= g.vertex_count <= 8
            assert g.edge_count <= max(20, g.vertex_count - 1)
            assert component_count(g) == 1

    def test_random_trees(self):
        rng = Xorshift64Star(13)
        for _ in range(100):
            t = random_tree(rng, max_edges=12)
            assert is_tree(t)
            assert 1 <= t.edge_count <= 12

    def test_edge_subset(self, square):
        rng = Xorshift64Star(17)
        subsets = [random_edge_subset(rng, square) for _ in range(50)]
        assert all(s <= {0, 1, 2, 3} for s in subsets)
        assert len({frozenset(s) for s in subsets}) > 1


if __name__ == "__main__":
    pytest.main([__file__])
