"""
Combinatorics of finite multigraphs: degrees, components, path metric,
spanning trees and edge deletion. Metric notions ignore edge direction.
"""

from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx
from networkx.utils import UnionFind

from ..errors import DisconnectedGraph, InvalidEdgeIndex
from ..models import GraphStats, MultiGraph
from ..utils.logging import get_logger

logger = get_logger(__name__)


def to_networkx(g: MultiGraph) -> nx.MultiGraph:
    """Undirected view of g; the key of every edge is its index in g.edges."""
    h = nx.MultiGraph()
    h.add_nodes_from(range(g.vertex_count))
    for index, (tail, head) in enumerate(g.edges):
        h.add_edge(tail, head, key=index)
    return h


def joins(forest: UnionFind, a: int, b: int) -> bool:
    """Merge the sets of a and b; False if they were already joined."""
    if forest[a] == forest[b]:
        return False
    forest.union(a, b)
    return True


def degrees(g: MultiGraph) -> List[int]:
    """Vertex degrees; a loop adds two to its vertex."""
    result = [0] * g.vertex_count
    for tail, head in g.edges:
        result[tail] += 1
        result[head] += 1
    return result


def max_degree(g: MultiGraph) -> int:
    return max(degrees(g), default=0)


def component_labels(g: MultiGraph) -> List[int]:
    """Label each vertex with the smallest vertex index of its component."""
    labels = list(range(g.vertex_count))
    for members in nx.connected_components(to_networkx(g)):
        root = min(members)
        for vertex in members:
            labels[vertex] = root
    return labels


def component_count(g: MultiGraph) -> int:
    return nx.number_connected_components(to_networkx(g))


def is_connected(g: MultiGraph) -> bool:
    return component_count(g) <= 1


def distance(g: MultiGraph, u: int, v: int) -> Optional[int]:
    """Length of a shortest undirected path from u to v; None when unreachable."""
    for vertex in (u, v):
        if not 0 <= vertex < g.vertex_count:
            raise ValueError(f"vertex {vertex} outside 0..{g.vertex_count - 1}")
    return nx.single_source_shortest_path_length(to_networkx(g), u).get(v)


def _diameter(h: nx.MultiGraph) -> Optional[int]:
    if h.number_of_nodes() <= 1:
        return 0
    if not nx.is_connected(h):
        return None
    return nx.diameter(h)


def diameter(g: MultiGraph) -> Optional[int]:
    """Largest path distance; None when the graph is disconnected."""
    return _diameter(to_networkx(g))


def stats(g: MultiGraph) -> GraphStats:
    """Degree, volume, diameter and Betti numbers of g."""
    h = to_networkx(g)
    degree_list = degrees(g)
    b0 = nx.number_connected_components(h)
    result = GraphStats(
        vertex_count=g.vertex_count,
        edge_count=g.edge_count,
        degree_per_vertex=tuple(degree_list),
        max_degree=max(degree_list, default=0),
        volume=sum(degree_list),
        diameter=_diameter(h),
        b0=b0,
        b1=g.edge_count - g.vertex_count + b0,
    )
    logger.debug(
        "Computed graph stats",
        vertices=g.vertex_count,
        edges=g.edge_count,
        b0=result.b0,
        b1=result.b1,
        diameter=result.diameter,
    )
    return result


def spanning_tree(g: MultiGraph) -> Tuple[int, ...]:
    """
    Deterministic maximal tree of a connected graph, as sorted edge indices.

    Breadth-first from vertex 0; each vertex scans its edges in index order, so a
    new vertex is reached through the lowest-index edge from its discoverer.
    Loops and parallel duplicates never enter.
    """
    if g.vertex_count == 0:
        return ()
    h = to_networkx(g)
    if not nx.is_connected(h):
        raise DisconnectedGraph(
            "spanning tree needs a connected graph", components=nx.number_connected_components(h)
        )
    return tuple(sorted(min(h[u][w]) for u, w in nx.bfs_edges(h, 0)))


def is_tree(g: MultiGraph) -> bool:
    """Connected, loop-free and |E| = |V| - 1."""
    if g.vertex_count == 0:
        return False
    if any(g.is_loop(index) for index in range(g.edge_count)):
        return False
    return g.edge_count == g.vertex_count - 1 and is_connected(g)


def _check_edge_indices(g: MultiGraph, indices: Iterable[int]) -> set:
    selected = set(indices)
    bad = sorted(index for index in selected if not 0 <= index < g.edge_count)
    if bad:
        raise InvalidEdgeIndex("edge index out of range", indices=bad, edge_count=g.edge_count)
    return selected


def delete_edges(g: MultiGraph, removed: Iterable[int]) -> Tuple[MultiGraph, Dict[int, int]]:
    """Drop the given edges; returns the subgraph and the old -> new edge index map."""
    dropped = _check_edge_indices(g, removed)
    remap: Dict[int, int] = {}
    kept: List[Tuple[int, int]] = []
    for index, edge in enumerate(g.edges):
        if index in dropped:
            continue
        remap[index] = len(kept)
        kept.append(edge)
    return MultiGraph(vertex_count=g.vertex_count, edges=tuple(kept)), remap


def edge_subgraph(g: MultiGraph, edge_indices: Sequence[int], vertices: Sequence[int]) -> MultiGraph:
    """Subgraph on the given vertices with the given edges, vertices relabelled in listed order."""
    _check_edge_indices(g, edge_indices)
    relabel = {vertex: position for position, vertex in enumerate(vertices)}
    edges = []
    for index in edge_indices:
        tail, head = g.edges[index]
        if tail not in relabel or head not in relabel:
            raise InvalidEdgeIndex("edge endpoint outside the vertex set", edge=index)
        edges.append((relabel[tail], relabel[head]))
    return MultiGraph(vertex_count=len(relabel), edges=tuple(edges))
