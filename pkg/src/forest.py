"""
Splitting a finite tree into a forest of small trees.

From a fixed leaf v, repeatedly cut the edge e farthest from v whose far side
T' still has at least P/deg(T) edges, emit T' as the next piece and continue
on the side containing v, until P > (|E(T'')| - 1) * deg(T). deg(T) stays the
degree of the original tree throughout.

The edge-to-vertex distance is the distance from v to the nearer endpoint;
ties go to the smaller edge index.
"""

import math
from typing import Dict, List, Set

import networkx as nx

from .errors import BudgetOutOfRange, NoEdges, NotATree
from .graph.core import degrees, is_tree, max_degree
from .models import ForestSplit, MultiGraph
from .utils.logging import get_logger

logger = get_logger(__name__)


def leaf_of(t: MultiGraph) -> int:
    """Smallest-index vertex of degree one."""
    if not is_tree(t):
        raise NotATree("leaf_of needs a tree", vertices=t.vertex_count, edges=t.edge_count)
    if t.edge_count == 0:
        raise NoEdges("a single vertex has no leaf")
    return degrees(t).index(1)


def budget_aligned(t: MultiGraph, p: float) -> bool:
    """True when deg(T) divides P; the piece bound |E(T_i)| <= P is guaranteed then."""
    deg = max_degree(t)
    return deg > 0 and float(p).is_integer() and int(p) % deg == 0


def _current_tree(t: MultiGraph, current_edges: Set[int]) -> nx.Graph:
    h = nx.Graph()
    for index in sorted(current_edges):
        tail, head = t.edges[index]
        h.add_edge(tail, head, index=index)
    return h


def _cut_farthest(h: nx.Graph, root: int, p: float, deg: int):
    """Root h at `root`; return (edge, piece edges, piece vertices) for the farthest edge with property (P)."""
    rooted = nx.bfs_tree(h, root)
    depth = nx.single_source_shortest_path_length(h, root)

    best = None
    for parent, child in rooted.edges():
        below = nx.descendants(rooted, child)
        if p <= len(below) * deg:
            key = (-depth[parent], h[parent][child]["index"])
            if best is None or key < best[0]:
                best = (key, parent, child, below)
    if best is None:
        raise BudgetOutOfRange("no edge satisfies the budget", budget=p)
    _, parent, child, below = best

    vertices = {child, *below}
    piece_edges = [index for _, _, index in h.subgraph(vertices).edges(data="index")]
    return h[parent][child]["index"], piece_edges, vertices


def split_tree(t: MultiGraph, p: float) -> ForestSplit:
    """Remove edges from the tree t so that every remaining piece is small relative to the budget p."""
    if not is_tree(t):
        raise NotATree("split_tree needs a tree", vertices=t.vertex_count, edges=t.edge_count)
    deg = max_degree(t)
    limit = (t.edge_count - 1) * deg
    if not (0 < p <= limit):
        raise BudgetOutOfRange("budget must satisfy 0 < P <= (|E|-1)*deg", budget=p, limit=limit)

    current_edges = set(range(t.edge_count))
    current_vertices = set(range(t.vertex_count))
    v = leaf_of(t)
    removed: List[int] = []
    pieces: List[tuple] = []
    piece_vertices: List[tuple] = []

    while p <= (len(current_edges) - 1) * deg:
        h = _current_tree(t, current_edges)
        if v not in h or h.degree(v) != 1:
            v = min(u for u in h if h.degree(u) == 1)
        cut, edges, vertices = _cut_farthest(h, v, p, deg)
        removed.append(cut)
        pieces.append(tuple(sorted(edges)))
        piece_vertices.append(tuple(sorted(vertices)))
        current_edges.difference_update(edges)
        current_edges.discard(cut)
        current_vertices.difference_update(vertices)

    pieces.append(tuple(sorted(current_edges)))
    piece_vertices.append(tuple(sorted(current_vertices)))

    split = ForestSplit(
        removed_edges=tuple(removed),
        components=tuple(pieces),
        component_vertices=tuple(piece_vertices),
        piece_count=len(pieces),
        budget=p,
        base_degree=deg,
    )
    logger.debug("Split tree", edges=t.edge_count, budget=p, degree=deg, pieces=split.piece_count)
    return split


def check_split(t: MultiGraph, split: ForestSplit) -> Dict[str, bool]:
    """
    Recount every invariant of a split from scratch.

    Keys: partition, trees, upper_bound (|E(T_i)| <= P), relaxed_upper_bound,
    count_bound (k <= |E| deg / P + 1) and lower_bound (|E(T_i)| >= P / deg for i < k).
    """
    p, deg, k = split.budget, split.base_degree, split.piece_count
    all_edges = [*split.removed_edges, *(e for piece in split.components for e in piece)]
    all_vertices = [v for piece in split.component_vertices for v in piece]
    partition = (
        sorted(all_edges) == list(range(t.edge_count))
        and sorted(all_vertices) == list(range(t.vertex_count))
    )

    trees = True
    for edges, vertices in zip(split.components, split.component_vertices):
        members = set(vertices)
        if not members or any(not set(t.edges[edge]) <= members for edge in edges):
            trees = False
            break
        graph = nx.MultiGraph()
        graph.add_nodes_from(members)
        graph.add_edges_from(t.edges[edge] for edge in edges)
        if not nx.is_tree(graph):
            trees = False

    sizes = [len(piece) for piece in split.components]
    ceiling = math.ceil(p / deg) if deg else 0
    relaxed = all(size <= (deg - 1) * ceiling for size in sizes[:-1]) and (sizes[-1] - 1) * deg < p

    return {
        "partition": partition,
        "trees": trees,
        "upper_bound": all(size <= p for size in sizes),
        "relaxed_upper_bound": relaxed,
        "count_bound": 1 <= k and (k - 1) * p <= t.edge_count * deg,
        "lower_bound": all(p <= size * deg for size in sizes[:-1]),
    }
