"""Finite multigraphs: combinatorics, text format and seeded generators."""

from .core import (
    component_count,
    degrees,
    delete_edges,
    diameter,
    distance,
    edge_subgraph,
    is_connected,
    is_tree,
    max_degree,
    spanning_tree,
    stats,
    to_networkx,
)

__all__ = [
    "component_count",
    "degrees",
    "delete_edges",
    "diameter",
    "distance",
    "edge_subgraph",
    "is_connected",
    "is_tree",
    "max_degree",
    "spanning_tree",
    "stats",
    "to_networkx",
]
