#!/usr/bin/env python3
"""
Generate example graph files for the spectral density toolkit.
Writes the fixed acceptance graphs plus a seeded batch of random multigraphs and trees.
"""

import argparse
import os
import sys
from pathlib import Path

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from src.graph.io import dump_graph, dump_voltage_graph
from src.graph.random_graphs import Xorshift64Star, random_connected_multigraph, random_tree
from src.models import MultiGraph, VoltageGraph

DEFAULT_OUTPUT = Path(__file__).resolve().parent.parent / "data" / "graphs"


def fixed_graphs():
    """Small graphs with hand-checkable spectra."""
    return {
        "triangle.g": (MultiGraph(vertex_count=3, edges=((0, 1), (1, 2), (2, 0))), "C3, spectrum 0,3,3"),
        "path3.g": (MultiGraph(vertex_count=3, edges=((0, 1), (1, 2))), "path on 3 vertices, spectrum 0,1,3"),
        "path5.g": (
            MultiGraph(vertex_count=5, edges=((0, 1), (1, 2), (2, 3), (3, 4))),
            "path on 5 vertices, split with --budget 2",
        ),
        "star3.g": (MultiGraph(vertex_count=4, edges=((0, 1), (0, 2), (0, 3))), "K_{1,3}, spectrum 0,1,1,4"),
        "square.g": (MultiGraph(vertex_count=4, edges=((0, 1), (1, 2), (2, 3), (3, 0))), "C4, spectrum 0,2,2,4"),
    }


def fixed_voltage_graphs():
    """Base graphs of the acceptance towers."""
    loop = MultiGraph(vertex_count=1, edges=((0, 0),))
    bouquet = MultiGraph(vertex_count=1, edges=((0, 0), (0, 0)))
    return {
        "loop.g": (VoltageGraph(base=loop, rank=1, voltages=((1,),)), "Z-cover is the integer line"),
        "torus.g": (
            VoltageGraph(base=bouquet, rank=2, voltages=((1, 0), (0, 1))),
            "Z^2-cover is the square grid",
        ),
    }


def save_example_graphs(output: Path, count: int, seed: int) -> bool:
    """Write every example file into output."""
    try:
        output.mkdir(parents=True, exist_ok=True)
        written = 0

        for name, (graph, comment) in fixed_graphs().items():
            (output / name).write_text(dump_graph(graph, comment), encoding="ascii", newline="\n")
            written += 1
        for name, (vg, comment) in fixed_voltage_graphs().items():
            (output / name).write_text(dump_voltage_graph(vg, comment), encoding="ascii", newline="\n")
            written += 1

        rng = Xorshift64Star(seed)
        for index in range(count):
            graph = random_connected_multigraph(rng)
            comment = f"random connected multigraph {index}, seed {seed}"
            (output / f"random_{index:03d}.g").write_text(dump_graph(graph, comment), encoding="ascii", newline="\n")
            tree = random_tree(rng)
            comment = f"random tree {index}, seed {seed}"
            (output / f"tree_{index:03d}.g").write_text(dump_graph(tree, comment), encoding="ascii", newline="\n")
            written += 2

        print(f"✅ Generated {written} graph files")
        print(f"📁 Saved to: {output}")
        return True

    except OSError as e:
        print(f"❌ Error generating example graphs: {e}")
        return False


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--output", type=Path, default=DEFAULT_OUTPUT)
    parser.add_argument("--count", type=int, default=10)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    print("🚀 Generating example graphs...")
    success = save_example_graphs(args.output, args.count, args.seed)
    sys.exit(0 if success else 1)
