"""
Seeded random graphs for the verification suites.

All randomness comes from Xorshift64Star so that a seed reproduces the same
suite in every implementation: state is the splitmix64 image of the seed,
each step is x ^= x >> 12; x ^= x << 25; x ^= x >> 27 and the output is
x * 0x2545F4914F6CDD1D (mod 2^64).
"""

from typing import List, Set, Tuple

from ..models import MultiGraph

MASK64 = (1 << 64) - 1
XORSHIFT_MULTIPLIER = 0x2545F4914F6CDD1D


def splitmix64(value: int) -> int:
    z = (value + 0x9E3779B97F4A7C15) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


class Xorshift64Star:
    """64-bit xorshift* generator."""

    def __init__(self, seed: int = 0):
        state = splitmix64(seed & MASK64)
        self.state = state or 0x9E3779B97F4A7C15

    def next_u64(self) -> int:
        x = self.state
        x ^= x >> 12
        x ^= (x << 25) & MASK64
        x ^= x >> 27
        self.state = x
        return (x * XORSHIFT_MULTIPLIER) & MASK64

    def randbelow(self, n: int) -> int:
        """Uniform integer in [0, n) by rejection."""
        if n <= 0:
            raise ValueError("randbelow needs a positive bound")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            value = self.next_u64()
            if value < limit:
                return value % n

    def random(self) -> float:
        """Uniform float in [0, 1) with 53 random bits."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.randbelow(i + 1)
            items[i], items[j] = items[j], items[i]


def _orient(rng: Xorshift64Star, u: int, w: int) -> Tuple[int, int]:
    return (u, w) if rng.randbelow(2) == 0 else (w, u)


def random_connected_multigraph(
    rng: Xorshift64Star,
    max_vertices: int = 12,
    max_edges: int = 30,
    loop_rate: float = 0.1,
    min_vertices: int = 1,
) -> MultiGraph:
    """Random spanning tree plus extra edges (parallel edges and loops allowed), shuffled."""
    n = min_vertices + rng.randbelow(max_vertices - min_vertices + 1)
    edges: List[Tuple[int, int]] = [_orient(rng, v, rng.randbelow(v)) for v in range(1, n)]
    for _ in range(rng.randbelow(max(max_edges - len(edges), 0) + 1)):
        if n == 1 or rng.random() < loop_rate:
            v = rng.randbelow(n)
            edges.append((v, v))
        else:
            u = rng.randbelow(n)
            w = rng.randbelow(n - 1)
            if w >= u:
                w += 1
            edges.append(_orient(rng, u, w))
    rng.shuffle(edges)
    return MultiGraph(vertex_count=n, edges=tuple(edges))


def random_tree(rng: Xorshift64Star, max_edges: int = 10, min_edges: int = 1) -> MultiGraph:
    """Random tree by attachment, with shuffled labels, orientations and edge order."""
    m = min_edges + rng.randbelow(max_edges - min_edges + 1)
    labels = list(range(m + 1))
    rng.shuffle(labels)
    edges = [_orient(rng, labels[v], labels[rng.randbelow(v)]) for v in range(1, m + 1)]
    rng.shuffle(edges)
    return MultiGraph(vertex_count=m + 1, edges=tuple(edges))


def random_edge_subset(rng: Xorshift64Star, g: MultiGraph) -> Set[int]:
    """Each edge independently with probability one half."""
    return {index for index in range(g.edge_count) if rng.randbelow(2) == 1}
