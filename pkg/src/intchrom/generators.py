"""Named and random small graphs used by tests, scripts and ``intchrom gen``."""

from __future__ import annotations

import random
from itertools import combinations

from .graph import Graph, disjoint_union, is_connected, is_forest


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 nodes")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def wheel_graph(rim: int) -> Graph:
    """Hub 0 joined to every node of a rim cycle on ``1..rim``."""
    pairs = [(0, i) for i in range(1, rim + 1)]
    pairs += [(i, i % rim + 1) for i in range(1, rim + 1)]
    return Graph.from_edges(rim + 1, pairs)


def prism_graph(n: int) -> Graph:
    top = [(i, (i + 1) % n) for i in range(n)]
    bottom = [(n + i, n + (i + 1) % n) for i in range(n)]
    rungs = [(i, n + i) for i in range(n)]
    return Graph.from_edges(2 * n, top + bottom + rungs)


def edgeless_graph(n: int) -> Graph:
    return Graph(n, ())


def gnp(n: int, p: float, rng: random.Random) -> Graph:
    return Graph.from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def random_forest(n: int, rng: random.Random, trees: int = 1) -> Graph:
    """Forest on ``n`` nodes with ``trees`` components (random recursive trees, shuffled labels)."""
    if not 1 <= trees <= n:
        raise ValueError("need 1 <= trees <= n")
    labels = list(range(n))
    rng.shuffle(labels)
    roots = set(range(trees))
    pairs = [(labels[v], labels[rng.randrange(v)]) for v in range(n) if v not in roots]
    return Graph.from_edges(n, pairs)


def random_connected(n: int, rng: random.Random, extra: float = 0.4) -> Graph:
    """Random spanning tree plus each remaining pair with probability ``extra``."""
    tree = random_forest(n, rng)
    pairs = set(tree.edges)
    pairs |= {e for e in combinations(range(n), 2) if e not in pairs and rng.random() < extra}
    return Graph.from_edges(n, pairs)


def random_connected_cyclic(n: int, rng: random.Random, extra: float = 0.4) -> Graph:
    if n < 3:
        raise ValueError("a cyclic graph needs at least 3 nodes")
    while True:
        g = random_connected(n, rng, extra)
        if not is_forest(g):
            return g


def random_disconnected_forest(rng: random.Random, max_n: int = 10) -> Graph:
    """Forest with at least one edge, often with several components."""
    n = rng.randint(2, max_n)
    trees = rng.randint(1, max(1, n // 2))
    g = random_forest(n, rng, trees)
    assert g.m >= 1 and is_forest(g)
    return g


NAMED = {
    "path": path_graph,
    "cycle": cycle_graph,
    "complete": complete_graph,
    "wheel": wheel_graph,
    "prism": prism_graph,
}

__all__ = [
    "NAMED",
    "complete_bipartite",
    "complete_graph",
    "cycle_graph",
    "disjoint_union",
    "edgeless_graph",
    "gnp",
    "is_connected",
    "path_graph",
    "prism_graph",
    "random_connected",
    "random_connected_cyclic",
    "random_disconnected_forest",
    "random_forest",
    "wheel_graph",
]
