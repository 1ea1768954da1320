"""Test-side utilities: graph families, hypothesis strategies, a reference min-max scan."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations, product
from pathlib import Path

from hypothesis import strategies as st

from intchrom.graph import Graph, is_connected, parse_graph, guess_format
from intchrom.oracle import _has_directed_cycle, brute_cycles

FIXTURES = Path(__file__).parent / "fixtures"


def load_fixture(name: str) -> Graph:
    text = (FIXTURES / name).read_text()
    return parse_graph(text, guess_format(text))


def fixture_names() -> list[str]:
    return sorted(p.name for p in FIXTURES.iterdir())


def all_labelled_graphs(n: int):
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, tuple(p for i, p in enumerate(pairs) if mask >> i & 1))


def _canonical_key(g: Graph) -> tuple:
    return min(
        tuple(sorted((min(p[u], p[v]), max(p[u], p[v])) for u, v in g.edges))
        for p in permutations(range(g.n))
    )


@lru_cache(maxsize=None)
def connected_graphs_up_to_iso(n: int) -> tuple[Graph, ...]:
    seen = {}
    for g in all_labelled_graphs(n):
        if is_connected(g):
            seen.setdefault(_canonical_key(g), g)
    return tuple(seen.values())


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 6, max_m: int | None = None) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=max_m) if pairs else st.just([]))
    return Graph.from_edges(n, chosen)


def reference_chi_int_star(g: Graph) -> Fraction:
    """Independent min-max: raw bit vectors, DFS acyclicity, subset-permutation cycles."""
    cycles = brute_cycles(g)
    if not cycles:
        return Fraction(2)
    best = None
    for bits in product((False, True), repeat=g.m):
        arcs = [(u, v) if b else (v, u) for (u, v), b in zip(g.edges, bits)]
        if _has_directed_cycle(g.n, arcs):
            continue
        arcset = set(arcs)
        worst = Fraction(0)
        for c in cycles:
            L = len(c.nodes)
            plus = sum((c.nodes[i], c.nodes[(i + 1) % L]) in arcset for i in range(L))
            worst = max(worst, Fraction(L, min(plus, L - plus)))
        best = worst if best is None else min(best, worst)
    return best
