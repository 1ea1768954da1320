"""The product of a graph with the complete graph on k nodes, layered orientations,
interleaved k-tuple colorings and the cycle-winding paths inside the product.

Product node ``(i, layer)`` with ``layer`` in ``1..k`` is flattened to
``i * k + layer - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .config import DEFAULT_CAPS, CapExceeded, Caps
from .cycles import SimpleCycle, direction_counts
from .evaluators import EdgelessGraphError
from .graph import Graph
from .orientations import (
    AcyclicOrientation,
    CyclicOrientationError,
    DiGraph,
    DirectedPath,
    enumerate_acyclic,
    longest_path,
    path_levels,
    topological_order,
)


@dataclass(frozen=True)
class ProductGraph:
    base: Graph
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"k must be positive, got {self.k}")

    @property
    def n(self) -> int:
        return self.base.n * self.k

    def node(self, i: int, layer: int) -> int:
        return i * self.k + layer - 1

    def split(self, x: int) -> tuple[int, int]:
        """Inverse of :meth:`node`: ``(base node, layer)``."""
        return x // self.k, x % self.k + 1

    def edges(self) -> list[tuple[int, int]]:
        k, out = self.k, []
        for i in range(self.base.n):
            for a in range(1, k + 1):
                for b in range(a + 1, k + 1):
                    out.append((self.node(i, a), self.node(i, b)))
        for i, j in self.base.edges:
            for a in range(1, k + 1):
                for b in range(1, k + 1):
                    out.append((self.node(i, a), self.node(j, b)))
        return out

    def as_graph(self) -> Graph:
        return Graph.from_edges(self.n, self.edges())

    @property
    def edge_count(self) -> int:
        return self.base.m * self.k**2 + self.base.n * self.k * (self.k - 1) // 2


def build_product(g: Graph, k: int, caps: Caps = DEFAULT_CAPS) -> ProductGraph:
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if g.n * k > caps.product_nodes:
        raise CapExceeded(f"product has {g.n * k} nodes, cap is {caps.product_nodes}")
    return ProductGraph(g, k)


@dataclass(frozen=True)
class LayeredOrientation:
    """Every layer oriented like ``base_orientation``; every cross-layer edge points down."""

    product: ProductGraph
    base_orientation: AcyclicOrientation

    def arcs(self) -> list[tuple[int, int]]:
        p, k = self.product, self.product.k
        out = []
        for i in range(p.base.n):
            for a in range(1, k + 1):
                for b in range(1, a):
                    out.append((p.node(i, a), p.node(i, b)))
        for u, v in self.base_orientation.arcs():
            for a in range(1, k + 1):
                for b in range(1, k + 1):
                    if a == b:
                        out.append((p.node(u, a), p.node(v, a)))
                    elif a > b:
                        out.append((p.node(u, a), p.node(v, b)))
                    else:
                        out.append((p.node(v, b), p.node(u, a)))
        return out

    def digraph(self) -> DiGraph:
        return DiGraph.from_arcs(self.product.n, self.arcs())

    def longest(self) -> tuple[int, DirectedPath]:
        return longest_path(self.digraph())


def layered_orientation(g: Graph, o: AcyclicOrientation, k: int, caps: Caps = DEFAULT_CAPS) -> LayeredOrientation:
    if o.graph != g:
        raise ValueError("orientation belongs to a different graph")
    return LayeredOrientation(build_product(g, k, caps), o)


def chi_int_k(g: Graph, k: int, caps: Caps = DEFAULT_CAPS) -> tuple[int, LayeredOrientation]:
    """Interleaved k-chromatic number: the least longest-path count over layered orientations.

    Only the orientations induced by acyclic orientations of ``g`` are scanned,
    never the full orientation set of the product.
    """
    if g.m == 0:
        raise EdgelessGraphError("graph has no edges")
    product = build_product(g, k, caps)
    best = best_lo = None
    for o in enumerate_acyclic(g, caps.edges):
        lo = LayeredOrientation(product, o)
        count, _ = lo.longest()
        if best is None or count < best:
            best, best_lo = count, lo
    return best, best_lo


def monotonic_coloring(d: DiGraph) -> list[int]:
    """Color each node by (longest path starting there) - 1; strictly decreasing along arcs."""
    return [lv - 1 for lv in path_levels(d)]


def orientation_from_coloring(g: Graph, coloring: Sequence[int]) -> AcyclicOrientation:
    """Direct each edge from its higher-colored endpoint to its lower one."""
    arcs = []
    for u, v in g.edges:
        if coloring[u] == coloring[v]:
            raise ValueError(f"adjacent nodes {u} and {v} share color {coloring[u]}")
        arcs.append((u, v) if coloring[u] > coloring[v] else (v, u))
    return AcyclicOrientation.from_arcs(g, arcs)


@dataclass(frozen=True)
class KTupleColoring:
    """``colors[v]`` is the ascending k-tuple of node ``v``."""

    k: int
    colors: tuple[tuple[int, ...], ...]
    interleaved: bool = False

    def __post_init__(self):
        for v, cs in enumerate(self.colors):
            if len(cs) != self.k or any(a >= b for a, b in zip(cs, cs[1:])):
                raise ValueError(f"node {v} needs {self.k} strictly increasing colors, got {cs}")

    @property
    def palette(self) -> int:
        return len({c for cs in self.colors for c in cs})

    def is_proper(self, g: Graph) -> bool:
        return all(not set(self.colors[u]) & set(self.colors[v]) for u, v in g.edges)

    def is_interleaved_on(self, g: Graph) -> bool:
        return all(interleaves(self.colors[u], self.colors[v]) for u, v in g.edges)

    def validate(self, g: Graph) -> None:
        if len(self.colors) != g.n:
            raise ValueError("coloring does not cover the graph")
        if not self.is_proper(g):
            raise ValueError("adjacent nodes share a color")
        if self.interleaved and not self.is_interleaved_on(g):
            raise ValueError("coloring flagged interleaved does not alternate on every edge")

    def serialize(self) -> str:
        lines = [f"# k={self.k} interleaved={str(self.interleaved).lower()} palette={self.palette}"]
        lines += [f"{v}: {','.join(map(str, cs))}" for v, cs in enumerate(self.colors)]
        return "\n".join(lines) + "\n"


def interleaves(a: Sequence[int], b: Sequence[int]) -> bool:
    """True iff the sorted tuples strictly alternate, with either one leading."""
    a, b = sorted(a), sorted(b)
    if len(a) != len(b):
        return False
    first, second = (a, b) if a[0] < b[0] else (b, a)
    merged = [x for pair in zip(first, second) for x in pair]
    return all(x < y for x, y in zip(merged, merged[1:]))


def derive_interleaved_coloring(g: Graph, o: AcyclicOrientation, k: int, caps: Caps = DEFAULT_CAPS) -> KTupleColoring:
    """Monotonically color the layered product and give node ``i`` the colors of its k copies."""
    if g.m == 0:
        raise EdgelessGraphError("graph has no edges")
    lo = layered_orientation(g, o, k, caps)
    color = monotonic_coloring(lo.digraph())
    p = lo.product
    tuples = tuple(tuple(sorted(color[p.node(i, a)] for a in range(1, k + 1))) for i in range(g.n))
    out = KTupleColoring(k, tuples, interleaved=True)
    out.validate(g)
    return out


# --- winding paths ----------------------------------------------------------


@dataclass(frozen=True)
class WindingPath:
    cycle: SimpleCycle
    orientation: AcyclicOrientation
    k: int
    traversal: tuple[int, ...]  # cycle nodes in the direction with m+ >= m-
    start: int  # index into traversal
    m_plus: int
    m_minus: int
    t: int
    eps_plus: int
    eps_minus: int
    path: DirectedPath

    @property
    def node_count(self) -> int:
        return len(self.path)


def _walk(agree: Sequence[bool], start: int, descents: int) -> tuple[int, int, int]:
    """Walk the cycle from ``start`` until ``descents`` against-steps are used and the
    following with-run is exhausted. Returns (steps taken, with-steps, against-steps)."""
    L = len(agree)
    steps = with_ = against = 0
    pos = start
    while True:
        if agree[pos]:
            with_ += 1
        elif against < descents:
            against += 1
        else:
            return steps, with_, against
        steps += 1
        pos = (pos + 1) % L


def _with_runs(agree: Sequence[bool]) -> dict[int, int]:
    """Start index -> length of each maximal run of agreeing steps."""
    L = len(agree)
    runs = {}
    for s in range(L):
        if agree[s] and not agree[s - 1]:
            length = 0
            while agree[(s + length) % L]:
                length += 1
            runs[s] = length
    return runs


def winding_path(c: SimpleCycle, o: AcyclicOrientation, k: int, caps: Caps = DEFAULT_CAPS) -> WindingPath:
    """Directed path in the layered product whose trace laps cycle ``c``.

    Steps agreeing with ``o`` stay in the current layer, opposing steps drop one
    layer, and the path makes exactly ``k - 1`` drops. Every start position is
    tried and the longest resulting path kept; ties go to the origin of a longest
    agreeing run, then to the earliest position.
    """
    if not c.is_cycle_of(o.graph):
        raise ValueError(f"cycle {c.nodes} does not lie in the orientation's graph")
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    plus, minus = direction_counts(c, o)
    seq = c.nodes if plus >= minus else (c.nodes[0],) + c.nodes[:0:-1]
    m_plus, m_minus = max(plus, minus), min(plus, minus)
    L = len(seq)
    agree = [o.points(seq[i], seq[(i + 1) % L]) for i in range(L)]

    runs = _with_runs(agree)
    longest_run = max(runs.values())
    preferred = {s for s, r in runs.items() if r == longest_run}

    def rank(s: int):
        steps, _, _ = _walk(agree, s, k - 1)
        return (steps, s in preferred, -s)

    start = max(range(L), key=rank)
    steps, with_, against = _walk(agree, start, k - 1)

    product = build_product(o.graph, k, caps)
    layer, pos = k, start
    nodes = [product.node(seq[pos], layer)]
    for _ in range(steps):
        if not agree[pos]:
            layer -= 1
        pos = (pos + 1) % L
        nodes.append(product.node(seq[pos], layer))
    assert layer == 1

    t = (k - 1) // m_minus
    eps_minus = (k - 1) % m_minus
    eps_plus = with_ - t * m_plus
    assert against == t * m_minus + eps_minus
    return WindingPath(
        cycle=c,
        orientation=o,
        k=k,
        traversal=seq,
        start=start,
        m_plus=m_plus,
        m_minus=m_minus,
        t=t,
        eps_plus=eps_plus,
        eps_minus=eps_minus,
        path=DirectedPath(tuple(nodes)),
    )


# --- longest-path morphology ------------------------------------------------


@dataclass(frozen=True)
class Lemma3Report:
    ok: bool
    longest: int
    paths_checked: int
    violations: tuple[str, ...]


def all_longest_paths(d: DiGraph, limit: int) -> tuple[int, list[tuple[int, ...]]]:
    """Every directed path with the maximum node count, via longest-path levels."""
    levels = path_levels(d)
    best = max(levels)
    paths: list[tuple[int, ...]] = []

    def extend(prefix: list[int]) -> None:
        v = prefix[-1]
        if levels[v] == 1:
            if len(paths) >= limit:
                raise CapExceeded(f"more than {limit} longest paths")
            paths.append(tuple(prefix))
            return
        for w in d.succ[v]:
            if levels[w] == levels[v] - 1:
                prefix.append(w)
                extend(prefix)
                prefix.pop()

    for v in range(d.n):
        if levels[v] == best:
            extend([v])
    return best, paths


def lemma3_violations(
    product: ProductGraph, d: DiGraph, limit: int = DEFAULT_CAPS.longest_paths
) -> Lemma3Report:
    """Check the shape of every longest path of ``d`` (an orientation of ``product``).

    Each arc must stay in its layer or drop exactly one layer; a drop must join two
    distinct base nodes ``i -> j``, and then every layer must carry the arc ``j -> i``.
    """
    if topological_order(d) is None:
        raise CyclicOrientationError("product orientation has a directed cycle")
    k = product.k
    best, paths = all_longest_paths(d, limit)
    problems: list[str] = []
    for path in paths:
        for x, y in zip(path, path[1:]):
            (i, a), (j, b) = product.split(x), product.split(y)
            drop = a - b
            if drop not in (0, 1):
                problems.append(f"{i}^{a}->{j}^{b}: layer change {drop}")
            elif drop == 1:
                if i == j:
                    problems.append(f"{i}^{a}->{j}^{b}: drop within one base node")
                else:
                    missing = [l for l in range(1, k + 1) if not d.has_arc(product.node(j, l), product.node(i, l))]
                    if missing:
                        problems.append(f"{i}^{a}->{j}^{b}: no arc {j}->{i} in layers {missing}")
            elif i == j:
                problems.append(f"{i}^{a}->{j}^{b}: arc inside a layer joins a node to itself")
    return Lemma3Report(not problems, best, len(paths), tuple(dict.fromkeys(problems)))


def check_lemma3(g: Graph, o: AcyclicOrientation, k: int, caps: Caps = DEFAULT_CAPS) -> Lemma3Report:
    lo = layered_orientation(g, o, k, caps)
    return lemma3_violations(lo.product, lo.digraph(), caps.longest_paths)


def product_orientation_from_layers(
    g: Graph, layer_orientations: Mapping[int, AcyclicOrientation], k: int
) -> tuple[ProductGraph, DiGraph]:
    """Cross-layer arcs point down; layer ``l`` is oriented by ``layer_orientations[l]``.

    With differing per-layer orientations this is not layered, which makes it a
    negative control for :func:`lemma3_violations`.
    """
    p = ProductGraph(g, k)
    arcs = []
    for i in range(g.n):
        for a in range(1, k + 1):
            for b in range(1, a):
                arcs.append((p.node(i, a), p.node(i, b)))
    for u, v in g.edges:
        for a in range(1, k + 1):
            for b in range(1, k + 1):
                if a == b:
                    oa = layer_orientations[a]
                    arcs.append((p.node(u, a), p.node(v, a)) if oa.points(u, v) else (p.node(v, a), p.node(u, a)))
                elif a > b:
                    arcs.append((p.node(u, a), p.node(v, b)))
                else:
                    arcs.append((p.node(v, b), p.node(u, a)))
    return p, DiGraph.from_arcs(p.n, arcs)


def best_layered_longest(g: Graph, k: int, caps: Caps = DEFAULT_CAPS) -> list[tuple[AcyclicOrientation, int]]:
    """Longest-path count of every layered orientation (for surveys and scripts)."""
    product = build_product(g, k, caps)
    return [(o, LayeredOrientation(product, o).longest()[0]) for o in enumerate_acyclic(g, caps.edges)]
