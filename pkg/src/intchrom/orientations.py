"""Acyclic orientations of a graph and longest directed paths in DAGs."""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence

from .config import DEFAULT_CAPS, CapExceeded
from .graph import Graph


class CyclicOrientationError(ValueError):
    pass


@dataclass(frozen=True)
class DiGraph:
    """Plain digraph on ``0..n-1`` with successor lists; the host for longest-path queries."""

    n: int
    succ: tuple[tuple[int, ...], ...]

    @classmethod
    def from_arcs(cls, n: int, arcs) -> "DiGraph":
        succ: list[list[int]] = [[] for _ in range(n)]
        for u, v in arcs:
            succ[u].append(v)
        return cls(n, tuple(tuple(sorted(s)) for s in succ))

    def arcs(self) -> Iterator[tuple[int, int]]:
        for u, out in enumerate(self.succ):
            for v in out:
                yield u, v

    def has_arc(self, u: int, v: int) -> bool:
        return v in self.succ[u]

    def predecessors(self) -> list[list[int]]:
        pred: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.arcs():
            pred[v].append(u)
        return pred


def topological_order(d: DiGraph) -> list[int] | None:
    """Kahn's algorithm (smallest ready node first); None if ``d`` has a directed cycle."""
    indeg = [0] * d.n
    for _, v in d.arcs():
        indeg[v] += 1
    ready = [v for v in range(d.n) if indeg[v] == 0]
    heapq.heapify(ready)
    order = []
    while ready:
        u = heapq.heappop(ready)
        order.append(u)
        for v in d.succ[u]:
            indeg[v] -= 1
            if indeg[v] == 0:
                heapq.heappush(ready, v)
    return order if len(order) == d.n else None


def orient(g: Graph, dirs: Sequence[bool]) -> DiGraph:
    """Digraph induced by ``dirs``; ``True`` directs an edge from its lower to its higher endpoint."""
    if len(dirs) != g.m:
        raise ValueError(f"expected {g.m} direction bits, got {len(dirs)}")
    return DiGraph.from_arcs(g.n, ((u, v) if d else (v, u) for (u, v), d in zip(g.edges, dirs)))


def is_acyclic(g: Graph, dirs: Sequence[bool]) -> bool:
    return topological_order(orient(g, dirs)) is not None


@dataclass(frozen=True)
class AcyclicOrientation:
    graph: Graph
    dirs: tuple[bool, ...]

    def __post_init__(self):
        if len(self.dirs) != self.graph.m:
            raise ValueError(f"expected {self.graph.m} direction bits, got {len(self.dirs)}")
        if not is_acyclic(self.graph, self.dirs):
            raise CyclicOrientationError("orientation contains a directed cycle")

    @classmethod
    def from_arcs(cls, g: Graph, arcs) -> "AcyclicOrientation":
        """Build from directed pairs ``(u, v)`` meaning ``u -> v``, one per edge."""
        dirs: list[bool | None] = [None] * g.m
        for u, v in arcs:
            idx = g.edge_index(u, v)
            if dirs[idx] is not None:
                raise ValueError(f"edge ({u}, {v}) oriented twice")
            dirs[idx] = u < v
        if any(d is None for d in dirs):
            missing = [g.edges[i] for i, d in enumerate(dirs) if d is None]
            raise ValueError(f"edges without a direction: {missing}")
        return cls(g, tuple(dirs))

    @classmethod
    def from_order(cls, g: Graph, order: Sequence[int]) -> "AcyclicOrientation":
        """Direct every edge from the endpoint appearing earlier in ``order``."""
        rank = {v: r for r, v in enumerate(order)}
        return cls(g, tuple(rank[u] < rank[v] for u, v in g.edges))

    def points(self, u: int, v: int) -> bool:
        """True iff the edge ``{u, v}`` is directed ``u -> v``."""
        d = self.dirs[self.graph.edge_index(u, v)]
        return d if u < v else not d

    def arcs(self) -> list[tuple[int, int]]:
        return [(u, v) if d else (v, u) for (u, v), d in zip(self.graph.edges, self.dirs)]

    def digraph(self) -> DiGraph:
        return orient(self.graph, self.dirs)

    @property
    def code(self) -> int:
        """Bit vector as an integer, first edge most significant (preserves lexicographic order)."""
        out = 0
        for d in self.dirs:
            out = (out << 1) | d
        return out

    def flipped(self, edge_indices) -> "AcyclicOrientation":
        dirs = list(self.dirs)
        for i in edge_indices:
            dirs[i] = not dirs[i]
        return AcyclicOrientation(self.graph, tuple(dirs))

    def serialize(self) -> str:
        return " ".join(f"{u}>{v}" for u, v in self.arcs())


def parse_orientation(g: Graph, spec: str) -> AcyclicOrientation:
    """Inverse of :meth:`AcyclicOrientation.serialize`; commas or whitespace separate pairs."""
    arcs = []
    for tok in spec.replace(",", " ").split():
        try:
            u, v = (int(x) for x in tok.split(">"))
        except ValueError:
            raise ValueError(f"bad arc {tok!r}; expected 'u>v'") from None
        arcs.append((u, v))
    return AcyclicOrientation.from_arcs(g, arcs)


def _check_cap(g: Graph, cap: int | None) -> None:
    cap = DEFAULT_CAPS.edges if cap is None else cap
    if g.m > cap:
        raise CapExceeded(f"{g.m} edges exceeds the exhaustive-orientation cap of {cap}")


def enumerate_acyclic(g: Graph, cap: int | None = None, method: str = "backtrack") -> Iterator[AcyclicOrientation]:
    """Every acyclic orientation of ``g`` once, in lexicographic order of ``dirs``.

    ``method="filter"`` tests all ``2**m`` bit vectors; ``"backtrack"`` assigns
    edges in order and prunes a prefix as soon as it closes a directed cycle.
    Both produce the identical sequence.
    """
    _check_cap(g, cap)
    if method == "filter":
        for dirs in product((False, True), repeat=g.m):
            if is_acyclic(g, dirs):
                yield _trusted(g, dirs)
        return
    if method != "backtrack":
        raise ValueError(f"unknown enumeration method {method!r}")
    yield from _backtrack(g)


def _trusted(g: Graph, dirs) -> AcyclicOrientation:
    # skips the acyclicity re-check for orientations the enumerator has already vetted
    o = object.__new__(AcyclicOrientation)
    object.__setattr__(o, "graph", g)
    object.__setattr__(o, "dirs", tuple(dirs))
    return o


def _backtrack(g: Graph) -> Iterator[AcyclicOrientation]:
    succ: list[set[int]] = [set() for _ in range(g.n)]
    dirs: list[bool] = [False] * g.m

    def reaches(src: int, dst: int) -> bool:
        stack, seen = [src], {src}
        while stack:
            x = stack.pop()
            if x == dst:
                return True
            for y in succ[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return False

    def rec(i: int):
        if i == g.m:
            yield _trusted(g, dirs)
            return
        u, v = g.edges[i]
        for d in (False, True):
            tail, head = (u, v) if d else (v, u)
            if reaches(head, tail):
                continue
            dirs[i] = d
            succ[tail].add(head)
            yield from rec(i + 1)
            succ[tail].discard(head)

    yield from rec(0)


def count_acyclic(g: Graph, cap: int | None = None) -> int:
    return sum(1 for _ in enumerate_acyclic(g, cap))


def sources(o: AcyclicOrientation) -> set[int]:
    has_in = {v for _, v in o.arcs()}
    return set(range(o.graph.n)) - has_in


def sinks(o: AcyclicOrientation) -> set[int]:
    has_out = {u for u, _ in o.arcs()}
    return set(range(o.graph.n)) - has_out


@dataclass(frozen=True)
class DirectedPath:
    nodes: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.nodes)

    def is_valid_in(self, d: DiGraph) -> bool:
        if not self.nodes or len(set(self.nodes)) != len(self.nodes):
            return False
        return all(d.has_arc(a, b) for a, b in zip(self.nodes, self.nodes[1:]))


def path_levels(d: DiGraph) -> list[int]:
    """``levels[v]`` = node count of the longest directed path starting at ``v``."""
    order = topological_order(d)
    if order is None:
        raise CyclicOrientationError("digraph has a directed cycle")
    levels = [1] * d.n
    for u in reversed(order):
        for v in d.succ[u]:
            if levels[v] + 1 > levels[u]:
                levels[u] = levels[v] + 1
    return levels


def longest_path(d: DiGraph) -> tuple[int, DirectedPath]:
    """Node count of a longest directed path and the lexicographically least such path."""
    if d.n == 0:
        raise ValueError("empty digraph")
    levels = path_levels(d)
    best = max(levels)
    v = levels.index(best)
    nodes = [v]
    while levels[v] > 1:
        # successors are sorted, so the first on a longest continuation is the least
        v = next(w for w in d.succ[v] if levels[w] == levels[v] - 1)
        nodes.append(v)
    return best, DirectedPath(tuple(nodes))
