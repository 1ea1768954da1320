"""Simple cycles of an undirected graph, in canonical form."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .config import DEFAULT_CAPS, CapExceeded
from .graph import Graph
from .orientations import AcyclicOrientation


def canonical_sequence(nodes: Sequence[int]) -> tuple[int, ...]:
    """Rotate so the minimum comes first, then reflect so the second entry is below the last."""
    seq = list(nodes)
    if len(seq) < 3 or len(set(seq)) != len(seq):
        raise ValueError(f"not a simple cycle sequence: {nodes}")
    i = seq.index(min(seq))
    seq = seq[i:] + seq[:i]
    if seq[1] > seq[-1]:
        seq = [seq[0]] + seq[:0:-1]
    return tuple(seq)


@dataclass(frozen=True, order=True)
class SimpleCycle:
    """A simple cycle stored canonically; the stored order is the forward traversal."""

    nodes: tuple[int, ...]

    def __post_init__(self):
        if canonical_sequence(self.nodes) != self.nodes:
            raise ValueError(f"{self.nodes} is not in canonical form")

    @classmethod
    def from_sequence(cls, nodes: Sequence[int]) -> "SimpleCycle":
        return cls(canonical_sequence(nodes))

    @property
    def size(self) -> int:
        return len(self.nodes)

    def steps(self) -> list[tuple[int, int]]:
        """Consecutive node pairs in forward traversal order, wraparound included."""
        L = len(self.nodes)
        return [(self.nodes[i], self.nodes[(i + 1) % L]) for i in range(L)]

    def is_cycle_of(self, g: Graph) -> bool:
        return all(0 <= v < g.n for v in self.nodes) and all(g.has_edge(a, b) for a, b in self.steps())

    def serialize(self) -> str:
        return ",".join(map(str, self.nodes))


def parse_cycle(text: str) -> SimpleCycle:
    return SimpleCycle.from_sequence([int(x) for x in text.split(",")])


def enumerate_simple_cycles(g: Graph, cap: int | None = None) -> list[SimpleCycle]:
    """All simple cycles, each once, sorted by node sequence.

    For each anchor ``v`` a DFS extends paths only through nodes above ``v`` and
    records a cycle whenever it can close back to ``v``; keeping only paths whose
    second node is below the last drops the mirrored duplicate.
    """
    cap = DEFAULT_CAPS.cycles if cap is None else cap
    found: list[SimpleCycle] = []

    for anchor in range(g.n):
        path = [anchor]
        on_path = {anchor}

        def extend(v: int) -> None:
            for w in g.neighbors(v):
                if w == anchor and len(path) >= 3 and path[1] < path[-1]:
                    if len(found) >= cap:
                        raise CapExceeded(f"more than {cap} simple cycles")
                    found.append(SimpleCycle(tuple(path)))
                elif w > anchor and w not in on_path:
                    path.append(w)
                    on_path.add(w)
                    extend(w)
                    path.pop()
                    on_path.discard(w)

        extend(anchor)
    found.sort()
    return found


def direction_counts(c: SimpleCycle, o: AcyclicOrientation) -> tuple[int, int]:
    """Edges of ``c`` that ``o`` directs along the stored traversal, and against it."""
    if not c.is_cycle_of(o.graph):
        raise ValueError(f"cycle {c.nodes} does not lie in the orientation's graph")
    plus = sum(o.points(a, b) for a, b in c.steps())
    return plus, c.size - plus
