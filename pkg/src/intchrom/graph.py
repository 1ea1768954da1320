"""Undirected simple graphs: representation, text formats, structural queries."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Literal

Format = Literal["dimacs", "edgelist"]


class GraphFormatError(ValueError):
    """Malformed graph input. ``line`` is 1-based, or None for whole-file problems."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass(frozen=True)
class Graph:
    """Immutable undirected simple graph on nodes ``0..n-1``.

    ``edges`` holds pairs ``(u, v)`` with ``u < v``, sorted lexicographically.
    Use :meth:`from_edges` to build one from arbitrary pairs.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    _index: dict = field(init=False, repr=False, compare=False, hash=False)
    _adj: tuple = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"graph needs at least one node, got n={self.n}")
        seen: dict[tuple[int, int], int] = {}
        adj: list[list[int]] = [[] for _ in range(self.n)]
        prev = None
        for idx, (u, v) in enumerate(self.edges):
            if u == v:
                raise ValueError(f"self-loop at node {u}")
            if not (0 <= u < v < self.n):
                raise ValueError(f"edge ({u}, {v}) is not canonical for n={self.n}")
            if (u, v) in seen:
                raise ValueError(f"duplicate edge ({u}, {v})")
            if prev is not None and (u, v) < prev:
                raise ValueError("edges must be sorted")
            prev = (u, v)
            seen[(u, v)] = idx
            adj[u].append(v)
            adj[v].append(u)
        object.__setattr__(self, "_index", seen)
        object.__setattr__(self, "_adj", tuple(tuple(sorted(a)) for a in adj))

    @classmethod
    def from_edges(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "Graph":
        """Canonicalize ``pairs``; duplicates and self-loops are rejected, not collapsed."""
        canon = []
        for u, v in pairs:
            if u == v:
                raise ValueError(f"self-loop at node {u}")
            canon.append((min(u, v), max(u, v)))
        if len(set(canon)) != len(canon):
            dup = next(e for e in canon if canon.count(e) > 1)
            raise ValueError(f"duplicate edge {dup}")
        return cls(n, tuple(sorted(canon)))

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self._index

    def edge_index(self, u: int, v: int) -> int:
        """Position of edge ``{u, v}`` in the canonical edge list."""
        try:
            return self._index[(min(u, v), max(u, v))]
        except KeyError:
            raise KeyError(f"({u}, {v}) is not an edge") from None

    def induced(self, nodes: Iterable[int]) -> tuple["Graph", list[int]]:
        """Subgraph induced by ``nodes`` relabelled densely; also returns the old labels."""
        keep = sorted(set(nodes))
        relabel = {old: new for new, old in enumerate(keep)}
        pairs = [(relabel[u], relabel[v]) for u, v in self.edges if u in relabel and v in relabel]
        return Graph.from_edges(len(keep), pairs), keep


def disjoint_union(*graphs: Graph) -> Graph:
    pairs = []
    offset = 0
    for g in graphs:
        pairs.extend((u + offset, v + offset) for u, v in g.edges)
        offset += g.n
    return Graph.from_edges(offset, pairs)


def components(g: Graph) -> list[list[int]]:
    """Connected components as sorted node lists, ordered by smallest member."""
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in g.edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    blocks: dict[int, list[int]] = {}
    for v in range(g.n):
        blocks.setdefault(find(v), []).append(v)
    return sorted(blocks.values())


def is_forest(g: Graph) -> bool:
    # every component is a tree iff |E| = n - #components
    return g.m == g.n - len(components(g))


def is_connected(g: Graph) -> bool:
    return len(components(g)) == 1


# --- text formats -----------------------------------------------------------


def _is_comment(line: str) -> bool:
    s = line.strip()
    return not s or s.startswith("#") or s == "c" or s.startswith("c ") or s.startswith("c\t")


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise GraphFormatError(f"expected integers, got {' '.join(tokens)!r}", lineno) from None


def _build(n: int, pairs: list[tuple[int, int, int]], declared_m: int | None) -> Graph:
    seen: dict[tuple[int, int], int] = {}
    for u, v, lineno in pairs:
        if u == v:
            raise GraphFormatError(f"self-loop at node {u}", lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"endpoint out of range in edge ({u}, {v})", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError(f"duplicate edge {key} (first on line {seen[key]})", lineno)
        seen[key] = lineno
    if declared_m is not None and declared_m != len(pairs):
        raise GraphFormatError(f"header declares {declared_m} edges, found {len(pairs)}")
    return Graph(n, tuple(sorted(seen)))


def _parse_dimacs(text: str) -> Graph:
    n = declared_m = None
    pairs = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if _is_comment(line):
            continue
        tokens = line.split()
        if tokens[0] == "p":
            if n is not None:
                raise GraphFormatError("second problem line", lineno)
            if len(tokens) != 4 or tokens[1] not in ("edge", "col"):
                raise GraphFormatError("header must read 'p edge <n> <m>'", lineno)
            n, declared_m = _ints(tokens[2:], lineno)
            if n < 1 or declared_m < 0:
                raise GraphFormatError("header needs n >= 1 and m >= 0", lineno)
        elif tokens[0] == "e":
            if n is None:
                raise GraphFormatError("edge line before 'p' header", lineno)
            if len(tokens) != 3:
                raise GraphFormatError("edge line must read 'e <u> <v>'", lineno)
            u, v = _ints(tokens[1:], lineno)
            pairs.append((u - 1, v - 1, lineno))
        else:
            raise GraphFormatError(f"unknown line type {tokens[0]!r}", lineno)
    if n is None:
        raise GraphFormatError("missing 'p edge' header")
    return _build(n, pairs, declared_m)


def _parse_edgelist(text: str) -> Graph:
    n = declared_m = None
    pairs = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if _is_comment(line):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise GraphFormatError("expected two integers", lineno)
        a, b = _ints(tokens, lineno)
        if n is None:
            if a < 1 or b < 0:
                raise GraphFormatError("header needs n >= 1 and m >= 0", lineno)
            n, declared_m = a, b
        else:
            pairs.append((a, b, lineno))
    if n is None:
        raise GraphFormatError("missing '<n> <m>' header")
    return _build(n, pairs, declared_m)


def parse_graph(text: str, format: Format = "dimacs") -> Graph:
    """Parse DIMACS (1-indexed ``p edge``/``e`` lines) or a 0-indexed edge list."""
    if format == "dimacs":
        return _parse_dimacs(text)
    if format == "edgelist":
        return _parse_edgelist(text)
    raise ValueError(f"unknown graph format {format!r}")


def serialize_graph(g: Graph, format: Format = "dimacs") -> str:
    if format == "dimacs":
        lines = [f"p edge {g.n} {g.m}"] + [f"e {u + 1} {v + 1}" for u, v in g.edges]
    elif format == "edgelist":
        lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]
    else:
        raise ValueError(f"unknown graph format {format!r}")
    return "\n".join(lines) + "\n"


def guess_format(text: str) -> Format:
    """DIMACS if a ``p`` line appears before any data line, else edge list."""
    for line in text.splitlines():
        if _is_comment(line):
            continue
        return "dimacs" if line.split()[0] in ("p", "e") else "edgelist"
    return "edgelist"
