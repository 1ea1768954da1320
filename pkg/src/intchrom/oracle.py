"""Brute-force reference computations for tiny graphs.

These deliberately avoid the main code paths: cycles come from node subsets
and permutations, acyclicity from a three-color DFS, colorings from plain
backtracking over color subsets.
"""

from __future__ import annotations

from itertools import combinations, permutations, product

from .config import CapExceeded
from .cycles import SimpleCycle
from .graph import Graph
from .lexproduct import KTupleColoring


def _cap(ok: bool, what: str) -> None:
    if not ok:
        raise CapExceeded(what)


def max_clique(g: Graph) -> int:
    best = 1 if g.n else 0
    for size in range(2, g.n + 1):
        if any(all(g.has_edge(u, v) for u, v in combinations(s, 2)) for s in combinations(range(g.n), size)):
            best = size
        else:
            break
    return best


def _alternate(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    # label the merged color sequence by owner; interleaved means owners alternate
    owners = [owner for _, owner in sorted([(x, 0) for x in a] + [(x, 1) for x in b])]
    values = sorted(a + b)
    return len(set(values)) == len(values) and all(p != q for p, q in zip(owners, owners[1:]))


def _tuple_coloring(g: Graph, k: int, interleaved: bool, c: int) -> list[tuple[int, ...]] | None:
    adj = [g.neighbors(v) for v in range(g.n)]
    subsets = list(combinations(range(c), k))
    assign: list = [None] * g.n

    def fits(v: int, cs: tuple[int, ...]) -> bool:
        for w in adj[v]:
            other = assign[w]
            if other is None:
                continue
            if interleaved and not _alternate(cs, other):
                return False
            if not interleaved and set(cs) & set(other):
                return False
        return True

    def search(v: int) -> bool:
        if v == g.n:
            return True
        for cs in subsets:
            if fits(v, cs):
                assign[v] = cs
                if search(v + 1):
                    return True
        assign[v] = None
        return False

    return assign if search(0) else None


def brute_chi_k_coloring(g: Graph, k: int, interleaved: bool = False) -> tuple[int, KTupleColoring]:
    """Least palette admitting a (plain or interleaved) k-tuple coloring, with one such coloring.

    The budget starts at ``k`` times the clique number and grows by one until
    backtracking over k-subsets per node succeeds.
    """
    _cap(g.n <= 6 and 1 <= k <= 3, f"brute_chi_k handles n <= 6 and 1 <= k <= 3 (got n={g.n}, k={k})")
    c = k * max_clique(g)
    while (found := _tuple_coloring(g, k, interleaved, c)) is None:
        c += 1
    return c, KTupleColoring(k, tuple(found), interleaved=interleaved)


def brute_chi_k(g: Graph, k: int, interleaved: bool = False) -> int:
    return brute_chi_k_coloring(g, k, interleaved)[0]


def brute_chromatic(g: Graph) -> int:
    _cap(g.n <= 10, f"brute_chromatic handles n <= 10 (got {g.n})")
    adj = [g.neighbors(v) for v in range(g.n)]
    c = max_clique(g)
    while True:
        color = [-1] * g.n

        def search(v: int) -> bool:
            if v == g.n:
                return True
            for x in range(c):
                if all(color[w] != x for w in adj[v]):
                    color[v] = x
                    if search(v + 1):
                        return True
            color[v] = -1
            return False

        if search(0):
            return c
        c += 1


def brute_cycles(g: Graph) -> list[SimpleCycle]:
    """For every node subset of size >= 3, every cyclic ordering that closes through edges."""
    _cap(g.n <= 8, f"brute_cycles handles n <= 8 (got {g.n})")
    found = set()
    for size in range(3, g.n + 1):
        for subset in combinations(range(g.n), size):
            first, rest = subset[0], subset[1:]
            for perm in permutations(rest):
                seq = (first,) + perm
                if all(g.has_edge(seq[i], seq[(i + 1) % size]) for i in range(size)):
                    found.add(SimpleCycle.from_sequence(seq))
    return sorted(found)


def _has_directed_cycle(n: int, arcs: list[tuple[int, int]]) -> bool:
    out = [[] for _ in range(n)]
    for u, v in arcs:
        out[u].append(v)
    state = [0] * n  # 0 unvisited, 1 on stack, 2 done

    def visit(u: int) -> bool:
        state[u] = 1
        for v in out[u]:
            if state[v] == 1 or (state[v] == 0 and visit(v)):
                return True
        state[u] = 2
        return False

    return any(state[u] == 0 and visit(u) for u in range(n))


def brute_acyclic_count(g: Graph) -> int:
    _cap(g.m <= 12, f"brute_acyclic_count handles |E| <= 12 (got {g.m})")
    count = 0
    for bits in product((False, True), repeat=g.m):
        arcs = [(u, v) if b else (v, u) for (u, v), b in zip(g.edges, bits)]
        count += not _has_directed_cycle(g.n, arcs)
    return count
