"""Interleaved multichromatic number and chromatic number from acyclic orientations.

All ratios are :class:`fractions.Fraction`, so comparisons are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .config import DEFAULT_CAPS, Caps
from .cycles import SimpleCycle, direction_counts, enumerate_simple_cycles
from .graph import Graph, is_forest
from .orientations import AcyclicOrientation, enumerate_acyclic, longest_path


class EdgelessGraphError(ValueError):
    pass


def format_ratio(x: Fraction) -> str:
    """``num/den`` even when the denominator is 1."""
    return f"{x.numerator}/{x.denominator}"


def parse_ratio(text: str) -> Fraction:
    num, den = text.split("/")
    return Fraction(int(num), int(den))


def _require_edges(g: Graph) -> None:
    if g.m == 0:
        raise EdgelessGraphError("graph has no edges")


def cycle_ratio(c: SimpleCycle, o: AcyclicOrientation) -> Fraction:
    """``|c| / min(m+, m-)`` for cycle ``c`` under ``o``."""
    plus, minus = direction_counts(c, o)
    return Fraction(c.size, min(plus, minus))


def _cycle_arc_index(g: Graph, cycles: Sequence[SimpleCycle]) -> list[tuple[int, list[tuple[int, bool]]]]:
    # per cycle: (size, [(edge index, forward step goes low->high)]) for fast m+ counting
    out = []
    for c in cycles:
        out.append((c.size, [(g.edge_index(a, b), a < b) for a, b in c.steps()]))
    return out


def _minority(dirs: Sequence[bool], arcs: list[tuple[int, bool]]) -> int:
    plus = sum(dirs[i] == fwd for i, fwd in arcs)
    return min(plus, len(arcs) - plus)


def orientation_score(
    g: Graph, o: AcyclicOrientation, cycles: Sequence[SimpleCycle]
) -> tuple[Fraction, SimpleCycle]:
    """Largest cycle ratio under ``o`` and the first cycle (in the given order) attaining it."""
    if not cycles:
        raise ValueError("cycle set is empty")
    best = best_cycle = None
    for c in cycles:
        r = cycle_ratio(c, o)
        if best is None or r > best:
            best, best_cycle = r, c
    return best, best_cycle


@dataclass(frozen=True)
class IntWitness:
    value: Fraction
    orientation: AcyclicOrientation
    critical_cycle: SimpleCycle | None
    suggested_k: int | None
    orientations_scanned: int
    cycle_count: int

    @property
    def forest(self) -> bool:
        return self.critical_cycle is None


def chi_int_star(g: Graph, caps: Caps = DEFAULT_CAPS) -> IntWitness:
    """Interleaved multichromatic number with a minimizing orientation and critical cycle.

    Forests give 2 outright. Otherwise the value is the minimum over acyclic
    orientations of the largest cycle ratio; an orientation is abandoned as soon
    as one of its cycles reaches the best value found so far, which cannot
    change the minimum and keeps the lexicographically first minimizer.
    """
    _require_edges(g)
    if is_forest(g):
        o = next(enumerate_acyclic(g, caps.edges))
        return IntWitness(Fraction(2), o, None, None, 0, 0)

    cycles = enumerate_simple_cycles(g, caps.cycles)
    indexed = _cycle_arc_index(g, cycles)
    best: Fraction | None = None
    best_o = None
    scanned = 0
    for o in enumerate_acyclic(g, caps.edges):
        scanned += 1
        worst = Fraction(0)
        for size, arcs in indexed:
            r = Fraction(size, _minority(o.dirs, arcs))
            if r > worst:
                worst = r
                if best is not None and worst >= best:
                    break
        else:
            best, best_o = worst, o

    value, critical = orientation_score(g, best_o, cycles)
    assert value == best
    plus, minus = direction_counts(critical, best_o)
    return IntWitness(value, best_o, critical, min(plus, minus), scanned, len(cycles))


def chi_via_orientations(g: Graph, caps: Caps = DEFAULT_CAPS) -> tuple[int, AcyclicOrientation]:
    """Chromatic number as the shortest longest-path over all acyclic orientations."""
    best = best_o = None
    for o in enumerate_acyclic(g, caps.edges):
        count, _ = longest_path(o.digraph())
        if best is None or count < best:
            best, best_o = count, o
    return best, best_o


def inner_min_ratio(g: Graph, o: AcyclicOrientation, cycles: Sequence[SimpleCycle]) -> Fraction:
    """``min over cycles of min(m+, m-) / |c|``: the reciprocal of :func:`orientation_score`."""
    return min(Fraction(min(direction_counts(c, o)), c.size) for c in cycles)
