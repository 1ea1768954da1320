"""Scheduling by edge reversal: every sink reverses all its edges at each step.

The periodic regime reached from an acyclic orientation has each node of a
connected graph operate ``r`` times per ``p`` steps; ``r/p`` measures
concurrency and is compared against the cycle formula elsewhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .evaluators import EdgelessGraphError
from .graph import is_connected, is_forest
from .orientations import AcyclicOrientation, sinks


class NoPeriodFound(RuntimeError):
    pass


def step(o: AcyclicOrientation) -> AcyclicOrientation:
    g = o.graph
    if g.m == 0:
        raise EdgelessGraphError("graph has no edges")
    s = sinks(o)
    # adjacent sinks cannot exist, so no edge is flipped twice
    return o.flipped(i for i, (u, v) in enumerate(g.edges) if u in s or v in s)


@dataclass(frozen=True)
class SerRun:
    initial: AcyclicOrientation
    states: tuple[AcyclicOrientation, ...]  # states[0..tail_start+period], last one repeats
    tail_start: int
    period: int
    ops_per_node: tuple[int, ...]

    @property
    def periodic_states(self) -> tuple[AcyclicOrientation, ...]:
        return self.states[self.tail_start : self.tail_start + self.period]


def default_max_steps(o: AcyclicOrientation) -> int:
    return 2 * 2 ** o.graph.m


def run(o: AcyclicOrientation, max_steps: int | None = None) -> SerRun:
    """Iterate :func:`step` until a state repeats; count sink events over one period."""
    if max_steps is None:
        max_steps = default_max_steps(o)
    if max_steps < 1:
        raise ValueError("max_steps must be at least 1")
    seen: dict[tuple[bool, ...], int] = {o.dirs: 0}
    states = [o]
    cur = o
    for i in range(1, max_steps + 1):
        cur = step(cur)
        states.append(cur)
        if cur.dirs in seen:
            tail = seen[cur.dirs]
            period = i - tail
            ops = [0] * o.graph.n
            for s in states[tail : tail + period]:
                for v in sinks(s):
                    ops[v] += 1
            return SerRun(o, tuple(states), tail, period, tuple(ops))
        seen[cur.dirs] = i
    raise NoPeriodFound(f"no repeated state within {max_steps} steps")


def concurrency(r: SerRun) -> Fraction:
    """Operations per node per step in the periodic regime, ``r/p``."""
    g = r.initial.graph
    if not is_connected(g):
        raise ValueError("concurrency needs a connected graph; decompose into components first")
    if is_forest(g):
        raise ValueError("concurrency is only compared on graphs with a cycle")
    ops = set(r.ops_per_node)
    if len(ops) != 1:
        raise AssertionError(f"nodes operate unequally in the periodic regime: {r.ops_per_node}")
    return Fraction(ops.pop(), r.period)
