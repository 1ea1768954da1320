"""Size caps shared by the exhaustive routines."""

from __future__ import annotations

from dataclasses import dataclass


class CapExceeded(RuntimeError):
    """Input too large for exhaustive analysis under the active caps."""


@dataclass(frozen=True)
class Caps:
    edges: int = 20  # exhaustive orientation scans
    cycles: int = 10**6
    product_nodes: int = 2000
    longest_paths: int = 10**5  # all-longest-path enumeration in the morphology check


DEFAULT_CAPS = Caps()
