"""Longest-path ratio l(k)/k of the layered product under the optimal orientation.

Usage:
    python scripts/convergence.py tests/fixtures/c5.col --kmax 30 [--step 5]
"""

from __future__ import annotations

import argparse
from fractions import Fraction

from intchrom.evaluators import chi_int_star, format_ratio
from intchrom.graph import guess_format, parse_graph
from intchrom.lexproduct import layered_orientation, winding_path


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("graph")
    ap.add_argument("--kmax", type=int, default=20)
    ap.add_argument("--step", type=int, default=1)
    args = ap.parse_args()

    text = open(args.graph).read()
    g = parse_graph(text, guess_format(text))
    w = chi_int_star(g)
    print(f"target {format_ratio(w.value)} = {float(w.value):.4f}")
    if w.forest:
        print("forest: every layered product has longest path 2k")
        return
    print(f"orientation {w.orientation.serialize()}  critical cycle {w.critical_cycle.serialize()}")
    print(f"{'k':>4} {'l(k)':>6} {'l(k)/k':>8} {'winding':>8} {'gap %':>7}")
    for k in range(1, args.kmax + 1, args.step):
        count, _ = layered_orientation(g, w.orientation, k).longest()
        wind = winding_path(w.critical_cycle, w.orientation, k).node_count
        ratio = Fraction(count, k)
        gap = 100 * float((ratio - w.value) / w.value)
        print(f"{k:>4} {count:>6} {float(ratio):>8.4f} {wind:>8} {gap:>7.2f}")


if __name__ == "__main__":
    main()
