"""Command-line front end.

Exit codes: 0 success, 1 input error, 2 cap exceeded.
"""

from __future__ import annotations

import argparse
import io
import json
import random
import sys
import time
from typing import Callable

from . import generators, oracle
from .config import DEFAULT_CAPS, CapExceeded, Caps
from .cycles import enumerate_simple_cycles
from .evaluators import chi_int_star, chi_via_orientations, format_ratio, inner_min_ratio
from .graph import Graph, GraphFormatError, components, guess_format, parse_graph, serialize_graph
from .lexproduct import build_product, check_lemma3, chi_int_k, derive_interleaved_coloring
from .orientations import AcyclicOrientation, enumerate_acyclic, parse_orientation
from .ser import concurrency, run

EXIT_OK, EXIT_INPUT, EXIT_CAP = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


# --- helpers ----------------------------------------------------------------


def _read_graph(args, stdin: io.TextIOBase | None) -> Graph:
    if args.file == "-":
        text = (stdin or sys.stdin).read()
    else:
        with open(args.file) as fh:
            text = fh.read()
    fmt = args.format if args.format != "auto" else guess_format(text)
    return parse_graph(text, fmt)


def _caps(args) -> Caps:
    return Caps(edges=args.cap_edges, cycles=args.cap_cycles)


def _emit(args, out, record: dict, text_lines: list[str]) -> None:
    if args.json:
        out.write(json.dumps(record, indent=2) + "\n")
    else:
        out.write("\n".join(text_lines) + "\n")


def _orientation_list(o: AcyclicOrientation) -> list[str]:
    return o.serialize().split()


# --- subcommands ------------------------------------------------------------


def cmd_analyze(args, g: Graph, out) -> None:
    caps = _caps(args)
    t0 = time.perf_counter()
    w = chi_int_star(g, caps)
    chi, chi_o = chi_via_orientations(g, caps)
    elapsed = time.perf_counter() - t0
    record = {
        "graph": {"n": g.n, "m": g.m, "components": len(components(g))},
        "forest": w.forest,
        "chi_int_star": format_ratio(w.value),
        "suggested_k": w.suggested_k,
        "critical_cycle": w.critical_cycle.serialize() if w.critical_cycle else None,
        "orientation": _orientation_list(w.orientation),
        "chi": chi,
        "chi_orientation": _orientation_list(chi_o),
        "counts": {"orientations": w.orientations_scanned, "cycles": w.cycle_count},
    }
    if args.timing:
        record["timing_s"] = round(elapsed, 6)
    lines = [
        f"graph: n={g.n} m={g.m}",
        f"chi_int_star: {format_ratio(w.value)}" + (" (forest)" if w.forest else ""),
    ]
    if w.forest:
        lines.append("critical cycle: none")
    else:
        lines += [
            f"critical cycle: {w.critical_cycle.serialize()}",
            f"suggested k: {w.suggested_k}",
            f"orientation: {w.orientation.serialize()}",
            f"scanned {w.orientations_scanned} acyclic orientations, {w.cycle_count} simple cycles",
        ]
    lines.append(f"chi: {chi}")
    if args.timing:
        lines.append(f"time: {elapsed:.3f}s")
    _emit(args, out, record, lines)


def cmd_chi(args, g: Graph, out) -> None:
    chi, o = chi_via_orientations(g, _caps(args))
    _emit(args, out, {"chi": chi, "orientation": _orientation_list(o)}, [str(chi)])


def cmd_chi_int_k(args, g: Graph, out) -> None:
    caps = _caps(args)
    value, lo = chi_int_k(g, args.k, caps)
    record = {"k": args.k, "chi_int_k": value, "orientation": _orientation_list(lo.base_orientation)}
    lines = [str(value)]
    if args.coloring:
        coloring = derive_interleaved_coloring(g, lo.base_orientation, args.k, caps)
        record["coloring"] = [list(cs) for cs in coloring.colors]
        record["palette"] = coloring.palette
        lines.append(coloring.serialize().rstrip("\n"))
    _emit(args, out, record, lines)


def cmd_orientations(args, g: Graph, out) -> None:
    orientations = list(enumerate_acyclic(g, args.cap_edges))
    record: dict = {"count": len(orientations)}
    lines = [str(len(orientations))]
    if args.list:
        record["orientations"] = [_orientation_list(o) for o in orientations]
        lines = [o.serialize() for o in orientations]
    _emit(args, out, record, lines)


def cmd_cycles(args, g: Graph, out) -> None:
    cycles = enumerate_simple_cycles(g, args.cap_cycles)
    record: dict = {"count": len(cycles)}
    lines = [str(len(cycles))]
    if args.list:
        record["cycles"] = [c.serialize() for c in cycles]
        lines = [c.serialize() for c in cycles]
    _emit(args, out, record, lines)


def cmd_product(args, g: Graph, out) -> None:
    p = build_product(g, args.k)
    edges = p.edges()
    record = {"k": args.k, "n": p.n, "m": len(edges), "edges": sorted([min(e), max(e)] for e in edges)}
    if args.json:
        _emit(args, out, record, [])
    else:
        out.write(serialize_graph(p.as_graph(), "edgelist"))


def cmd_ser(args, g: Graph, out) -> None:
    if args.orientation:
        o = parse_orientation(g, args.orientation)
    elif args.best:
        o = chi_int_star(g, _caps(args)).orientation
    else:
        o = next(enumerate_acyclic(g, args.cap_edges))
    r = run(o, args.max_steps)
    record = {
        "initial": _orientation_list(o),
        "tail": r.tail_start,
        "period": r.period,
        "ops_per_node": list(r.ops_per_node),
    }
    lines = [f"tail: {r.tail_start}", f"period: {r.period}", f"ops per node: {list(r.ops_per_node)}"]
    try:
        conc = concurrency(r)
    except ValueError as exc:
        record["concurrency"] = None
        lines.append(f"concurrency: n/a ({exc})")
    else:
        record["concurrency"] = format_ratio(conc)
        record["r"] = r.ops_per_node[0]
        formula = inner_min_ratio(g, o, enumerate_simple_cycles(g, args.cap_cycles))
        record["cycle_formula"] = format_ratio(formula)
        lines += [f"r: {r.ops_per_node[0]}", f"concurrency: {format_ratio(conc)}", f"cycle formula: {format_ratio(formula)}"]
    if args.trace:
        record["trace"] = [_orientation_list(s) for s in r.states]
        lines += [f"{i}: {s.serialize()}" for i, s in enumerate(r.states)]
    _emit(args, out, record, lines)


def cmd_lemma3(args, g: Graph, out) -> None:
    caps = _caps(args)
    if args.orientation:
        orientations = [parse_orientation(g, args.orientation)]
    else:
        orientations = list(enumerate_acyclic(g, caps.edges))
    failures = []
    paths = 0
    for o in orientations:
        rep = check_lemma3(g, o, args.k, caps)
        paths += rep.paths_checked
        if not rep.ok:
            failures.append({"orientation": _orientation_list(o), "violations": list(rep.violations)})
    record = {"k": args.k, "ok": not failures, "orientations": len(orientations), "paths": paths, "failures": failures}
    lines = [f"{'ok' if not failures else 'FAILED'}: {len(orientations)} orientations, {paths} longest paths checked"]
    for f in failures:
        lines.append(" ".join(f["orientation"]) + ": " + "; ".join(f["violations"]))
    _emit(args, out, record, lines)
    if failures:
        raise _Failed


class _Failed(Exception):
    pass


def cmd_oracle(args, g: Graph, out) -> None:
    if args.oracle == "chi-k":
        value = oracle.brute_chi_k(g, args.k, args.interleaved)
        _emit(args, out, {"k": args.k, "interleaved": args.interleaved, "chi_k": value}, [str(value)])
    elif args.oracle == "chromatic":
        value = oracle.brute_chromatic(g)
        _emit(args, out, {"chi": value}, [str(value)])
    elif args.oracle == "cycles":
        cycles = oracle.brute_cycles(g)
        _emit(args, out, {"count": len(cycles), "cycles": [c.serialize() for c in cycles]},
              [str(len(cycles))] + ([c.serialize() for c in cycles] if args.list else []))
    elif args.oracle == "acyclic-count":
        value = oracle.brute_acyclic_count(g)
        _emit(args, out, {"count": value}, [str(value)])


def cmd_gen(args, out) -> None:
    rng = random.Random(args.seed)
    kind = args.kind
    if kind == "gnp":
        g = generators.gnp(args.n, args.p, rng)
    elif kind == "forest":
        g = generators.random_forest(args.n, rng, args.trees)
    elif kind == "connected":
        g = generators.random_connected(args.n, rng, args.p)
    elif kind == "edgeless":
        g = generators.edgeless_graph(args.n)
    else:
        g = generators.NAMED[kind](args.n)
    out.write(serialize_graph(g, args.out_format))


# --- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON document")
    common.add_argument("--cap-edges", type=int, default=DEFAULT_CAPS.edges,
                        help=f"max edges for exhaustive orientation scans (default {DEFAULT_CAPS.edges})")
    common.add_argument("--cap-cycles", type=int, default=DEFAULT_CAPS.cycles,
                        help=f"max simple cycles (default {DEFAULT_CAPS.cycles})")
    common.add_argument("--seed", type=int, default=0, help="seed for random generation (gen)")
    common.add_argument("--timing", action="store_true", help="include wall-clock timing (breaks byte-identical output)")

    with_file = _Parser(add_help=False, parents=[common])
    with_file.add_argument("file", help="graph file, or - for stdin")
    with_file.add_argument("--format", choices=["auto", "dimacs", "edgelist"], default="auto")

    parser = _Parser(prog="intchrom", description="Interleaved multichromatic number and friends.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sub.add_parser("analyze", parents=[with_file], help="interleaved multichromatic number with witnesses, plus chi")
    sub.add_parser("chi", parents=[with_file], help="chromatic number via acyclic orientations")

    p = sub.add_parser("chi-int-k", parents=[with_file], help="interleaved k-chromatic number via layered orientations")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--coloring", action="store_true", help="also print the derived interleaved coloring")

    p = sub.add_parser("orientations", parents=[with_file], help="acyclic orientations")
    grp = p.add_mutually_exclusive_group()
    grp.add_argument("--count", action="store_true", help="print only the count (default)")
    grp.add_argument("--list", action="store_true")

    p = sub.add_parser("cycles", parents=[with_file], help="simple cycles")
    p.add_argument("--list", action="store_true")

    p = sub.add_parser("product", parents=[with_file], help="lexicographic product with K_k")
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("ser", parents=[with_file], help="scheduling-by-edge-reversal run")
    grp = p.add_mutually_exclusive_group()
    grp.add_argument("--orientation", help="initial orientation as 'u>v' pairs")
    grp.add_argument("--best", action="store_true", help="start from the optimal orientation")
    p.add_argument("--max-steps", type=int, default=None)
    p.add_argument("--trace", action="store_true", help="dump every visited state")

    p = sub.add_parser("lemma3-check", parents=[with_file], help="check longest-path morphology in layered products")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--orientation", help="check one orientation instead of all")

    p = sub.add_parser("oracle", help="brute-force references")
    osub = p.add_subparsers(dest="oracle", required=True, parser_class=_Parser)
    q = osub.add_parser("chi-k", parents=[with_file])
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--interleaved", action="store_true")
    osub.add_parser("chromatic", parents=[with_file])
    q = osub.add_parser("cycles", parents=[with_file])
    q.add_argument("--list", action="store_true")
    osub.add_parser("acyclic-count", parents=[with_file])

    p = sub.add_parser("gen", parents=[common], help="write a named or random graph")
    p.add_argument("kind", choices=sorted(generators.NAMED) + ["gnp", "forest", "connected", "edgeless"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, default=0.4, help="edge probability (gnp, connected)")
    p.add_argument("--trees", type=int, default=1, help="components (forest)")
    p.add_argument("--out-format", choices=["dimacs", "edgelist"], default="dimacs")
    return parser


COMMANDS: dict[str, Callable] = {
    "analyze": cmd_analyze,
    "chi": cmd_chi,
    "chi-int-k": cmd_chi_int_k,
    "orientations": cmd_orientations,
    "cycles": cmd_cycles,
    "product": cmd_product,
    "ser": cmd_ser,
    "lemma3-check": cmd_lemma3,
    "oracle": cmd_oracle,
}


def main(argv: list[str] | None = None, stdin=None, stdout=None, stderr=None) -> int:
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        err.write(f"{exc}\n")
        return EXIT_INPUT
    try:
        if args.command == "gen":
            cmd_gen(args, out)
        else:
            g = _read_graph(args, stdin)
            COMMANDS[args.command](args, g, out)
    except CapExceeded as exc:
        err.write(f"cap exceeded: {exc}\n")
        return EXIT_CAP
    except _Failed:
        return EXIT_INPUT
    except (GraphFormatError, OSError, ValueError, KeyError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT
    return EXIT_OK


def run_cli(argv: list[str], stdin_text: str | None = None) -> tuple[int, str]:
    """Run in-process, returning ``(exit code, stdout text)``."""
    out, err = io.StringIO(), io.StringIO()
    stdin = io.StringIO(stdin_text) if stdin_text is not None else None
    code = main(argv, stdin=stdin, stdout=out, stderr=err)
    return code, out.getvalue()


if __name__ == "__main__":
    sys.exit(main())
