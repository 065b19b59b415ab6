"""Command-line front end.

Exit codes: 0 success, 1 verification/property failure (with a reproduction
grid on stdout), 2 usage errors.  ``LATTICE_SEED`` overrides ``--seed``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from .duality import dual_fence, verify_theorem5
from .gridio import GridParseError, emit_grid, parse_grid, render_svg, report_json
from .oracle import CheckEngine, EnumSpec, McSpec, enumerate_window, mc_duality, random_grid

USAGE_ERROR = 2
CHECK_ERROR = 1


def _seed(args: argparse.Namespace) -> int:
    env = os.environ.get("LATTICE_SEED")
    if env is not None:
        return int(env)
    return args.seed


def _read_grid(args: argparse.Namespace):
    if args.input == "-":
        text = sys.stdin.read()
    else:
        with open(args.input, "r", encoding="ascii") as fh:
            text = fh.read()
    return parse_grid(text)


def _cmd_gen(args: argparse.Namespace) -> int:
    spec = McSpec(p=args.p, size=args.size, trials=1, seed=_seed(args))
    sys.stdout.write(emit_grid(random_grid(spec, 0)))
    return 0


def _cmd_analyze(args: argparse.Namespace) -> int:
    from .boundary import boundary_edges, cycle_graph, is_acyclic, outermost_boundary
    from .components import component_of, is_finite

    grid = _read_grid(args)
    doc: dict = {"format": "analyze v1"}
    for kind in ("plus", "star"):
        comp = component_of(grid, grid.origin, kind)
        ob = outermost_boundary(comp)
        doc[kind] = {
            "squares": [list(s) for s in comp.ordered()],
            "finite": is_finite(grid, comp),
            "cycles": [[list(p) for p in c.corners_closed()] for c in ob.cycles],
            "boundary_edges": len(boundary_edges(grid, comp)),
            "cycle_graph_acyclic": is_acyclic(cycle_graph(ob)),
        }
    json.dump(doc, sys.stdout, sort_keys=True, separators=(",", ":"))
    sys.stdout.write("\n")
    return 0


def _cmd_dual(args: argparse.Namespace) -> int:
    grid = _read_grid(args)
    t0 = time.perf_counter()
    try:
        report = dual_fence(grid)
        verify_theorem5(report)
    except ValueError as exc:
        print(f"error: {exc}")
        sys.stdout.write(emit_grid(grid))
        return CHECK_ERROR
    ms = (time.perf_counter() - t0) * 1000.0
    if args.format == "svg":
        sys.stdout.write(render_svg(grid, report))
    else:
        sys.stdout.write(report_json(report, timing_ms=round(ms, 3)))
    if not report.all_ok():
        sys.stdout.write(emit_grid(grid))
        return CHECK_ERROR
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    grid = _read_grid(args)
    ok, failures = CheckEngine().run(grid)
    if failures:
        for f in failures:
            print(f"FAIL {f}")
        sys.stdout.write(emit_grid(grid))
        return CHECK_ERROR
    print("ok: all checks passed" if ok else "ok")
    return 0


def _enum_shard(payload):
    spec, lo, hi = payload
    res = enumerate_window(spec, mask_range=(lo, hi))
    return res.configs, res.failures


def _cmd_enum(args: argparse.Namespace) -> int:
    spec = EnumSpec(width=args.size, height=args.size, margin=args.margin)
    origin_free = 1 if (0, 0) in spec.block_squares() else 0
    total = 1 << (spec.width * spec.height - origin_free)
    if args.jobs > 1:
        step = (total + args.jobs - 1) // args.jobs
        shards = [(spec, lo, min(lo + step, total)) for lo in range(0, total, step)]
        configs, failures = 0, []
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            for c, f in pool.map(_enum_shard, shards):
                configs += c
                failures.extend(f)
        failures.sort()
    else:
        res = enumerate_window(spec)
        configs, failures = res.configs, res.failures
    doc = {"configs": configs, "failures": len(failures)}
    json.dump(doc, sys.stdout, sort_keys=True)
    sys.stdout.write("\n")
    for grid_text, fails in failures:
        print("FAIL " + "; ".join(fails))
        sys.stdout.write(grid_text)
    return CHECK_ERROR if failures else 0


def _mc_shard(payload):
    spec, lo, hi = payload
    stats = mc_duality(spec, trial_range=(lo, hi))
    return stats.trials, stats.applicable, stats.finite, stats.failures


def _cmd_mc(args: argparse.Namespace) -> int:
    spec = McSpec(p=args.p, size=args.size, trials=args.trials, seed=_seed(args))
    if args.jobs > 1:
        step = (spec.trials + args.jobs - 1) // args.jobs
        shards = [
            (spec, lo, min(lo + step, spec.trials))
            for lo in range(0, spec.trials, step)
        ]
        trials = applicable = finite = 0
        failures = []
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            for t, a, f, fl in pool.map(_mc_shard, shards):
                trials += t
                applicable += a
                finite += f
                failures.extend(fl)
        failures.sort()
        finite_fraction = finite / trials if trials else 0.0
    else:
        stats = mc_duality(spec)
        trials, applicable, finite = stats.trials, stats.applicable, stats.finite
        failures, finite_fraction = stats.failures, stats.finite_fraction
    doc = {
        "trials": trials,
        "applicable": applicable,
        "finite_fraction": finite_fraction,
        "failures": len(failures),
    }
    json.dump(doc, sys.stdout, sort_keys=True)
    sys.stdout.write("\n")
    for grid_text, fails in failures:
        print("FAIL " + "; ".join(fails))
        sys.stdout.write(grid_text)
    return CHECK_ERROR if failures else 0


def _cmd_render(args: argparse.Namespace) -> int:
    grid = _read_grid(args)
    report = None
    try:
        report = dual_fence(grid)
    except ValueError:
        pass
    sys.stdout.write(render_svg(grid, report))
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="latticedual",
        description="Outermost boundaries and vacant fences on the unit-square tiling.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def add_input(p):
        p.add_argument("--input", "-i", default="-", help="grid file, '-' for stdin")

    p = sub.add_parser("gen", help="emit a random grid")
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--size", type=int, default=16)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=_cmd_gen)

    p = sub.add_parser("analyze", help="components and boundaries as JSON")
    add_input(p)
    p.set_defaults(fn=_cmd_analyze)

    p = sub.add_parser("dual", help="run the fence pipeline")
    add_input(p)
    p.add_argument("--format", choices=("json", "svg"), default="json")
    p.set_defaults(fn=_cmd_dual)

    p = sub.add_parser("verify", help="run every theorem check on one grid")
    add_input(p)
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("enum", help="exhaust all occupancy assignments of a block")
    p.add_argument("--size", type=int, default=3, help="block side length")
    p.add_argument("--margin", type=int, default=3)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(fn=_cmd_enum)

    p = sub.add_parser("mc", help="Monte Carlo duality sampling")
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--size", type=int, default=24)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(fn=_cmd_mc)

    p = sub.add_parser("render", help="render a grid (and its fence) as SVG")
    add_input(p)
    p.set_defaults(fn=_cmd_render)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except GridParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
