"""Command-line harness: exact BC, estimator c-sweeps, model-formula checks,
and vertex-vs-pair cost comparison.

Exit codes: 0 success, 1 usage error, 2 data error, 3 model-check failure.
"""

from __future__ import annotations

import argparse
import sys
import time

import numpy as np

from . import __version__
from .bench import (
    default_target,
    exact_bc_cached,
    run_cost_comparison,
    run_model_checks,
    run_sweep,
    write_check_csv,
    write_cost_csv,
    write_sweep_csv,
)
from .exact import brandes_bc, write_bc_csv
from .graph import EdgeListParseError, load_edge_list


class _Parser(argparse.ArgumentParser):
    # Usage errors exit 1 (argparse defaults to 2, which we reserve for data errors).
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


class DataError(Exception):
    pass


def _add_dataset_args(p):
    p.add_argument("--dataset", required=True, help="SNAP-style edge-list file (.gz accepted)")
    p.add_argument("--out", required=True, help="output CSV path")


def _add_estimator_args(p):
    p.add_argument("--target", type=int, default=None, help="target vertex (original ID); defaults to the highest exact-BC vertex")
    p.add_argument("--seed", type=int, default=1, help="base seed; replication r uses seed+r")
    p.add_argument("--reps", type=int, default=10, help="replications per measurement")
    p.add_argument("--max-samples", type=int, default=None, help="sample cap per run (default n^2)")


def build_parser() -> _Parser:
    parser = _Parser(prog="bcsample", description=__doc__)
    parser.add_argument("--version", action="version", version=f"bcsample {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("exact", help="exact BC for every vertex, written as vertex_id,bc")
    _add_dataset_args(p)
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("sweep", help="c-sweep of one estimator against the exact oracle")
    _add_dataset_args(p)
    _add_estimator_args(p)
    p.add_argument("--method", choices=["vertex", "pair"], required=True)
    p.add_argument("--c-min", type=float, default=1.0)
    p.add_argument("--c-max", type=float, default=5.0)
    p.add_argument("--c-step", type=float, default=0.5)
    p.add_argument("--manifests", default=None, help="run-manifest JSONL path (default <out>.manifests.jsonl)")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("model-check", help="validate every model formula numerically")
    p.add_argument("--out", required=True, help="output CSV path")
    p.add_argument("--seed", type=int, default=20240)
    p.add_argument("--runs", type=int, default=100_000, help="stopping-rule simulation runs")
    p.add_argument("--ks-samples", type=int, default=1_000_000)
    p.add_argument("--corrupt", default=None, help=argparse.SUPPRESS)  # failure-path test hook
    p.set_defaults(func=cmd_model_check)

    p = sub.add_parser("compare-cost", help="settled-vertices cost of both estimators at equal c")
    _add_dataset_args(p)
    _add_estimator_args(p)
    p.add_argument("--c", type=float, default=1.0)
    p.set_defaults(func=cmd_compare_cost)

    return parser


def _load_graph(path):
    try:
        g = load_edge_list(path)
    except FileNotFoundError:
        raise DataError(f"dataset not found: {path}")
    except (EdgeListParseError, ValueError) as e:
        raise DataError(f"{path}: {e}")
    print(f"loaded {path}: n={g.n} m={g.m}")
    return g


def _resolve_target(args, g, bc):
    if args.target is None:
        target = default_target(bc)
        print(f"target defaulted to highest-BC vertex {int(g.original_ids[target])} (bc={bc[target]:.6g})")
    else:
        try:
            target = g.index_of(args.target)
        except KeyError:
            raise DataError(f"target ID {args.target} not in graph")
    if bc[target] <= 0:
        raise DataError(f"target {int(g.original_ids[target])} has zero exact BC; factor is undefined")
    return target


def cmd_exact(args) -> int:
    g = _load_graph(args.dataset)
    t0 = time.perf_counter()
    bc = brandes_bc(g)
    wall = time.perf_counter() - t0
    with open(args.out, "w", newline="") as fh:
        write_bc_csv(g, bc, fh)
    print(f"exact BC of {g.n} vertices in {wall:.2f}s -> {args.out}")
    return 0


def cmd_sweep(args) -> int:
    g = _load_graph(args.dataset)
    bc = exact_bc_cached(args.dataset, g)
    target = _resolve_target(args, g, bc)
    grid = np.arange(args.c_min, args.c_max + 1e-9, args.c_step)
    if grid.size == 0:
        raise DataError("empty c grid")
    t0 = time.perf_counter()
    records, manifests = run_sweep(
        g, target, args.method, grid, args.reps, args.seed,
        float(bc[target]), str(args.dataset), args.max_samples,
    )
    wall = time.perf_counter() - t0
    with open(args.out, "w", newline="") as fh:
        write_sweep_csv(records, fh)
    manifest_path = args.manifests or f"{args.out}.manifests.jsonl"
    with open(manifest_path, "w") as fh:
        for m in manifests:
            fh.write(m.to_json() + "\n")
    print(f"{len(records)} grid points x {args.reps} reps in {wall:.2f}s -> {args.out}")
    return 0


def cmd_model_check(args) -> int:
    try:
        rows = run_model_checks(
            seed=args.seed, ks_samples=args.ks_samples,
            stopping_runs=args.runs, corrupt=args.corrupt,
        )
    except ValueError as e:
        raise DataError(str(e))
    with open(args.out, "w", newline="") as fh:
        write_check_csv(rows, fh)
    failures = [r for r in rows if r.status != "pass"]
    print(f"{len(rows)} formula checks, {len(failures)} failures -> {args.out}")
    for r in failures:
        print(f"FAIL {r.formula}: analytic={r.analytic!r} empirical={r.empirical!r}")
    return 3 if failures else 0


def cmd_compare_cost(args) -> int:
    g = _load_graph(args.dataset)
    bc = exact_bc_cached(args.dataset, g)
    target = _resolve_target(args, g, bc)
    records = run_cost_comparison(g, target, args.c, args.reps, args.seed, args.max_samples)
    with open(args.out, "w", newline="") as fh:
        write_cost_csv(records, fh)
    for r in records:
        print(
            f"{r.method}: mean_k={r.mean_k:.1f}"
            f" mean_settled_per_sample={r.mean_settled_per_sample:.2f}"
            f" wall={r.wall_time_s:.2f}s"
        )
    cheaper = min(records, key=lambda r: r.mean_settled_per_sample)
    print(f"cheaper per sample: {cheaper.method}")
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DataError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
