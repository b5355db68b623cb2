"""Command-line experiment harness.

Verbs:
  generate   build the configured network and write its edge list + degree CSV
  threshold  write the analytic threshold table for the configured grid
  simulate   run a full scenario sweep (CSV + SVG per plot family + manifest)
  compare    cross-check mean-field against Monte Carlo per grid point

Exit codes: 0 success, 1 configuration error, 2 runtime failure,
3 comparison-tolerance failure.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import replace

import numpy as np

from ..netgen import build_ba_network, build_configuration_network, sample_powerlaw_distribution, \
    write_distribution_csv, write_edge_list
from .scenario import (
    ScenarioError,
    compare_engines,
    parse_scenario,
    run_scenario,
    threshold_table,
    write_comparison,
    write_threshold_table,
)

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_RUNTIME = 2
EXIT_TOLERANCE = 3


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--config", required=True, help="scenario configuration file")
    sub.add_argument("--seed", type=int, default=None, help="override the master seed")
    sub.add_argument("--out", default=None, help="override the output directory")
    sub.add_argument("--workers", type=int, default=None, help="override the worker count")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rumornet", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in (
        ("generate", "write the configured network as an edge list"),
        ("threshold", "write analytic threshold tables"),
        ("simulate", "run one scenario sweep"),
        ("compare", "mean-field vs Monte Carlo cross-check"),
    ):
        _add_common(sub.add_parser(name, help=help_text))
    return parser


def _load(args) -> "Scenario":
    scenario = parse_scenario(args.config)
    overrides = {}
    if args.seed is not None:
        overrides["seed"] = args.seed
    if args.out is not None:
        overrides["out_dir"] = args.out
    if args.workers is not None:
        overrides["workers"] = max(1, args.workers)
    return replace(scenario, **overrides) if overrides else scenario


def _cmd_generate(scenario) -> int:
    os.makedirs(scenario.out_dir, exist_ok=True)
    rng = np.random.default_rng(np.random.SeedSequence([scenario.seed, 0]).generate_state(1)[0])
    if scenario.net_kind == "ba":
        network = build_ba_network(scenario.n_nodes, scenario.m0, scenario.m, rng)
        dist = network.empirical_distribution()
    else:
        dist = sample_powerlaw_distribution(scenario.gamma, scenario.k_min, scenario.n_nodes)
        network = build_configuration_network(dist, scenario.n_nodes, rng)
    edge_path = os.path.join(scenario.out_dir, "network.edgelist")
    dist_path = os.path.join(scenario.out_dir, "degree_distribution.csv")
    write_edge_list(network, edge_path)
    write_distribution_csv(dist, dist_path)
    print(f"wrote {edge_path} ({network.n} nodes, {network.edge_count} edges, "
          f"{network.erased_edges} erased stub pairs)")
    print(f"wrote {dist_path}")
    return EXIT_OK


def _cmd_threshold(scenario) -> int:
    rows = threshold_table(scenario)
    files = write_threshold_table(scenario, rows, scenario.out_dir)
    for name in files:
        print(f"wrote {os.path.join(scenario.out_dir, name)}")
    return EXIT_OK


def _cmd_simulate(scenario) -> int:
    manifest = run_scenario(scenario)
    print(f"completed {manifest['completed']}/{manifest['points']} grid points")
    for name, digest in manifest["files"].items():
        print(f"wrote {os.path.join(scenario.out_dir, name)} sha256={digest[:12]}")
    if manifest["failures"]:
        for failure in manifest["failures"]:
            print(f"point {failure['point']} failed: {failure['error']}", file=sys.stderr)
    return EXIT_OK


def _cmd_compare(scenario) -> int:
    report = compare_engines(scenario)
    files = write_comparison(scenario, report, scenario.out_dir)
    for name in files:
        print(f"wrote {os.path.join(scenario.out_dir, name)}")
    worst = max((row["deviation"] for row in report["rows"]), default=0.0)
    print(f"max deviation {worst:.4f} against tolerance {report['tolerance']}")
    if report["failures"]:
        for failure in report["failures"]:
            print(f"point {failure['point']} failed: {failure['error']}", file=sys.stderr)
        return EXIT_RUNTIME
    return EXIT_OK if report["all_passed"] else EXIT_TOLERANCE


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        scenario = _load(args)
    except ScenarioError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    try:
        handler = {
            "generate": _cmd_generate,
            "threshold": _cmd_threshold,
            "simulate": _cmd_simulate,
            "compare": _cmd_compare,
        }[args.command]
        return handler(scenario)
    except ScenarioError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except Exception as exc:
        print(f"runtime failure: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())
