"""Command-line interface.

Subcommands: girth, cycles, certify, certify-support, recover, simulate.
Vertex and edge ids are 1-based on the command line and in all output,
matching the edge-list file format.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

import numpy as np

from .certify import certify_nup, certify_support
from .cycles import DEFAULT_CYCLE_CAP, enumerate_simple_cycles, girth
from .experiments import config_from_json, run_sweep
from .graphs import parse_graph
from .recovery import SparseSignal, algorithm1_recover, recover_l1


def _load_graph(path: str):
    return parse_graph(Path(path).read_text())


def _load_vector(path: str) -> np.ndarray:
    values = []
    for line in Path(path).read_text().splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            values.append(float(line))
    return np.asarray(values)


def cmd_girth(args) -> int:
    g = _load_graph(args.graph)
    value = girth(g)
    print("inf" if math.isinf(value) else int(value))
    return 0


def cmd_cycles(args) -> int:
    g = _load_graph(args.graph)
    for c in enumerate_simple_cycles(g, cap=args.cap):
        print(" ".join(str(v + 1) for v in c.vertices))
    return 0


def cmd_certify(args) -> int:
    g = _load_graph(args.graph)
    cert = certify_nup(g, args.sparsity)
    json.dump(cert.to_json_dict(), sys.stdout, indent=2)
    print()
    return 0


def cmd_certify_support(args) -> int:
    g = _load_graph(args.graph)
    support = [int(j) - 1 for j in args.support.split(",") if j.strip()]
    cert = certify_support(g, support, cap=args.cap)
    json.dump(cert.to_json_dict(), sys.stdout, indent=2)
    print()
    return 0


def cmd_recover(args) -> int:
    g = _load_graph(args.graph)
    y = _load_vector(args.measurements)
    if y.shape[0] != g.vertex_count:
        raise SystemExit(
            f"measurement file has {y.shape[0]} values but the graph has {g.vertex_count} vertices"
        )
    truth = None
    if args.truth:
        t = _load_vector(args.truth)
        if t.shape[0] != g.edge_count:
            raise SystemExit(
                f"truth file has {t.shape[0]} values but the graph has {g.edge_count} edges"
            )
        truth = SparseSignal.from_dense(t)
    if args.algorithm == "l1":
        report = recover_l1(g, y, truth=truth)
    else:
        report = algorithm1_recover(g, y, truth=truth)
    json.dump(report.to_json_dict(), sys.stdout, indent=2)
    print()
    return 0


def cmd_simulate(args) -> int:
    doc = json.loads(Path(args.config).read_text())
    cfg = config_from_json(doc, _load_graph)
    result = run_sweep(cfg)
    csv_text = result.to_csv()
    if args.out:
        Path(args.out).write_text(csv_text)
    else:
        sys.stdout.write(csv_text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="flowrec",
        description="Sparse recovery of edge signals measured through graph incidence matrices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("girth", help="print the girth of a graph")
    p.add_argument("--graph", required=True)
    p.set_defaults(func=cmd_girth)

    p = sub.add_parser("cycles", help="list all simple cycles, one vertex sequence per line")
    p.add_argument("--graph", required=True)
    p.add_argument("--cap", type=int, default=DEFAULT_CYCLE_CAP)
    p.set_defaults(func=cmd_cycles)

    p = sub.add_parser("certify", help="certify recovery of all s-sparse signals (JSON)")
    p.add_argument("--graph", required=True)
    p.add_argument("--sparsity", type=int, required=True)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser(
        "certify-support", help="certify recovery of all signals on a fixed support (JSON)"
    )
    p.add_argument("--graph", required=True)
    p.add_argument("--support", required=True, help="comma-separated 1-based edge ids")
    p.add_argument("--cap", type=int, default=DEFAULT_CYCLE_CAP)
    p.set_defaults(func=cmd_certify_support)

    p = sub.add_parser("recover", help="recover an edge signal from vertex measurements (JSON)")
    p.add_argument("--graph", required=True)
    p.add_argument("--measurements", required=True, help="file with one value per vertex line")
    p.add_argument("--algorithm", choices=["l1", "subgraph"], default="l1")
    p.add_argument("--truth", help="optional file with one value per edge line")
    p.set_defaults(func=cmd_recover)

    p = sub.add_parser("simulate", help="run a Monte Carlo recovery sweep (CSV)")
    p.add_argument("--config", required=True, help="JSON sweep config file")
    p.add_argument("--out", help="write CSV here instead of stdout")
    p.set_defaults(func=cmd_simulate)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
