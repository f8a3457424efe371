"""Graph generators, random signals, and Monte Carlo recovery sweeps.

A sweep draws random sparse edge signals, synthesizes vertex
measurements through the incidence matrix, runs one or both recovery
pipelines, and reports the empirical probability of exact recovery per
sparsity level.  Everything is deterministic given the seed: each
(level, trial) pair gets its own child RNG stream, so both pipelines
see the same signal and parallel/serial execution order is irrelevant.
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
from dataclasses import dataclass, field

import numpy as np

from .graphs import DirectedGraph, incidence_matrix
from .recovery import SparseSignal, algorithm1_recover, recover_l1

SWEEP_CONFIG_VERSION = 1

ALGORITHMS = ("l1", "subgraph")


def gen_two_cycle_graph(l: int, shared: str = "edge") -> DirectedGraph:
    """Two cycles, one of length 3 and one of length ``l`` (odd, >= 3),
    joined at a shared edge (default) or a shared vertex."""
    if l < 3:
        raise ValueError("cycle length must be >= 3")
    if l % 2 == 0:
        raise ValueError("cycle length must be odd")
    if shared == "edge":
        # Triangle 0-1-2 and an l-cycle through the shared edge (0, 1).
        edges = [(0, 1), (1, 2), (2, 0)]
        path = [1] + list(range(3, 3 + l - 2)) + [0]
        edges += [(path[i], path[i + 1]) for i in range(len(path) - 1)]
        return DirectedGraph(vertex_count=l + 1, edges=tuple(edges))
    if shared == "vertex":
        edges = [(0, 1), (1, 2), (2, 0)]
        ring = [0] + list(range(3, 3 + l - 1))
        edges += [(ring[i], ring[(i + 1) % l]) for i in range(l)]
        return DirectedGraph(vertex_count=l + 2, edges=tuple(edges))
    raise ValueError("shared must be 'edge' or 'vertex'")


def gen_ring_graph(nodes: int) -> DirectedGraph:
    """Directed ring 0 -> 1 -> ... -> nodes-1 -> 0."""
    if nodes < 3:
        raise ValueError("ring needs at least 3 nodes")
    edges = tuple((i, (i + 1) % nodes) for i in range(nodes))
    return DirectedGraph(vertex_count=nodes, edges=edges)


def gen_ring_chord_graph(nodes: int, skip: int) -> DirectedGraph:
    """Ring plus the chords (i, i + skip mod nodes) for every i."""
    if skip < 2:
        raise ValueError("skip must be >= 2 (skip 1 duplicates ring edges)")
    if nodes < 2 * skip + 1:
        raise ValueError("need nodes >= 2 * skip + 1")
    edges = [(i, (i + 1) % nodes) for i in range(nodes)]
    edges += [(i, (i + skip) % nodes) for i in range(nodes)]
    return DirectedGraph(vertex_count=nodes, edges=tuple(edges))


GENERATORS = {
    "two-cycle": gen_two_cycle_graph,
    "ring": gen_ring_graph,
    "ring-chord": gen_ring_chord_graph,
}


def random_sparse_signal(n: int, s: int, rng: np.random.Generator) -> SparseSignal:
    """Uniformly random size-s support with i.i.d. standard normal
    values."""
    if not 0 <= s <= n:
        raise ValueError(f"sparsity {s} outside [0, {n}]")
    support = np.sort(rng.choice(n, size=s, replace=False))
    values = np.zeros(n)
    values[support] = rng.standard_normal(s)
    return SparseSignal.from_dense(values)


@dataclass(frozen=True)
class SweepConfig:
    graph: DirectedGraph
    sparsity_levels: tuple[int, ...]
    trials: int = 300
    seed: int = 0
    algorithms: tuple[str, ...] = ("l1",)
    success_threshold: float = 1e-5

    def __post_init__(self):
        object.__setattr__(self, "sparsity_levels", tuple(int(s) for s in self.sparsity_levels))
        object.__setattr__(self, "algorithms", tuple(self.algorithms))
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        n = self.graph.edge_count
        for s in self.sparsity_levels:
            if not 0 <= s <= n:
                raise ValueError(f"sparsity level {s} outside [0, {n}]")
        for a in self.algorithms:
            if a not in ALGORITHMS:
                raise ValueError(f"unknown algorithm {a!r}")


@dataclass(frozen=True)
class SweepRow:
    algorithm: str
    sparsity: int
    trials: int
    successes: int
    infeasible: int  # subgraph trials whose reduced system was infeasible

    @property
    def probability(self) -> float:
        return self.successes / self.trials


@dataclass(frozen=True)
class SweepResult:
    rows: tuple[SweepRow, ...]
    seed: int
    graph_hash: str
    config: SweepConfig

    def row(self, algorithm: str, sparsity: int) -> SweepRow:
        for r in self.rows:
            if r.algorithm == algorithm and r.sparsity == sparsity:
                return r
        raise KeyError((algorithm, sparsity))

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["algorithm", "sparsity", "trials", "successes", "probability", "seed"])
        for r in self.rows:
            writer.writerow(
                [r.algorithm, r.sparsity, r.trials, r.successes, repr(r.probability), self.seed]
            )
        return buf.getvalue()


def graph_hash(g: DirectedGraph) -> str:
    payload = json.dumps([g.vertex_count, list(map(list, g.edges))]).encode()
    return hashlib.sha256(payload).hexdigest()[:16]


def trial_rng(seed: int, sparsity: int, trial: int) -> np.random.Generator:
    """Independent, order-insensitive child stream for one trial."""
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(sparsity, trial)))


def run_sweep(cfg: SweepConfig) -> SweepResult:
    """Run the Monte Carlo sweep described by ``cfg``.

    Both algorithms (when requested) are evaluated on the same signal
    draw in every trial, so their probabilities are directly comparable.
    """
    g = cfg.graph
    A = incidence_matrix(g)
    n = g.edge_count
    successes = {(a, s): 0 for a in cfg.algorithms for s in cfg.sparsity_levels}
    infeasible = {(a, s): 0 for a in cfg.algorithms for s in cfg.sparsity_levels}
    for s in cfg.sparsity_levels:
        for trial in range(cfg.trials):
            rng = trial_rng(cfg.seed, s, trial)
            truth = random_sparse_signal(n, s, rng)
            y = A @ truth.values
            for algo in cfg.algorithms:
                if algo == "l1":
                    report = recover_l1(g, y, truth=truth)
                else:
                    report = algorithm1_recover(g, y, truth=truth)
                    if report.diagnostic == "reduced-system-infeasible":
                        infeasible[(algo, s)] += 1
                err = report.l2_error
                if err is not None and err <= cfg.success_threshold:
                    successes[(algo, s)] += 1
    rows = tuple(
        SweepRow(
            algorithm=a,
            sparsity=s,
            trials=cfg.trials,
            successes=successes[(a, s)],
            infeasible=infeasible[(a, s)],
        )
        for a in cfg.algorithms
        for s in cfg.sparsity_levels
    )
    return SweepResult(rows=rows, seed=cfg.seed, graph_hash=graph_hash(g), config=cfg)


def config_from_json(doc: dict, graph_loader) -> SweepConfig:
    """Build a SweepConfig from the versioned JSON schema.

    ``graph_loader`` maps a file path to a DirectedGraph; generator
    specs are resolved against :data:`GENERATORS`.
    """
    if doc.get("version") != SWEEP_CONFIG_VERSION:
        raise ValueError(f"unsupported sweep config version {doc.get('version')!r}")
    gspec = doc["graph"]
    if "file" in gspec:
        graph = graph_loader(gspec["file"])
    elif "generator" in gspec:
        gen = dict(gspec["generator"])
        name = gen.pop("name")
        graph = GENERATORS[name](**gen)
    else:
        raise ValueError("graph spec needs 'file' or 'generator'")
    algorithm = doc.get("algorithm", "l1")
    algorithms = ALGORITHMS if algorithm == "both" else (algorithm,)
    return SweepConfig(
        graph=graph,
        sparsity_levels=tuple(doc["sparsity_levels"]),
        trials=int(doc.get("trials", 300)),
        seed=int(doc.get("seed", 0)),
        algorithms=algorithms,
        success_threshold=float(doc.get("success_threshold", 1e-5)),
    )
