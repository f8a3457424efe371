"""Recovery certificates for incidence-matrix measurements.

Whether every s-sparse edge signal is recoverable by l1-minimization is
decided by the girth alone; whether every signal on a fixed support is
recoverable is decided by how the support intersects each simple cycle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .cycles import (
    CycleCapExceeded,
    DEFAULT_CYCLE_CAP,
    SimpleCycle,
    enumerate_simple_cycles,
    girth,
    shortest_cycle,
)
from .graphs import DirectedGraph, EmptySupportError, connected_components, validate_support

CERTIFICATE_SCHEMA_VERSION = 1


class DisconnectedGraphError(ValueError):
    """Whole-graph certification requires a connected graph."""


@dataclass(frozen=True)
class NupCertificate:
    """Certificate for recovery of every s-sparse signal.

    ``holds`` iff ``nullspace_constant < 1/2`` iff the girth is infinite
    or ``2 * order < girth``.  ``witness`` is a shortest cycle when the
    certificate fails.
    """

    order: int
    girth: float
    nullspace_constant: float
    holds: bool
    witness: SimpleCycle | None

    def to_json_dict(self) -> dict:
        return {
            "version": CERTIFICATE_SCHEMA_VERSION,
            "order": self.order,
            "girth": None if math.isinf(self.girth) else int(self.girth),
            "nullspace_constant": self.nullspace_constant,
            "holds": self.holds,
            "witness_cycle": None if self.witness is None else [v + 1 for v in self.witness.vertices],
        }


@dataclass(frozen=True)
class SupportCertificate:
    """Certificate for recovery of every signal on a fixed support.

    ``worst_ratio`` is the largest fraction of any simple cycle's edges
    that the support contains; ``holds`` iff it is strictly below 1/2.
    When the cycle cap was exceeded, ``conservative`` is set and the
    (sufficient, not necessary) girth bound is reported instead.
    """

    support: tuple[int, ...]
    holds: bool
    worst_ratio: float
    witness: SimpleCycle | None
    conservative: bool = False

    def to_json_dict(self) -> dict:
        return {
            "version": CERTIFICATE_SCHEMA_VERSION,
            "support": [j + 1 for j in self.support],
            "holds": self.holds,
            "worst_ratio": self.worst_ratio,
            "conservative": self.conservative,
            "witness_cycle": None if self.witness is None else [v + 1 for v in self.witness.vertices],
        }


def spark_incidence(g: DirectedGraph) -> float:
    """Smallest number of linearly dependent incidence-matrix columns;
    equals the girth (``math.inf`` for trees/forests)."""
    return girth(g)


def nullspace_constant_incidence(g: DirectedGraph, s: int) -> float:
    """The order-s nullspace constant of the incidence matrix:
    min(s / girth, 1), and 0 for acyclic graphs or s = 0."""
    if s < 0:
        raise ValueError("sparsity must be nonnegative")
    if s == 0:
        return 0.0
    gth = girth(g)
    if math.isinf(gth):
        return 0.0
    return min(s / gth, 1.0)


def certify_nup(g: DirectedGraph, s: int, *, per_component: bool = False) -> NupCertificate:
    """Certify that every s-sparse signal is the unique l1 minimizer.

    Requires a connected graph unless ``per_component`` is set, in which
    case each component is certified and the results are combined (a
    cycle lies entirely within one component, so this amounts to using
    the whole-graph girth).
    """
    if s < 1:
        raise ValueError("sparsity order must be >= 1")
    k, _ = connected_components(g)
    if k > 1 and not per_component:
        raise DisconnectedGraphError(
            f"graph has {k} components; pass per_component=True to certify anyway"
        )
    witness = shortest_cycle(g)
    gth = math.inf if witness is None else float(witness.length)
    constant = 0.0 if witness is None else min(s / gth, 1.0)
    holds = witness is None or 2 * s < gth
    return NupCertificate(
        order=s,
        girth=gth,
        nullspace_constant=constant,
        holds=holds,
        witness=None if holds else witness,
    )


def certify_support(
    g: DirectedGraph, support, cap: int = DEFAULT_CYCLE_CAP
) -> SupportCertificate:
    """Certify that every signal supported on ``support`` (0-based edge
    ids) is the unique l1 minimizer.

    Computes the worst cycle-intersection ratio over all simple cycles.
    If the graph has more cycles than ``cap``, falls back to the girth
    bound and marks the certificate conservative.
    """
    ids = validate_support(g, support)
    if not ids:
        raise EmptySupportError("support certification requires a nonempty support")
    sset = set(ids)
    try:
        cycles = enumerate_simple_cycles(g, cap=cap)
    except CycleCapExceeded:
        gth = girth(g)
        ratio = 0.0 if math.isinf(gth) else min(len(ids) / gth, 1.0)
        return SupportCertificate(
            support=ids,
            holds=ratio < 0.5,
            worst_ratio=ratio,
            witness=None,
            conservative=True,
        )
    worst = 0.0
    witness: SimpleCycle | None = None
    for c in cycles:
        ratio = len(sset & c.edge_set) / c.length
        if ratio > worst:
            worst = ratio
            witness = c
    return SupportCertificate(
        support=ids,
        holds=worst < 0.5,
        worst_ratio=worst,
        witness=witness,
    )
