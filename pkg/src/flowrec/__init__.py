"""Sparse recovery of edge signals measured through graph incidence
matrices: girth-based certificates, cycle-intersection support
certificates, basis-pursuit recovery, subgraph-restricted recovery, and
Monte Carlo sweep tooling."""

from .certify import (
    DisconnectedGraphError,
    NupCertificate,
    SupportCertificate,
    certify_nup,
    certify_support,
    nullspace_constant_incidence,
    spark_incidence,
)
from .cycles import (
    CycleCapExceeded,
    SimpleCycle,
    cycle_space_dimension,
    cycle_vector,
    enumerate_simple_cycles,
    girth,
    shortest_cycle,
)
from .experiments import (
    SweepConfig,
    SweepResult,
    gen_ring_chord_graph,
    gen_ring_graph,
    gen_two_cycle_graph,
    random_sparse_signal,
    run_sweep,
)
from .graphs import (
    DirectedGraph,
    EmptySupportError,
    GraphError,
    GraphFormatError,
    connected_components,
    edge_subgraph,
    incidence_matrix,
    parse_graph,
)
from .l1 import (
    BasisPursuitProblem,
    InfeasibleError,
    LpSolution,
    SizeLimitExceeded,
    check_dual_certificate,
    oracle_l0_min,
    solve_basis_pursuit,
)
from .oracles import oracle_extreme_point_sparsity, oracle_nullspace_constant
from .recovery import RecoveryReport, SparseSignal, algorithm1_recover, recover_l1

__all__ = [
    "BasisPursuitProblem",
    "CycleCapExceeded",
    "DirectedGraph",
    "DisconnectedGraphError",
    "EmptySupportError",
    "GraphError",
    "GraphFormatError",
    "InfeasibleError",
    "LpSolution",
    "NupCertificate",
    "RecoveryReport",
    "SimpleCycle",
    "SizeLimitExceeded",
    "SparseSignal",
    "SupportCertificate",
    "SweepConfig",
    "SweepResult",
    "algorithm1_recover",
    "certify_nup",
    "certify_support",
    "check_dual_certificate",
    "connected_components",
    "cycle_space_dimension",
    "cycle_vector",
    "edge_subgraph",
    "enumerate_simple_cycles",
    "gen_ring_chord_graph",
    "gen_ring_graph",
    "gen_two_cycle_graph",
    "girth",
    "incidence_matrix",
    "nullspace_constant_incidence",
    "oracle_extreme_point_sparsity",
    "oracle_l0_min",
    "oracle_nullspace_constant",
    "parse_graph",
    "random_sparse_signal",
    "recover_l1",
    "run_sweep",
    "shortest_cycle",
    "solve_basis_pursuit",
    "spark_incidence",
]
