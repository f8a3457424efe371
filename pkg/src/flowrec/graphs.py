"""Directed simple graphs, incidence matrices, and edge-induced subgraphs.

Vertices and edges are 0-based internally.  The edge-list file format is
1-based (see :func:`parse_graph`); ids are shifted on input and output.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


class GraphError(ValueError):
    """Invalid graph structure or malformed graph input."""


class GraphFormatError(GraphError):
    """Malformed edge-list document."""


class EmptySupportError(ValueError):
    """An operation that requires a nonempty edge set received an empty one."""


@dataclass(frozen=True)
class DirectedGraph:
    """A simple directed graph: no self-loops, at most one edge per
    unordered vertex pair.

    ``edges[j] = (tail, head)`` and the edge id of that edge is ``j``.
    Immutable after construction.
    """

    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple((int(t), int(h)) for t, h in self.edges))
        if self.vertex_count < 0:
            raise GraphError("vertex_count must be nonnegative")
        seen: set[frozenset[int]] = set()
        for j, (t, h) in enumerate(self.edges):
            if t == h:
                raise GraphError(f"edge {j} is a self-loop at vertex {t}")
            if not (0 <= t < self.vertex_count and 0 <= h < self.vertex_count):
                raise GraphError(f"edge {j} = ({t}, {h}) has a vertex id outside [0, {self.vertex_count})")
            pair = frozenset((t, h))
            if pair in seen:
                raise GraphError(f"duplicate unordered vertex pair {{{t}, {h}}} at edge {j}")
            seen.add(pair)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def undirected_adjacency(self) -> list[list[tuple[int, int]]]:
        """Adjacency lists of the underlying undirected graph.

        ``adj[v]`` is a list of ``(neighbor, edge_id)`` pairs.
        """
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.vertex_count)]
        for j, (t, h) in enumerate(self.edges):
            adj[t].append((h, j))
            adj[h].append((t, j))
        return adj

    def edge_lookup(self) -> dict[tuple[int, int], tuple[int, int, int]]:
        """Map each sorted vertex pair to ``(edge_id, tail, head)``."""
        return {tuple(sorted((t, h))): (j, t, h) for j, (t, h) in enumerate(self.edges)}


def validate_support(g: DirectedGraph, support) -> tuple[int, ...]:
    """Normalize an iterable of edge ids to a sorted, duplicate-free tuple."""
    ids = sorted({int(j) for j in support})
    for j in ids:
        if not 0 <= j < g.edge_count:
            raise GraphError(f"edge id {j} outside [0, {g.edge_count})")
    return tuple(ids)


def parse_graph(text: str) -> DirectedGraph:
    """Parse an edge-list document into a :class:`DirectedGraph`.

    Format: one edge per line as two whitespace-separated positive 1-based
    vertex ids ``tail head``.  Lines starting with ``#`` are comments.  An
    optional header line ``p <m> <n>`` fixes the vertex count and declares
    the expected edge count.
    """
    edges: list[tuple[int, int]] = []
    declared: tuple[int, int] | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if declared is not None or edges:
                raise GraphFormatError(f"line {lineno}: header must be the first data line")
            if len(parts) != 3:
                raise GraphFormatError(f"line {lineno}: header must be 'p <m> <n>'")
            try:
                declared = (int(parts[1]), int(parts[2]))
            except ValueError:
                raise GraphFormatError(f"line {lineno}: non-integer header field") from None
            continue
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'tail head', got {line!r}")
        try:
            t, h = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer vertex id") from None
        if t < 1 or h < 1:
            raise GraphFormatError(f"line {lineno}: vertex ids are 1-based positive integers")
        edges.append((t - 1, h - 1))

    if declared is not None:
        m, n = declared
        if len(edges) != n:
            raise GraphFormatError(f"header declares {n} edges but {len(edges)} were given")
    else:
        m = 1 + max((max(t, h) for t, h in edges), default=-1)
    return DirectedGraph(vertex_count=m, edges=tuple(edges))


def format_graph(g: DirectedGraph) -> str:
    """Inverse of :func:`parse_graph` (1-based, with header)."""
    lines = [f"p {g.vertex_count} {g.edge_count}"]
    lines += [f"{t + 1} {h + 1}" for t, h in g.edges]
    return "\n".join(lines) + "\n"


def incidence_matrix(g: DirectedGraph) -> np.ndarray:
    """Dense m-by-n incidence matrix: column j holds -1 at the tail of
    edge j and +1 at its head."""
    A = np.zeros((g.vertex_count, g.edge_count))
    for j, (t, h) in enumerate(g.edges):
        A[t, j] = -1.0
        A[h, j] = 1.0
    return A


def connected_components(g: DirectedGraph) -> tuple[int, list[int]]:
    """Components of the underlying undirected graph.

    Returns ``(k, labels)`` where ``labels[v]`` is the 0-based component
    index of vertex v and ``k`` is the number of components.
    """
    adj = g.undirected_adjacency()
    labels = [-1] * g.vertex_count
    k = 0
    for start in range(g.vertex_count):
        if labels[start] != -1:
            continue
        stack = [start]
        labels[start] = k
        while stack:
            v = stack.pop()
            for w, _ in adj[v]:
                if labels[w] == -1:
                    labels[w] = k
                    stack.append(w)
        k += 1
    return k, labels


@dataclass(frozen=True)
class EdgeSubgraph:
    """An edge-induced subgraph together with its id mappings.

    ``edge_map[j']`` is the original edge id of subgraph edge j';
    ``vertex_map[v']`` is the original vertex id of subgraph vertex v'.
    Vertices not incident to any retained edge are dropped.
    """

    graph: DirectedGraph
    edge_map: tuple[int, ...]
    vertex_map: tuple[int, ...]


def edge_subgraph(g: DirectedGraph, support) -> EdgeSubgraph:
    """Subgraph consisting of the edges in ``support`` (0-based edge ids)."""
    ids = validate_support(g, support)
    if not ids:
        raise EmptySupportError("edge subgraph requires a nonempty edge set")
    kept_vertices = sorted({v for j in ids for v in g.edges[j]})
    new_id = {v: i for i, v in enumerate(kept_vertices)}
    sub_edges = tuple((new_id[g.edges[j][0]], new_id[g.edges[j][1]]) for j in ids)
    sub = DirectedGraph(vertex_count=len(kept_vertices), edges=sub_edges)
    return EdgeSubgraph(graph=sub, edge_map=ids, vertex_map=tuple(kept_vertices))
