"""Girth, simple-cycle enumeration, and signed cycle vectors.

Cycles live on the underlying undirected graph; edge directions only
determine the signs in the cycle vector.
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass

import networkx as nx
import numpy as np

from .graphs import DirectedGraph, connected_components


class CycleCapExceeded(RuntimeError):
    """The graph has more simple cycles than the caller-supplied cap."""


DEFAULT_CYCLE_CAP = 100_000


@dataclass(frozen=True)
class SimpleCycle:
    """A simple cycle in canonical form.

    ``vertices`` is the closed walk without the repeated endpoint, rotated
    so the smallest vertex id comes first and directed so the second
    vertex id is smaller than the last.  ``edge_ids[i]`` is the edge
    between ``vertices[i]`` and ``vertices[i+1]`` (cyclically), and
    ``orientations[i]`` is +1 when that edge is traversed tail-to-head.
    """

    vertices: tuple[int, ...]
    edge_ids: tuple[int, ...]
    orientations: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)

    @property
    def edge_set(self) -> frozenset[int]:
        return frozenset(self.edge_ids)


def _canonical_vertices(vertices: list[int]) -> tuple[int, ...]:
    pos = vertices.index(min(vertices))
    rotated = vertices[pos:] + vertices[:pos]
    if rotated[1] > rotated[-1]:
        rotated = [rotated[0]] + rotated[:0:-1]
    return tuple(rotated)


def cycle_from_vertices(g: DirectedGraph, vertices) -> SimpleCycle:
    """Build the canonical :class:`SimpleCycle` through the given closed
    vertex sequence (without the repeated endpoint)."""
    verts = list(vertices)
    if len(verts) < 3:
        raise ValueError("a simple cycle needs at least 3 vertices")
    if len(set(verts)) != len(verts):
        raise ValueError("cycle vertices must be pairwise distinct")
    canon = _canonical_vertices(verts)
    lookup = g.edge_lookup()
    edge_ids = []
    orientations = []
    for i in range(len(canon)):
        a, b = canon[i], canon[(i + 1) % len(canon)]
        entry = lookup.get(tuple(sorted((a, b))))
        if entry is None:
            raise ValueError(f"no edge between vertices {a} and {b}")
        j, tail, _head = entry
        edge_ids.append(j)
        orientations.append(1 if tail == a else -1)
    return SimpleCycle(vertices=canon, edge_ids=tuple(edge_ids), orientations=tuple(orientations))


def shortest_cycle(g: DirectedGraph) -> SimpleCycle | None:
    """A shortest simple cycle of the underlying undirected graph, or
    None if the graph is acyclic.

    BFS from every vertex; each non-tree edge (x, y) seen from root v
    closes a walk of length dist(x) + dist(y) + 1 that contains a cycle
    no longer than itself, and for a root on a shortest cycle the bound
    is attained.  Worst case O(m * n).
    """
    adj = g.undirected_adjacency()
    best: int | None = None
    best_closure: tuple[list[int], list[int], int, int] | None = None
    for root in range(g.vertex_count):
        dist = {root: 0}
        parent = {root: (-1, -1)}  # vertex -> (predecessor, edge used)
        queue = deque([root])
        while queue:
            x = queue.popleft()
            if best is not None and 2 * dist[x] >= best:
                continue
            for y, j in adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = (x, j)
                    queue.append(y)
                elif j != parent[x][1]:
                    cand = dist[x] + dist[y] + 1
                    if best is None or cand < best:
                        px = _path_to_root(parent, x)
                        py = _path_to_root(parent, y)
                        best = cand
                        best_closure = (px, py, x, y)
    if best is None:
        return None
    px, py, x, y = best_closure
    # Walk x -> root -> y plus the closing edge; at the optimum the two
    # root paths are internally disjoint, so this is a simple cycle.
    verts = px[::-1] + py[1:]
    assert len(verts) == best and len(set(verts)) == best
    return cycle_from_vertices(g, verts)


def _path_to_root(parent, v) -> list[int]:
    path = [v]
    while parent[path[-1]][0] != -1:
        path.append(parent[path[-1]][0])
    return path[::-1]  # root first


def girth(g: DirectedGraph) -> float:
    """Length of the shortest simple cycle; ``math.inf`` when acyclic."""
    c = shortest_cycle(g)
    return math.inf if c is None else float(c.length)


def enumerate_simple_cycles(g: DirectedGraph, cap: int = DEFAULT_CYCLE_CAP) -> list[SimpleCycle]:
    """All simple cycles of the underlying undirected graph, each once,
    in canonical form, sorted by (length, vertex sequence).

    Raises :class:`CycleCapExceeded` when the cycle count exceeds ``cap``.
    """
    G = nx.Graph()
    G.add_nodes_from(range(g.vertex_count))
    G.add_edges_from((t, h) for t, h in g.edges)
    cycles = []
    for verts in itertools.islice(nx.simple_cycles(G), cap + 1):
        cycles.append(cycle_from_vertices(g, verts))
        if len(cycles) > cap:
            raise CycleCapExceeded(f"more than {cap} simple cycles")
    cycles.sort(key=lambda c: (c.length, c.vertices))
    return cycles


def cycle_vector(c: SimpleCycle, g: DirectedGraph, normalized: bool = False) -> np.ndarray:
    """Signed edge-indicator vector of a cycle; entries in {0, +1, -1},
    or divided by the cycle length when ``normalized``."""
    w = np.zeros(g.edge_count)
    for j, sign in zip(c.edge_ids, c.orientations):
        w[j] = float(sign)
    if normalized:
        w /= c.length
    return w


def cycle_space_dimension(g: DirectedGraph) -> int:
    """Dimension of the cycle space (equivalently the incidence-matrix
    nullspace): n - m + k."""
    k, _ = connected_components(g)
    return g.edge_count - g.vertex_count + k
