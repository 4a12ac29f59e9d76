"""Directed multigraph data model and the cycle-weight computation.

A graph is a dense vertex range ``0..vertex_count-1`` plus an ordered edge
list; loops and parallel edges are allowed and edge identity is the list
index.  The doubled graph (every edge plus an implicit reverse partner of
weight -1) is never materialized: every computation that needs it works
with the +1/-1 sign convention directly.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import EmptyGraphError, NotConnectedError

_UNDIRECTED_PREFIX = "undirected("


@dataclass(frozen=True)
class DirectedMultigraph:
    """Finite directed multigraph with ordered edges.

    ``vertex_labels``, when present, is purely decorative (one string per
    vertex); ``name`` identifies the graph in documents and reports.
    """

    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    vertex_labels: Optional[tuple[str, ...]] = None
    name: str = "graph"

    def __post_init__(self):
        object.__setattr__(
            self, "edges", tuple((int(s), int(t)) for s, t in self.edges)
        )
        if self.vertex_count < 0:
            raise ValueError("vertex_count must be non-negative")
        for s, t in self.edges:
            if not (0 <= s < self.vertex_count and 0 <= t < self.vertex_count):
                raise ValueError(f"edge ({s},{t}) leaves vertex range")
        if self.vertex_labels is not None:
            object.__setattr__(self, "vertex_labels", tuple(self.vertex_labels))
            if len(self.vertex_labels) != self.vertex_count:
                raise ValueError("vertex_labels length must equal vertex_count")

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def is_undirected_image(self) -> bool:
        """True for graphs produced by :func:`underlying_undirected`."""
        return self.name.startswith(_UNDIRECTED_PREFIX)


@dataclass(frozen=True)
class DegreeProfile:
    in_deg: tuple[int, ...]
    out_deg: tuple[int, ...]
    loop_count: tuple[int, ...]


@dataclass(frozen=True)
class CycleWeightProfile:
    """Classification of the cycle weights of the doubled graph.

    ``kind`` is "acyclic" when the undirected image is a forest, else
    "cyclic" with ``weight_gcd`` the non-negative generator of the subgroup
    of the integers generated by all cycle weights (0 when every cycle has
    weight 0).
    """

    kind: str
    weight_gcd: int = 0

    ACYCLIC = "acyclic"
    CYCLIC = "cyclic"

    @property
    def is_acyclic(self) -> bool:
        return self.kind == self.ACYCLIC


def underlying_undirected(g: DirectedMultigraph) -> DirectedMultigraph:
    """Forgetful image of ``g``: edges canonicalized to (min, max) and the
    name marked so consumers treat them as unordered pairs."""
    if g.is_undirected_image():
        return g
    canon = tuple((min(s, t), max(s, t)) for s, t in g.edges)
    return DirectedMultigraph(
        g.vertex_count, canon, g.vertex_labels, f"{_UNDIRECTED_PREFIX}{g.name})"
    )


def degree_profile(g: DirectedMultigraph) -> DegreeProfile:
    ins = [0] * g.vertex_count
    outs = [0] * g.vertex_count
    loops = [0] * g.vertex_count
    for s, t in g.edges:
        outs[s] += 1
        ins[t] += 1
        if s == t:
            loops[s] += 1
    return DegreeProfile(tuple(ins), tuple(outs), tuple(loops))


def _undirected_adjacency(g: DirectedMultigraph) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in range(g.vertex_count)]
    for s, t in g.edges:
        if s != t:
            adj[s].append(t)
            adj[t].append(s)
    return adj


def components(g: DirectedMultigraph) -> list[list[int]]:
    """Connected components of the undirected image, each sorted, ordered
    by smallest vertex."""
    if g.vertex_count == 0:
        raise EmptyGraphError("graph has no vertices")
    adj = _undirected_adjacency(g)
    seen = [False] * g.vertex_count
    out: list[list[int]] = []
    for start in range(g.vertex_count):
        if seen[start]:
            continue
        seen[start] = True
        queue = deque([start])
        comp = [start]
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comp.sort()
        out.append(comp)
    return out


def is_connected(g: DirectedMultigraph) -> bool:
    return len(components(g)) == 1


def subgraph(g: DirectedMultigraph, vertices: Sequence[int]) -> DirectedMultigraph:
    """Induced subgraph on ``vertices``, reindexed densely in the given
    order; edge order is inherited from ``g``."""
    index = {v: i for i, v in enumerate(vertices)}
    edges = tuple(
        (index[s], index[t]) for s, t in g.edges if s in index and t in index
    )
    labels = None
    if g.vertex_labels is not None:
        labels = tuple(g.vertex_labels[v] for v in vertices)
    return DirectedMultigraph(len(vertices), edges, labels, f"{g.name}[component]")


def cycle_weight_profile(
    g: DirectedMultigraph, root: int = 0
) -> CycleWeightProfile:
    """Cycle-weight lattice of the doubled graph via fundamental cycles.

    Builds a BFS spanning tree of the undirected image from ``root``,
    assigns each vertex the signed weight of its tree path (forward
    traversal of an edge counts +1, backward -1), and takes the gcd of the
    fundamental cycle weights theta(u) + 1 - theta(w) of the non-tree
    edges (u, w).
    """
    if not is_connected(g):
        raise NotConnectedError("cycle weights need a connected graph")
    n = g.vertex_count
    # vertex -> list of (edge index, other endpoint, sign of traversal)
    incidence: list[list[tuple[int, int, int]]] = [[] for _ in range(n)]
    for i, (s, t) in enumerate(g.edges):
        if s == t:
            continue
        incidence[s].append((i, t, +1))
        incidence[t].append((i, s, -1))
    theta = [0] * n
    in_tree = [False] * len(g.edges)
    visited = [False] * n
    visited[root] = True
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for edge_idx, w, sign in incidence[v]:
            if not visited[w]:
                visited[w] = True
                in_tree[edge_idx] = True
                theta[w] = theta[v] + sign
                queue.append(w)
    gcd = 0
    non_tree = 0
    for i, (u, w) in enumerate(g.edges):
        if in_tree[i]:
            continue
        non_tree += 1
        gcd = math.gcd(gcd, theta[u] + 1 - theta[w])
    if non_tree == 0:
        return CycleWeightProfile(CycleWeightProfile.ACYCLIC)
    return CycleWeightProfile(CycleWeightProfile.CYCLIC, gcd)


def is_balanced(g: DirectedMultigraph) -> bool:
    prof = degree_profile(g)
    return prof.in_deg == prof.out_deg


def is_total_degree_constant(g: DirectedMultigraph) -> Optional[int]:
    """The common value of in-degree + out-degree, or None if it varies."""
    prof = degree_profile(g)
    totals = {i + o for i, o in zip(prof.in_deg, prof.out_deg)}
    if len(totals) == 1:
        return totals.pop()
    return None


def adjacency_matrix(g: DirectedMultigraph) -> list[list[int]]:
    """Entry (i, j) counts edges i -> j; a loop contributes 1 to the
    diagonal."""
    a = [[0] * g.vertex_count for _ in range(g.vertex_count)]
    for s, t in g.edges:
        a[s][t] += 1
    return a


def _matmul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    n = len(a)
    cols = list(zip(*b)) if b else []
    return [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a]


def is_adjacency_normal(g: DirectedMultigraph) -> bool:
    a = adjacency_matrix(g)
    at = [list(col) for col in zip(*a)] if a else []
    return _matmul(a, at) == _matmul(at, a)
