"""Constructors and recognizers for the standard graph families.

Volcano graphs are layered: a crater (cycle, looped vertex, two-loop
vertex, or bare vertex) with l-ary levels hanging below it.  Degree
bookkeeping here counts loops with multiplicity one; that convention is
local to shape validation and never leaks into Laplacians.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Optional

from .errors import InvalidSpecError, NotConnectedError
from .graph import DirectedMultigraph, is_connected

CRATER_CYCLE = "cycle"
CRATER_TWO_LOOPS = "two-loops"
CRATER_BARE = "bare"


@dataclass(frozen=True)
class CraterSpec:
    """Crater shape; a cycle of length 1 is a single vertex with one loop
    and a cycle of length 2 is two vertices joined by two edges."""

    kind: str
    length: int = 1

    def __post_init__(self):
        if self.kind not in (CRATER_CYCLE, CRATER_TWO_LOOPS, CRATER_BARE):
            raise InvalidSpecError(f"unknown crater kind {self.kind!r}")
        if self.kind == CRATER_CYCLE and self.length < 1:
            raise InvalidSpecError("cycle crater needs length >= 1")

    @classmethod
    def cycle(cls, k: int) -> "CraterSpec":
        return cls(CRATER_CYCLE, k)

    @classmethod
    def one_loop(cls) -> "CraterSpec":
        return cls(CRATER_CYCLE, 1)

    @classmethod
    def two_loops(cls) -> "CraterSpec":
        return cls(CRATER_TWO_LOOPS)

    @classmethod
    def bare(cls) -> "CraterSpec":
        return cls(CRATER_BARE)

    @property
    def vertex_count(self) -> int:
        return self.length if self.kind == CRATER_CYCLE else 1

    @property
    def internal_degree(self) -> int:
        """Degree of a crater vertex inside the crater, loops counted once."""
        if self.kind == CRATER_CYCLE:
            return 1 if self.length == 1 else 2
        if self.kind == CRATER_TWO_LOOPS:
            return 2
        return 0

    @property
    def token(self) -> str:
        if self.kind == CRATER_CYCLE:
            return f"cycle:{self.length}"
        return self.kind


@dataclass(frozen=True)
class VolcanoSpec:
    l: int
    depth: int
    crater: CraterSpec

    def __post_init__(self):
        if self.l < 2:
            raise InvalidSpecError("volcano needs l >= 2")
        if self.depth < 0:
            raise InvalidSpecError("depth must be non-negative")


def directed_cycle(k: int) -> DirectedMultigraph:
    if k < 1:
        raise InvalidSpecError("cycle needs at least one vertex")
    edges = tuple((i, (i + 1) % k) for i in range(k))
    return DirectedMultigraph(k, edges, name=f"cycle({k})")


def bouquet(loops: int) -> DirectedMultigraph:
    if loops < 0:
        raise InvalidSpecError("loop count must be non-negative")
    return DirectedMultigraph(
        1, tuple((0, 0) for _ in range(loops)), name=f"bouquet({loops})"
    )


def doubled(g: DirectedMultigraph) -> DirectedMultigraph:
    """Add a reversed partner for every non-loop edge (loops stay single)."""
    extra = tuple((t, s) for s, t in g.edges if s != t)
    return DirectedMultigraph(
        g.vertex_count,
        g.edges + extra,
        g.vertex_labels,
        f"doubled({g.name})",
    )


def volcano(spec: VolcanoSpec) -> DirectedMultigraph:
    """Oriented abstract l-volcano: crater edges run v_i -> v_(i+1), level
    edges run parent -> child; children are attached in parent order so the
    construction is reproducible byte for byte."""
    crater = spec.crater
    k = crater.vertex_count
    edges: list[tuple[int, int]] = []
    if crater.kind == CRATER_CYCLE:
        if crater.length == 1:
            edges.append((0, 0))
        else:
            edges.extend((i, (i + 1) % k) for i in range(k))
    elif crater.kind == CRATER_TWO_LOOPS:
        edges.extend([(0, 0), (0, 0)])
    next_vertex = k
    if spec.depth >= 1:
        # crater vertices are filled up to degree l+1; deeper internal
        # vertices carry one parent edge plus l children
        parents = list(range(k))
        for level in range(1, spec.depth + 1):
            per_parent = (
                spec.l + 1 - crater.internal_degree if level == 1 else spec.l
            )
            children: list[int] = []
            for parent in parents:
                for _ in range(per_parent):
                    child = next_vertex
                    next_vertex += 1
                    edges.append((parent, child))
                    children.append(child)
            parents = children
    return DirectedMultigraph(
        next_vertex,
        tuple(edges),
        name=f"volcano(l={spec.l},d={spec.depth},crater={crater.token})",
    )


def total_degree(g: DirectedMultigraph) -> int:
    """Sum of undirected vertex degrees with loops counted once."""
    loops = sum(1 for s, t in g.edges if s == t)
    return 2 * len(g.edges) - loops


def volcano_total_degree(spec: VolcanoSpec) -> int:
    """Closed form for the total degree of a generated volcano.

    Cycle crater of length k (or two loops, k = 1): 2k l^d.  One-loop
    crater: (2 l^(d+1) - l - 1) / (l - 1).  Bare crater: 2 (l+1)(l^d - 1)
    / (l - 1).
    """
    l, d = spec.l, spec.depth
    crater = spec.crater
    if crater.kind == CRATER_CYCLE and crater.length == 1:
        return (2 * l ** (d + 1) - l - 1) // (l - 1)
    if crater.kind == CRATER_BARE:
        return 2 * (l + 1) * (l**d - 1) // (l - 1)
    k = crater.vertex_count
    return 2 * k * l**d


@dataclass(frozen=True)
class VolcanoShape:
    """Result of recognizing a volcano; ``l`` is None at depth 0 since a
    bare crater carries no branching information."""

    l: Optional[int]
    depth: int
    crater_kind: str
    crater_length: int


@dataclass(frozen=True)
class AugmentedVolcanoShape:
    l: Optional[int]
    depth: int
    crater_length: int


class _UndirectedView:
    """Multiplicity-aware undirected view used by the recognizers."""

    def __init__(self, g: DirectedMultigraph):
        self.n = g.vertex_count
        self.loops = [0] * self.n
        self.neighbors: list[Counter] = [Counter() for _ in range(self.n)]
        for s, t in g.edges:
            if s == t:
                self.loops[s] += 1
            else:
                self.neighbors[s][t] += 1
                self.neighbors[t][s] += 1

    def degree(self, v: int) -> int:
        """Loops counted once."""
        return sum(self.neighbors[v].values()) + self.loops[v]


def _classify_crater(
    view: _UndirectedView, vertices: set[int]
) -> Optional[tuple[str, int]]:
    """Classify the subgraph induced on ``vertices`` as a crater shape."""
    if len(vertices) == 1:
        (v,) = vertices
        loops = view.loops[v]
        if loops == 0:
            return (CRATER_BARE, 1)
        if loops == 1:
            return (CRATER_CYCLE, 1)
        if loops == 2:
            return (CRATER_TWO_LOOPS, 1)
        return None
    if any(view.loops[v] for v in vertices):
        return None
    if len(vertices) == 2:
        u, v = sorted(vertices)
        if view.neighbors[u][v] == 2:
            return (CRATER_CYCLE, 2)
        return None
    # length >= 3: every vertex has exactly two inside neighbors, each
    # simple, and one closed walk covers everything
    inside = {
        v: [
            w
            for w, mult in view.neighbors[v].items()
            if w in vertices
            for _ in range(mult)
        ]
        for v in vertices
    }
    if any(len(nbrs) != 2 for nbrs in inside.values()):
        return None
    if any(len(set(nbrs)) != 2 for nbrs in inside.values()):
        return None
    start = min(vertices)
    prev, cur = start, inside[start][0]
    seen = 1
    while cur != start:
        nxt = [w for w in inside[cur] if w != prev]
        if len(nxt) != 1:
            return None
        prev, cur = cur, nxt[0]
        seen += 1
        if seen > len(vertices):
            return None
    if seen != len(vertices):
        return None
    return (CRATER_CYCLE, len(vertices))


def _classify_double_crater(
    view: _UndirectedView, vertices: set[int]
) -> Optional[int]:
    """Length of the double crater induced on ``vertices``, or None."""
    s = len(vertices)
    if s < 2 or any(view.loops[v] for v in vertices):
        return None
    inside = {
        v: {w: mult for w, mult in view.neighbors[v].items() if w in vertices}
        for v in vertices
    }
    if s == 2:
        u, v = sorted(vertices)
        return 2 if inside[u].get(v, 0) == 4 else None
    for nbrs in inside.values():
        if len(nbrs) != 2 or any(mult != 2 for mult in nbrs.values()):
            return None
    start = min(vertices)
    prev, cur = start, sorted(inside[start])[0]
    seen = 1
    while cur != start:
        nxt = [w for w in inside[cur] if w != prev]
        if len(nxt) != 1:
            return None
        prev, cur = cur, nxt[0]
        seen += 1
        if seen > s:
            return None
    return s if seen == s else None


def _peel_levels(
    view: _UndirectedView, is_core
) -> Optional[tuple[list[set[int]], set[int]]]:
    """Strip degree-1 loop-free vertices round by round until ``is_core``
    accepts the remainder; returns (levels outermost first, core)."""
    remaining = set(range(view.n))
    degree = {v: view.degree(v) for v in remaining}
    levels: list[set[int]] = []
    while not is_core(remaining):
        leaves = {
            v for v in remaining if degree[v] == 1 and view.loops[v] == 0
        }
        if not leaves:
            return None
        for v in leaves:
            for w, mult in view.neighbors[v].items():
                if w in remaining and w not in leaves:
                    degree[w] -= mult
        remaining -= leaves
        if not remaining:
            return None
        levels.append(leaves)
    return levels, remaining


def _validate_levels(
    view: _UndirectedView, level_of: dict[int, int], depth: int
) -> bool:
    """The shared layer axioms: edges stay within adjacent levels, levels
    past the crater are totally disconnected, and every vertex below the
    crater hangs from exactly one parent."""
    parents = Counter()
    for v in range(view.n):
        lv = level_of[v]
        if lv > 0 and view.loops[v]:
            return False
        for w, mult in view.neighbors[v].items():
            if w < v:
                continue
            lw = level_of[w]
            if abs(lv - lw) > 1:
                return False
            if lv == lw and lv > 0:
                return False
            if lv != lw:
                child = v if lv > lw else w
                parents[child] += mult
    for v in range(view.n):
        if level_of[v] > 0 and parents[v] != 1:
            return False
    return True


def recognize_volcano(g: DirectedMultigraph) -> Optional[VolcanoShape]:
    """Classify ``g`` (treated as undirected) as an abstract l-volcano."""
    if not is_connected(g):
        raise NotConnectedError("volcano recognition needs a connected graph")
    view = _UndirectedView(g)
    peeled = _peel_levels(
        view, lambda vs: _classify_crater(view, vs) is not None
    )
    if peeled is None:
        return None
    levels, crater_vertices = peeled
    crater = _classify_crater(view, crater_vertices)
    depth = len(levels)
    level_of = {v: 0 for v in crater_vertices}
    for i, level in enumerate(levels):
        for v in level:
            level_of[v] = depth - i
    if depth == 0:
        return VolcanoShape(None, 0, crater[0], crater[1])
    upper_degrees = {
        view.degree(v) for v in range(view.n) if level_of[v] < depth
    }
    if len(upper_degrees) != 1:
        return None
    l = upper_degrees.pop() - 1
    if l < 1:
        return None
    if any(view.degree(v) != 1 for v in levels[0]):
        return None
    if not _validate_levels(view, level_of, depth):
        return None
    return VolcanoShape(l, depth, crater[0], crater[1])


def recognize_augmented_volcano(
    g: DirectedMultigraph,
) -> Optional[AugmentedVolcanoShape]:
    """Classify ``g`` as an augmented volcano: a double crater with l-ary
    levels below, crater degree l+3."""
    if not is_connected(g):
        raise NotConnectedError("volcano recognition needs a connected graph")
    view = _UndirectedView(g)
    peeled = _peel_levels(
        view, lambda vs: _classify_double_crater(view, vs) is not None
    )
    if peeled is None:
        return None
    levels, crater_vertices = peeled
    crater_length = _classify_double_crater(view, crater_vertices)
    depth = len(levels)
    level_of = {v: 0 for v in crater_vertices}
    for i, level in enumerate(levels):
        for v in level:
            level_of[v] = depth - i
    if depth == 0:
        if any(view.degree(v) != 4 for v in crater_vertices):
            return None
        return AugmentedVolcanoShape(None, 0, crater_length)
    crater_degrees = {view.degree(v) for v in crater_vertices}
    if len(crater_degrees) != 1:
        return None
    l = crater_degrees.pop() - 3
    if l < 1:
        return None
    for v in range(view.n):
        lv = level_of[v]
        if lv == 0:
            continue
        expected = 1 if lv == depth else l + 1
        if view.degree(v) != expected:
            return None
    if not _validate_levels(view, level_of, depth):
        return None
    return AugmentedVolcanoShape(l, depth, crater_length)


def is_double_crater(g: DirectedMultigraph) -> Optional[int]:
    """Length of ``g`` as a double crater (every cycle edge doubled), or
    None when the shape does not match."""
    if not is_connected(g):
        raise NotConnectedError("double-crater check needs a connected graph")
    view = _UndirectedView(g)
    return _classify_double_crater(view, set(range(g.vertex_count)))


def is_augmented_volcano(g: DirectedMultigraph) -> bool:
    return recognize_augmented_volcano(g) is not None
