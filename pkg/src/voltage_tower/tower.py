"""Constant voltage assignments and derived-graph towers.

The derived graph at level n places one sheet of the base over every
residue ``sigma`` mod p^n and sends each base edge (s, t) to
``(s, sigma) -> (t, sigma + param)``.  Vertex ``(v, sigma)`` lives at index
``sigma * base_vertex_count + v`` so repeated runs are bit-identical.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .arith import is_prime, valuation
from .errors import (
    EmptyGraphError,
    InvalidPrimeError,
    NoTowerError,
    NotAUnitError,
)
from .graph import (
    CycleWeightProfile,
    DirectedMultigraph,
    components,
    cycle_weight_profile,
    subgraph,
)


@dataclass(frozen=True)
class ConstantVoltage:
    """Every edge receives the same value ``param`` (an integer standing
    for a p-adic integer); towers need ``param`` coprime to ``p``."""

    p: int
    param: int = 1

    def __post_init__(self):
        if not is_prime(self.p):
            raise InvalidPrimeError(f"{self.p} is not prime")

    @property
    def is_unit(self) -> bool:
        return math.gcd(self.param, self.p) == 1


@dataclass(frozen=True)
class DerivedGraph:
    graph: DirectedMultigraph
    base_vertex_count: int
    level: int

    @property
    def modulus(self) -> int:
        """p^level, the size of the deck group."""
        if self.base_vertex_count == 0:
            return 1
        return self.graph.vertex_count // self.base_vertex_count


def derive(
    base: DirectedMultigraph, voltage: ConstantVoltage, n: int
) -> DerivedGraph:
    """Derived graph of the constant assignment modulo p^n.

    Level 0 wraps the base graph unchanged.
    """
    if n < 0:
        raise ValueError("level must be non-negative")
    if n == 0:
        return DerivedGraph(base, base.vertex_count, 0)
    modulus = voltage.p**n
    a = voltage.param % modulus
    nv = base.vertex_count
    edges = []
    for s, t in base.edges:
        for sigma in range(modulus):
            edges.append((sigma * nv + s, ((sigma + a) % modulus) * nv + t))
    labels = tuple(
        f"v{v}@{sigma}" for sigma in range(modulus) for v in range(nv)
    )
    g = DirectedMultigraph(
        modulus * nv,
        tuple(edges),
        labels,
        f"derive({base.name},p={voltage.p},n={n})",
    )
    return DerivedGraph(g, nv, n)


def component_count(g: DirectedMultigraph) -> int:
    if g.vertex_count == 0:
        raise EmptyGraphError("graph has no vertices")
    return len(components(g))


def predicted_component_count(
    profile: CycleWeightProfile, p: int, n: int
) -> int:
    """Component count of the level-n derived graph (unit parameter),
    read off the cycle-weight lattice: the deck group acts with stabilizer
    of index p^min(n, v_p(gcd))."""
    if profile.is_acyclic or profile.weight_gcd == 0:
        return p**n
    return p ** min(n, valuation(profile.weight_gcd, p))


def stabilization_level(
    profile: CycleWeightProfile, p: int
) -> Optional[int]:
    """Least level n0 past which the component count is constant, or None
    when no tower exists (forest, or every cycle weight 0)."""
    if profile.is_acyclic or profile.weight_gcd == 0:
        return None
    return valuation(profile.weight_gcd, p)


def tower_component(
    base: DirectedMultigraph, voltage: ConstantVoltage, n: int
) -> DirectedMultigraph:
    """The connected component of the level-n derived graph containing
    vertex (0, 0), reindexed densely; labels keep the derived names
    ``v{v}@{sigma}`` as the map back to derived indices."""
    profile = cycle_weight_profile(base)
    if stabilization_level(profile, voltage.p) is None:
        reason = "acyclic" if profile.is_acyclic else "zero-weight-gcd"
        raise NoTowerError(
            f"{base.name} admits no constant tower", reason=reason
        )
    if not voltage.is_unit:
        raise NotAUnitError(
            f"parameter {voltage.param} is divisible by {voltage.p}"
        )
    derived = derive(base, voltage, n)
    for comp in components(derived.graph):
        if comp[0] == 0:
            return subgraph(derived.graph, comp)
    raise AssertionError("vertex 0 not found in any component")


def relabel_by_unit(d: DerivedGraph, u: int) -> DerivedGraph:
    """Rename every vertex (v, sigma) to (v, u * sigma); for a unit u this
    is an isomorphism of coverings of the base."""
    modulus = d.modulus
    if math.gcd(u, modulus) != 1:
        raise NotAUnitError(f"{u} is not a unit modulo {modulus}")
    nv = d.base_vertex_count

    def rename(idx: int) -> int:
        sigma, v = divmod(idx, nv)
        return (u * sigma % modulus) * nv + v

    g = d.graph
    edges = tuple((rename(s), rename(t)) for s, t in g.edges)
    labels = g.vertex_labels
    if labels is not None:
        labels = tuple(
            f"v{v}@{sigma}" for sigma in range(modulus) for v in range(nv)
        )
    renamed = DirectedMultigraph(
        g.vertex_count, edges, labels, f"{g.name}*{u}"
    )
    return DerivedGraph(renamed, d.base_vertex_count, d.level)
