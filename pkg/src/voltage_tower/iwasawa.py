"""Tower invariants from the characteristic polynomial and from tower data.

The constant tower of a connected graph with r vertices has characteristic
power series det(D - A(1+T) - A^t(1+T)^(-1)).  Multiplying every row by
(1+T), a unit power series, clears the denominators and yields an honest
integer polynomial P(T) of degree at most 2r; mu and lambda drop out of
the p-adic valuations of its coefficients (Weierstrass preparation), and
nu is fitted against spanning-tree counts climbing the tower.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .arith import valuation
from .errors import (
    NoTowerError,
    NotConnectedError,
    StructureViolationError,
    ZeroPolynomialError,
)
from .graph import (
    DirectedMultigraph,
    adjacency_matrix,
    components,
    cycle_weight_profile,
    degree_profile,
    is_adjacency_normal,
    is_connected,
    is_total_degree_constant,
    subgraph,
)
from .linalg import kirchhoff_count, poly_matrix_determinant
from .polynomial import ONE_PLUS_T, IntPolynomial, constant
from .tower import ConstantVoltage, derive, stabilization_level


@dataclass(frozen=True)
class IwasawaInvariants:
    """mu, lambda and the stabilization level n0 of one tower component.

    ``mu_total`` and ``lam_total`` are the raw Weierstrass data of the
    characteristic polynomial, which sees all p^n0 components at once.
    The p-power carries through unchanged (mu_total = mu) while the
    distinguished degree spreads over the components: lam_total =
    p^n0 * (lam + 1).
    """

    p: int
    n0: int
    mu: int
    lam: int
    mu_total: int
    lam_total: int
    charpoly: IntPolynomial


@dataclass(frozen=True)
class TowerLevel:
    n: int
    component_count: int
    kappa_per_component: int
    ord_p: int
    predicted_ord_p: Optional[int] = None


@dataclass(frozen=True)
class TowerReport:
    """Per-level spanning-tree data with the fitted growth constant."""

    levels: tuple[TowerLevel, ...]
    fitted_nu: Optional[int]
    exact_from_level: Optional[int]


def char_poly(g: DirectedMultigraph) -> IntPolynomial:
    """P(T) = (1+T)^r * det(D - A(1+T) - A^t(1+T)^(-1)), exactly.

    Entry (i, j) of the cleared matrix is D_ij(1+T) - A_ij(1+T)^2 -
    (A^t)_ij with D the total-degree diagonal (loops counted twice) and A
    the adjacency matrix (loops once); every entry has degree at most 2,
    so 2r + 1 integer determinants pin the polynomial down.
    """
    if not is_connected(g):
        raise NotConnectedError("characteristic polynomial needs a connected graph")
    r = g.vertex_count
    prof = degree_profile(g)
    adj = adjacency_matrix(g)
    u2 = ONE_PLUS_T * ONE_PLUS_T
    entries: list[list[IntPolynomial]] = []
    for i in range(r):
        row = []
        for j in range(r):
            e = u2.scale(-adj[i][j]) - constant(adj[j][i])
            if i == j:
                e = e + ONE_PLUS_T.scale(prof.in_deg[i] + prof.out_deg[i])
            if e.degree > 2:
                raise StructureViolationError("matrix entry exceeds degree 2")
            row.append(e)
        entries.append(row)
    p = poly_matrix_determinant(entries, 2 * r)
    if p.coefficient(0) != 0:
        raise StructureViolationError(
            "characteristic polynomial has a nonzero constant term"
        )
    return p


def weierstrass(poly: IntPolynomial, p: int) -> tuple[int, int]:
    """(mu_total, lam_total): the least coefficient valuation and the first
    index attaining it, read straight off the integer coefficients."""
    if poly.is_zero:
        raise ZeroPolynomialError("zero polynomial has no Weierstrass data")
    mu_total = None
    lam_total = None
    for i, c in enumerate(poly):
        if c == 0:
            continue
        v = valuation(c, p)
        if mu_total is None or v < mu_total:
            mu_total = v
            lam_total = i
    return mu_total, lam_total


def invariants(g: DirectedMultigraph, p: int) -> IwasawaInvariants:
    """Iwasawa invariants of the constant tower over ``g``.

    At level n >= n0 the derived graph is p^n0 isomorphic components
    permuted by the deck action, so its Picard module is induced from one
    component's and the characteristic series composes with
    (1+T)^(p^n0) - 1.  Composition leaves the p-power alone (mu =
    mu_total) and multiplies the distinguished degree by p^n0, so p^n0
    must divide lam_total; a violation would be a bug, not a property of
    the input.  (Checked against brute-force tower data by the
    cross-validation suite, including mu > 0 towers with n0 > 0 where the
    two exponents genuinely differ.)
    """
    profile = cycle_weight_profile(g)
    n0 = stabilization_level(profile, p)
    if n0 is None:
        reason = "acyclic" if profile.is_acyclic else "zero-weight-gcd"
        raise NoTowerError(f"{g.name} admits no constant tower", reason=reason)
    poly = char_poly(g)
    mu_total, lam_total = weierstrass(poly, p)
    q = p**n0
    if lam_total % q:
        raise StructureViolationError(
            f"distinguished degree {lam_total} not divisible by p^n0={q}"
        )
    mu = mu_total
    lam = lam_total // q - 1
    if lam < 0:
        raise StructureViolationError("negative lambda")
    return IwasawaInvariants(p, n0, mu, lam, mu_total, lam_total, poly)


def verify_growth(
    g: DirectedMultigraph, p: int, n_max: int
) -> TowerReport:
    """Climb the tower and check ord_p(kappa_n) = mu p^m + lam m + nu.

    kappa_n counts spanning trees of one tower component at level n and
    m = n - n0 indexes the tower from its connected base.  nu is fitted at
    the top level and back-checked downward; ``exact_from_level`` is the
    least level from which the identity holds on all recorded data.
    """
    inv = invariants(g, p)
    n0 = inv.n0
    if n_max < n0 + 2:
        raise ValueError(f"n_max must be at least n0 + 2 = {n0 + 2}")
    voltage = ConstantVoltage(p)
    records = []
    for n in range(n0, n_max + 1):
        derived = derive(g, voltage, n)
        comps = components(derived.graph)
        anchor = next(c for c in comps if c[0] == 0)
        kappa = kirchhoff_count(subgraph(derived.graph, anchor))
        records.append((n, len(comps), kappa, valuation(kappa, p)))
    m_max = n_max - n0
    nu = records[-1][3] - inv.mu * p**m_max - inv.lam * m_max
    levels = []
    exact_from = None
    for n, ncomp, kappa, ord_p in records:
        m = n - n0
        predicted = inv.mu * p**m + inv.lam * m + nu
        if ord_p == predicted:
            if exact_from is None:
                exact_from = n
        else:
            exact_from = None
        levels.append(TowerLevel(n, ncomp, kappa, ord_p, predicted))
    return TowerReport(tuple(levels), nu, exact_from)


def fit_growth_parameters(
    points: Sequence[tuple[int, int]], p: int
) -> Optional[tuple[int, int, int]]:
    """Solve ord = mu p^m + lam m + nu exactly through the last three
    (m, ord) points; None if the solution is not integral."""
    if len(points) < 3:
        raise ValueError("need at least three data points")
    (m0, y0), (m1, y1), (m2, y2) = points[-3:]
    # eliminate nu, then lam
    a1, b1, c1 = p**m1 - p**m0, m1 - m0, y1 - y0
    a2, b2, c2 = p**m2 - p**m1, m2 - m1, y2 - y1
    det = a1 * b2 - a2 * b1
    if det == 0:
        return None
    mu = Fraction(c1 * b2 - c2 * b1, det)
    lam = Fraction(a1 * c2 - a2 * c1, det)
    if mu.denominator != 1 or lam.denominator != 1:
        return None
    mu_i, lam_i = int(mu), int(lam)
    nu = y0 - mu_i * p**m0 - lam_i * m0
    return mu_i, lam_i, nu


@dataclass(frozen=True)
class TheoremHypotheses:
    """Checkable hypotheses of the three mu/lambda theorems."""

    mu_positive_hyp: bool
    mu_zero_hyp: bool
    balanced_hyp: bool


def check_theorem_hypotheses(g: DirectedMultigraph, p: int) -> TheoremHypotheses:
    """mu_positive_hyp: p divides every in- and out-degree (forces mu > 0).
    mu_zero_hyp: constant total degree coprime to p and a normal adjacency
    matrix (forces mu = 0).  balanced_hyp: balanced, a cycle weight coprime
    to p when p = 2, and p does not divide k * kappa where k is the edge
    count (forces mu = 0, lambda = 1)."""
    if not is_connected(g):
        raise NotConnectedError("hypothesis checks need a connected graph")
    prof = degree_profile(g)
    mu_positive = all(
        d_i % p == 0 and d_o % p == 0
        for d_i, d_o in zip(prof.in_deg, prof.out_deg)
    )
    k_const = is_total_degree_constant(g)
    mu_zero = (
        k_const is not None and k_const % p != 0 and is_adjacency_normal(g)
    )
    balanced = prof.in_deg == prof.out_deg
    if balanced:
        profile = cycle_weight_profile(g)
        if p == 2:
            has_odd_cycle = (
                not profile.is_acyclic
                and profile.weight_gcd != 0
                and profile.weight_gcd % 2 != 0
            )
            balanced = has_odd_cycle
        if balanced:
            k = sum(prof.in_deg)
            balanced = (k * kirchhoff_count(g)) % p != 0
    return TheoremHypotheses(mu_positive, mu_zero, balanced)
