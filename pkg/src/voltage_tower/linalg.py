"""Exact big-integer linear algebra.

Everything here is exact: determinants by fraction-free elimination,
spanning-tree counts through the Laplacian, Smith normal form for Picard
torsion, and polynomial-matrix determinants by evaluation at integer
points followed by rational interpolation.  No floating point anywhere;
p-adic valuations downstream depend on it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .backend import bareiss_determinant
from .errors import (
    NonIntegralInterpolationError,
    NotConnectedError,
    NotSquareError,
    TooLargeError,
)
from .graph import DirectedMultigraph, is_connected
from .polynomial import IntPolynomial

BRUTE_FORCE_EDGE_CAP = 16


@dataclass(frozen=True)
class IntMatrix:
    """Dense arbitrary-precision integer matrix, entries row-major."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "entries", tuple(int(e) for e in self.entries)
        )
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entries length must be rows * cols")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "IntMatrix":
        r = len(rows)
        c = len(rows[0]) if r else 0
        if any(len(row) != c for row in rows):
            raise ValueError("ragged rows")
        return cls(r, c, tuple(itertools.chain.from_iterable(rows)))

    def to_rows(self) -> list[list[int]]:
        c = self.cols
        return [
            list(self.entries[i * c : (i + 1) * c]) for i in range(self.rows)
        ]

    def get(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]


def determinant(m: IntMatrix) -> int:
    """Exact determinant (Bareiss fraction-free elimination)."""
    if m.rows != m.cols:
        raise NotSquareError(f"matrix is {m.rows}x{m.cols}")
    return bareiss_determinant(m.to_rows())


def _laplacian_rows(g: DirectedMultigraph) -> list[list[int]]:
    # Laplacian of the undirected image; loops are dropped (they belong to
    # no spanning tree and would cancel in D - A - A^t anyway).
    n = g.vertex_count
    lap = [[0] * n for _ in range(n)]
    for s, t in g.edges:
        if s == t:
            continue
        lap[s][s] += 1
        lap[t][t] += 1
        lap[s][t] -= 1
        lap[t][s] -= 1
    return lap


def kirchhoff_count(
    g: DirectedMultigraph, row: int = 0, col: int = 0
) -> int:
    """Number of spanning trees of the undirected image via the
    matrix-tree theorem: (-1)^(row+col) det of the Laplacian minor."""
    if not is_connected(g):
        raise NotConnectedError("spanning trees need a connected graph")
    lap = _laplacian_rows(g)
    minor = [
        [x for j, x in enumerate(r) if j != col]
        for i, r in enumerate(lap)
        if i != row
    ]
    det = bareiss_determinant(minor)
    count = -det if (row + col) % 2 else det
    if count < 1:
        raise AssertionError("spanning-tree count must be positive")
    return count


def brute_force_spanning_trees(g: DirectedMultigraph) -> int:
    """Oracle: count (|V|-1)-subsets of non-loop edges that form a
    spanning tree, checked with union-find.  Capped at 16 edges."""
    if len(g.edges) > BRUTE_FORCE_EDGE_CAP:
        raise TooLargeError(
            f"{len(g.edges)} edges exceeds the cap of {BRUTE_FORCE_EDGE_CAP}"
        )
    if not is_connected(g):
        raise NotConnectedError("spanning trees need a connected graph")
    n = g.vertex_count
    non_loop = [(s, t) for s, t in g.edges if s != t]
    need = n - 1
    count = 0
    for subset in itertools.combinations(non_loop, need):
        parent = list(range(n))

        def find(v: int) -> int:
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        acyclic = True
        for s, t in subset:
            rs, rt = find(s), find(t)
            if rs == rt:
                acyclic = False
                break
            parent[rs] = rt
        if acyclic:
            count += 1
    return count


def smith_normal_form(m: IntMatrix) -> list[int]:
    """Invariant factors d1 | d2 | ... of an integer matrix (non-negative,
    zeros last)."""
    a = m.to_rows()
    nrows, ncols = m.rows, m.cols
    size = min(nrows, ncols)
    factors = []
    t = 0
    while t < size:
        # locate a nonzero entry of least magnitude in the trailing block
        pivot = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                if a[i][j] != 0 and (
                    pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])
                ):
                    pivot = (i, j)
        if pivot is None:
            break
        while True:
            pi, pj = pivot
            if pi != t:
                a[t], a[pi] = a[pi], a[t]
            if pj != t:
                for row in a:
                    row[t], row[pj] = row[pj], row[t]
            dirty = False
            for i in range(t + 1, nrows):
                q = a[i][t] // a[t][t]
                if q:
                    for j in range(t, ncols):
                        a[i][j] -= q * a[t][j]
                if a[i][t]:
                    dirty = True
            for j in range(t + 1, ncols):
                q = a[t][j] // a[t][t]
                if q:
                    for i in range(t, nrows):
                        a[i][j] -= q * a[i][t]
                if a[t][j]:
                    dirty = True
            if dirty:
                pivot = min(
                    (
                        (i, j)
                        for i in range(t, nrows)
                        for j in range(t, ncols)
                        if a[i][j] != 0
                    ),
                    key=lambda ij: abs(a[ij[0]][ij[1]]),
                )
                continue
            # pivot must divide the rest of the block for the divisibility
            # chain; if not, fold the offending row in and restart
            offender = None
            for i in range(t + 1, nrows):
                for j in range(t + 1, ncols):
                    if a[i][j] % a[t][t] != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            for j in range(t, ncols):
                a[t][j] += a[offender][j]
            pivot = (t, t)
        factors.append(abs(a[t][t]))
        t += 1
    factors.extend([0] * (size - len(factors)))
    return factors


def _default_points(count: int) -> list[int]:
    # 0, 1, -1, 2, -2, ...
    pts = [0]
    k = 1
    while len(pts) < count:
        pts.append(k)
        if len(pts) < count:
            pts.append(-k)
        k += 1
    return pts[:count]


def poly_matrix_determinant(
    entries: Sequence[Sequence[IntPolynomial]],
    degree_bound: int,
    points: Optional[Sequence[int]] = None,
) -> IntPolynomial:
    """Determinant of a square matrix of integer polynomials.

    Evaluates the matrix at ``degree_bound + 1`` distinct integers, takes
    exact integer determinants, and recovers the coefficients by Lagrange
    interpolation over the rationals.  A non-integral coefficient means the
    true degree exceeded ``degree_bound``.
    """
    n = len(entries)
    if any(len(row) != n for row in entries):
        raise NotSquareError("polynomial matrix is not square")
    if degree_bound < 0:
        raise ValueError("degree_bound must be non-negative")
    npts = degree_bound + 1
    xs = list(points) if points is not None else _default_points(npts)
    if len(xs) != npts or len(set(xs)) != npts:
        raise ValueError(f"need {npts} distinct evaluation points")
    ys = [
        bareiss_determinant([[e(x) for e in row] for row in entries])
        for x in xs
    ]
    return _interpolate_integer(xs, ys)


def _interpolate_integer(xs: Sequence[int], ys: Sequence[int]) -> IntPolynomial:
    npts = len(xs)
    # master = prod (T - x_j); master_i = master / (T - x_i) by synthetic
    # division, so each Lagrange basis costs O(npts)
    master = [Fraction(1)]
    for x in xs:
        master = [0] + master
        for i in range(len(master) - 1):
            master[i] -= x * master[i + 1]
    coeffs = [Fraction(0)] * npts
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        if yi == 0:
            continue
        quotient = [Fraction(0)] * npts
        carry = master[npts]
        for k in range(npts - 1, -1, -1):
            quotient[k] = carry
            carry = master[k] + xi * carry
        denom = 1
        for j, xj in enumerate(xs):
            if j != i:
                denom *= xi - xj
        scale = Fraction(yi, denom)
        for k in range(npts):
            coeffs[k] += scale * quotient[k]
    out = []
    for k, c in enumerate(coeffs):
        if c.denominator != 1:
            raise NonIntegralInterpolationError(
                f"coefficient of T^{k} interpolated to {c}; degree bound violated"
            )
        out.append(c.numerator)
    return IntPolynomial(out)
