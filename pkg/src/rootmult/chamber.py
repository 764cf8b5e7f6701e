"""The fundamental imaginary chamber and its semigroup of lattice points.

The chamber cone is {x >= 0 : (S x)_j <= 0 for all j}; it always sits in
the positive orthant, hence is pointed, so its lattice points form a
finitely generated semigroup with a unique minimal generating set (the
Hilbert basis).

The basis is computed internally in three stages:

1. extreme rays of the cone by the double-description method, exact
   arithmetic, primitive integer representatives;
2. shortcut: a single ray generates alone, and a simplicial cone whose
   ray matrix has determinant +-1 is generated freely by its rays (this
   covers the finite, affine and classic hyperbolic cases);
3. otherwise a bounded graded completion: every irreducible lattice point
   lies componentwise under the sum of the extreme rays, so enumerate the
   chamber points of that box in (height, lex) order and keep each point
   that no earlier generator reduces.

The safety bounds turn a surprisingly large computation into CapExceeded
instead of an unbounded loop.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .cartan import CartanMatrix
from .lattice import Vec, height, leq, vadd, vsub


class CapExceeded(RuntimeError):
    """The Hilbert-basis completion hit its safety bound before finishing."""


@dataclass(frozen=True)
class HilbertBasis:
    generators: tuple[Vec, ...]

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)


def in_chamber(cm: CartanMatrix, beta: Vec) -> bool:
    """True iff beta is a nonzero non-negative vector with (S beta)_j <= 0 for
    every j (equivalently (beta, alpha_j) <= 0, the symmetrizer being positive)."""
    if len(beta) != cm.d:
        raise ValueError("dimension mismatch")
    if not any(beta) or any(b < 0 for b in beta):
        return False
    for row in cm.s:
        if sum(r * b for r, b in zip(row, beta) if b) > 0:
            return False
    return True


def _primitive(v: tuple[int, ...]) -> tuple[int, ...]:
    g = gcd(*v)
    return tuple(x // g for x in v)


def extreme_rays(cm: CartanMatrix) -> list[Vec]:
    """Extreme rays of the chamber cone as primitive integer vectors.

    Incremental double description seeded with the positive orthant, adding
    the facets -(S x)_j >= 0 one at a time.  Adjacency of two rays is the
    standard combinatorial test: no third ray's active set contains the
    intersection of theirs.
    """
    d = cm.d
    constraints: list[tuple[int, ...]] = [
        tuple(1 if j == i else 0 for j in range(d)) for i in range(d)
    ]
    rays: list[tuple[int, ...]] = [
        tuple(1 if j == i else 0 for j in range(d)) for i in range(d)
    ]

    def active_set(ray):
        return frozenset(
            k for k, c in enumerate(constraints)
            if sum(x * y for x, y in zip(c, ray)) == 0
        )

    for srow in cm.s:
        new_constraint = tuple(-x for x in srow)
        vals = [sum(c * r for c, r in zip(new_constraint, ray)) for ray in rays]
        if all(v >= 0 for v in vals):
            constraints.append(new_constraint)
            continue
        zs = [active_set(r) for r in rays]
        keep = [rays[k] for k, v in enumerate(vals) if v >= 0]
        fresh: list[tuple[int, ...]] = []
        for p, vp in zip(range(len(rays)), vals):
            if vp <= 0:
                continue
            for n, vn in zip(range(len(rays)), vals):
                if vn >= 0:
                    continue
                common = zs[p] & zs[n]
                adjacent = not any(
                    k != p and k != n and common <= zs[k] for k in range(len(rays))
                )
                if not adjacent:
                    continue
                combo = tuple(
                    vp * rn - vn * rp for rp, rn in zip(rays[p], rays[n])
                )
                fresh.append(_primitive(combo))
        constraints.append(new_constraint)
        merged = []
        seen = set()
        for r in keep + fresh:
            if r not in seen:
                seen.add(r)
                merged.append(r)
        rays = merged

    for ray in rays:
        for c in constraints:
            assert sum(x * y for x, y in zip(c, ray)) >= 0
    return sorted(rays, key=lambda r: (height(r), r))


def _det(columns: list[Vec]) -> int:
    """Exact determinant of a square integer matrix given by its columns."""
    n = len(columns)
    m = [[Fraction(columns[j][i]) for j in range(n)] for i in range(n)]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col]), None)
        if pivot is None:
            return 0
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            if m[r][col]:
                factor = m[r][col] * inv
                for c in range(col, n):
                    m[r][c] -= factor * m[col][c]
    assert det.denominator == 1
    return int(det)


def _chamber_points_under(cm: CartanMatrix, bound: Vec, node_budget: int) -> list[Vec]:
    """All chamber lattice points componentwise <= bound, by coordinate DFS.

    A partial assignment is cut as soon as some form row cannot reach <= 0
    within the remaining coordinate ranges.  node_budget caps the number of
    DFS nodes visited.
    """
    d = cm.d
    # suffix_min[j][k]: most negative contribution rows j can still pick up
    # from coordinates k..d-1.
    suffix_min = []
    for row in cm.s:
        acc = [0] * (d + 1)
        for k in range(d - 1, -1, -1):
            acc[k] = acc[k + 1] + min(0, row[k] * bound[k])
        suffix_min.append(acc)

    out: list[Vec] = []
    partial = [0] * d
    row_sums = [0] * d
    nodes = 0

    def rec(k: int) -> None:
        nonlocal nodes
        nodes += 1
        if nodes > node_budget:
            raise CapExceeded(
                f"chamber box enumeration exceeded {node_budget} nodes"
            )
        if k == d:
            if any(partial) and all(rs <= 0 for rs in row_sums):
                out.append(tuple(partial))
            return
        for v in range(bound[k] + 1):
            partial[k] = v
            for j in range(d):
                row_sums[j] += cm.s[j][k] * v
            if all(row_sums[j] + suffix_min[j][k + 1] <= 0 for j in range(d)):
                rec(k + 1)
            for j in range(d):
                row_sums[j] -= cm.s[j][k] * v
        partial[k] = 0

    rec(0)
    return out


def hilbert_basis(
    cm: CartanMatrix,
    max_height: int | None = None,
    node_budget: int = 5_000_000,
) -> HilbertBasis:
    """Minimal generating set of the chamber semigroup, sorted (height, lex).

    max_height bounds the height of any generator the completion is willing
    to certify (default 10 * d * max |S_ij|); CapExceeded signals that the
    basis could not be completed within the bounds.
    """
    if max_height is None:
        max_height = 10 * cm.d * max(abs(x) for row in cm.s for x in row)

    rays = extreme_rays(cm)
    if not rays:
        return HilbertBasis(())
    if len(rays) == 1:
        # A primitive ray generates its lattice points alone.
        return HilbertBasis((rays[0],))
    if len(rays) == cm.d and abs(_det(rays)) == 1:
        # Unimodular simplicial cone: the semigroup is free on the rays.
        return HilbertBasis(tuple(sorted(rays, key=lambda r: (height(r), r))))

    bound = rays[0]
    for r in rays[1:]:
        bound = vadd(bound, r)
    if height(bound) > max_height:
        raise CapExceeded(
            f"certified generator height bound {height(bound)} exceeds "
            f"max_height {max_height}"
        )

    candidates = _chamber_points_under(cm, bound, node_budget)
    candidates.sort(key=lambda v: (height(v), v))
    generators: list[Vec] = []
    for beta in candidates:
        reducible = any(
            leq(g, beta) and in_chamber(cm, vsub(beta, g)) for g in generators
        )
        if not reducible:
            generators.append(beta)
    return HilbertBasis(tuple(generators))


def enumerate_chamber(cm: CartanMatrix, hb: HilbertBasis, cap: int) -> list[Vec]:
    """All chamber lattice points of height <= cap, sorted (height, lex).

    Non-negative combinations of the generators, deduplicated: chamber
    points need not decompose uniquely when the cone is not simplicial.
    """
    gens = hb.generators
    found: set[Vec] = set()
    seen_states: set[tuple[Vec, int]] = set()
    stack: list[tuple[Vec, int]] = [((0,) * cm.d, 0)]
    while stack:
        base, start = stack.pop()
        for idx in range(start, len(gens)):
            g = gens[idx]
            w = vadd(base, g)
            if height(w) > cap:
                # Generators are height-sorted, so later ones only overshoot.
                break
            state = (w, idx)
            if state in seen_states:
                continue
            seen_states.add(state)
            found.add(w)
            stack.append(state)
    return sorted(found, key=lambda v: (height(v), v))
