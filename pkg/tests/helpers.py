"""Shared fixtures-in-spirit: test matrices and independent brute-force oracles.

The oracles here deliberately avoid the package's orbit/chamber/engine code
paths so they can arbitrate: plain box scans and breadth-first closures.
"""

from itertools import product

from rootmult import build, in_chamber
from rootmult.lattice import height, is_positive, leq, vsub

A2 = [[2, -1], [-1, 2]]
AFFINE_A1 = [[2, -2], [-2, 2]]
HYP3 = [[2, -3], [-3, 2]]
AFFINE_A2 = [[2, -1, -1], [-1, 2, -1], [-1, -1, 2]]
HYP3D = [[2, -2, -2], [-2, 2, -2], [-2, -2, 2]]
RANK1 = [[2]]

ALL_SMALL = [A2, AFFINE_A1, HYP3, AFFINE_A2, HYP3D, RANK1]


def box_points(d, lim):
    """All non-negative integer vectors with coordinates <= lim."""
    return product(*(range(lim + 1),) * d)


def brute_chamber_points(cm, cap):
    """Chamber lattice points of height <= cap by scanning the full box."""
    pts = [
        v
        for v in box_points(cm.d, cap)
        if sum(v) <= cap and in_chamber(cm, v)
    ]
    return sorted(pts, key=lambda v: (height(v), v))


def brute_hilbert_basis(cm, lim):
    """Irreducible chamber points found by bounded box search.

    lim must be generous enough to contain every generator; the callers
    use limits validated against the expected bases.
    """
    gens = []
    for beta in sorted(
        (v for v in box_points(cm.d, lim) if in_chamber(cm, v)),
        key=lambda v: (height(v), v),
    ):
        if not any(leq(g, beta) and in_chamber(cm, vsub(beta, g)) for g in gens):
            gens.append(beta)
    return gens


def brute_real_roots(cm, cap):
    """Reflection closure of the simple roots through positives of height <= cap,
    via a plain breadth-first search carrying no multiplicity data."""
    simples = {tuple(1 if j == i else 0 for j in range(cm.d)) for i in range(cm.d)}
    seen = set(simples)
    frontier = list(simples)
    while frontier:
        beta = frontier.pop()
        for i in range(cm.d):
            coef = sum(cm.a[i][j] * beta[j] for j in range(cm.d))
            image = beta[:i] + (beta[i] - coef,) + beta[i + 1 :]
            if image not in seen and is_positive(image) and height(image) <= cap:
                seen.add(image)
                frontier.append(image)
    return seen


def build_all(grids):
    return [build(g) for g in grids]
