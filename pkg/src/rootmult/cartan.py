"""Generalized Cartan matrices, their symmetrization and the invariant form.

A symmetrizable GCM A decomposes as A = D B with D a positive diagonal
matrix.  We store the integer matrix S = diag(d_i) * A instead of the
rational B: S agrees with the invariant form up to one global positive
scale, and every quantity computed downstream (c-values, multiplicities,
chamber membership) is invariant under that scale.  The symmetrizer is
canonicalized to coprime positive integers so output is reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .lattice import Vec, unit
from .metrics import PHASE_ADHOC, KillingCounter


class NotGCM(ValueError):
    """The grid violates a generalized-Cartan-matrix axiom."""


class NotSymmetrizable(ValueError):
    """The ratio constraints d_i a_ij = d_j a_ji are inconsistent."""


@dataclass(frozen=True)
class CartanMatrix:
    d: int
    a: tuple[tuple[int, ...], ...]
    sym: tuple[int, ...]
    s: tuple[tuple[int, ...], ...]

    def simple_roots(self) -> tuple[Vec, ...]:
        return tuple(unit(self.d, i) for i in range(self.d))

    def scaled(self, factor: int) -> "CartanMatrix":
        """Same matrix with the form replaced by factor * S.

        Deliberately skips the coprime canonicalization; exists so the
        scale-invariance of c-values and multiplicities can be asserted.
        """
        if factor < 1:
            raise ValueError("scale factor must be a positive integer")
        return CartanMatrix(
            d=self.d,
            a=self.a,
            sym=tuple(factor * x for x in self.sym),
            s=tuple(tuple(factor * x for x in row) for row in self.s),
        )


def build(entries) -> CartanMatrix:
    """Validate a square integer grid as a symmetrizable GCM.

    Returns the matrix together with its minimal integer symmetrizer,
    found by propagating d_j = d_i * a_ij / a_ji over each Dynkin-graph
    component and clearing denominators.

    Raises NotGCM on an axiom violation, NotSymmetrizable if the ratio
    constraints conflict around a cycle, ValueError on a malformed grid.
    """
    rows = [list(r) for r in entries]
    d = len(rows)
    if d < 1:
        raise ValueError("empty matrix")
    for r in rows:
        if len(r) != d:
            raise ValueError("matrix is not square")
        for x in r:
            if not isinstance(x, int) or isinstance(x, bool):
                raise ValueError(f"non-integer entry {x!r}")
    a = tuple(tuple(r) for r in rows)

    for i in range(d):
        if a[i][i] != 2:
            raise NotGCM(f"diagonal entry a[{i}][{i}] = {a[i][i]} != 2")
        for j in range(d):
            if i == j:
                continue
            if a[i][j] > 0:
                raise NotGCM(f"positive off-diagonal entry a[{i}][{j}] = {a[i][j]}")
            if (a[i][j] == 0) != (a[j][i] == 0):
                raise NotGCM(f"zero pattern asymmetric at ({i},{j})")

    # Propagate symmetrizer ratios over each connected component.
    ratios: list[Fraction | None] = [None] * d
    for start in range(d):
        if ratios[start] is not None:
            continue
        component = [start]
        ratios[start] = Fraction(1)
        queue = [start]
        while queue:
            i = queue.pop()
            for j in range(d):
                if j == i or a[i][j] == 0:
                    continue
                want = ratios[i] * Fraction(a[i][j], a[j][i])
                if ratios[j] is None:
                    ratios[j] = want
                    component.append(j)
                    queue.append(j)
                elif ratios[j] != want:
                    raise NotSymmetrizable(
                        f"inconsistent symmetrizer ratio around a cycle at ({i},{j})"
                    )
        # Smallest positive integers realizing the component's ratios.
        denom_lcm = lcm(*(r.denominator for r in (ratios[k] for k in component)))
        ints = [ratios[k] * denom_lcm for k in component]
        g = gcd(*(x.numerator for x in ints))
        for k, val in zip(component, ints):
            ratios[k] = Fraction(val, g)

    sym = tuple(int(r) for r in ratios)
    s = tuple(tuple(sym[i] * a[i][j] for j in range(d)) for i in range(d))
    for i in range(d):
        for j in range(d):
            if s[i][j] != s[j][i]:
                raise NotSymmetrizable(f"symmetrization failed at ({i},{j})")
    return CartanMatrix(d=d, a=a, sym=sym, s=s)


def killing(
    cm: CartanMatrix,
    beta: Vec,
    gamma: Vec,
    counter: KillingCounter | None = None,
    phase: str = PHASE_ADHOC,
) -> int:
    """The invariant bilinear form beta^T * S * gamma.

    Ticks the counter exactly once per call when one is supplied.
    """
    if len(beta) != cm.d or len(gamma) != cm.d:
        raise ValueError("dimension mismatch")
    if counter is not None:
        counter.tick(phase)
    s = cm.s
    total = 0
    for i, bi in enumerate(beta):
        if bi:
            row = s[i]
            total += bi * sum(row[j] * gj for j, gj in enumerate(gamma) if gj)
    return total


def rho_pair(cm: CartanMatrix, beta: Vec) -> int:
    """2 * (rho, beta) where rho is the Weyl vector: sum_i beta_i * S_ii.

    Induced by 2 (rho, alpha_i) = (alpha_i, alpha_i).  A linear functional,
    so it never counts as a form evaluation.
    """
    if len(beta) != cm.d:
        raise ValueError("dimension mismatch")
    return sum(beta[i] * cm.s[i][i] for i in range(cm.d))
