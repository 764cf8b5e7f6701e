"""Naive full-lattice Peterson evaluation, the engine's correctness oracle.

Walks every positive lattice point of height <= cap in ascending order and
applies the recurrence over all subroots of the coordinate box, with no
knowledge of roots, orbits or the chamber; only the simple roots are
seeded.  Deliberately shares nothing with the graded-ascent engine beyond
the Cartan and lattice primitives, and stays single-threaded: it is a test
instrument, determinism over speed.

Intended for d <= 3 and cap <= 15; the cost grows like the closed-form
naive bound.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

from .cartan import CartanMatrix, killing, rho_pair
from .lattice import Vec, coord_gcd, height, mobius, render, subroots, unit, vdiv
from .metrics import PHASE_ORACLE, KillingCounter
from .peterson import NonIntegerMultiplicity


@dataclass
class OracleTable:
    cm: CartanMatrix
    cap: int
    c: dict[Vec, Fraction] = field(default_factory=dict)
    mult: dict[Vec, int] = field(default_factory=dict)
    counter: KillingCounter = field(default_factory=KillingCounter)
    gaps: list[Vec] = field(default_factory=list)

    def export_rows(self):
        """Rows for every point carrying multiplicity, engine-schema order."""
        vecs = sorted(
            (v for v, m in self.mult.items() if m > 0),
            key=lambda v: (height(v), v),
        )
        for v in vecs:
            nrm = killing(self.cm, v, v)
            kind = "real" if nrm > 0 else "imaginary"
            cval = self.c[v]
            yield {
                "coords": v,
                "height": height(v),
                "norm": nrm,
                "c": f"{cval.numerator}/{cval.denominator}",
                "mult": self.mult[v],
                "kind": kind,
            }


def _points_of_height(d: int, h: int) -> Iterator[Vec]:
    """Non-negative integer vectors with coordinate sum h, lexicographic."""
    if d == 1:
        yield (h,)
        return
    for first in range(h + 1):
        for rest in _points_of_height(d - 1, h - first):
            yield (first,) + rest


def _descend_mult(tab: OracleTable, beta: Vec) -> int:
    """Multiplicity of a positive-norm primitive vector via one reflection.

    Such a vector pairs positively with some simple root; the reflection
    there drops the height, and multiplicity is Weyl invariant.  A mixed
    sign image means beta was no root at all.
    """
    cm = tab.cm
    for i in range(cm.d):
        coef = sum(aij * bj for aij, bj in zip(cm.a[i], beta))
        if coef > 0:
            image = beta[:i] + (beta[i] - coef,) + beta[i + 1 :]
            if all(x >= 0 for x in image):
                return tab.mult[image]
            return 0
    raise AssertionError(f"{render(beta)} has positive norm but no descent")


def _zero_denominator_c(tab: OracleTable, beta: Vec) -> Fraction:
    """Fallback c-value where the recurrence denominator vanishes.

    Vanishing forces (beta, beta) = 2 (rho, beta) > 0, so the divisor logic
    for positive-norm vectors applies: c = 1/l when beta/l carries
    multiplicity (l = gcd of coordinates), and for primitive beta the value
    is its own multiplicity, recovered by descending a height-lowering
    reflection to an already-stored point.
    """
    n = coord_gcd(beta)
    if n >= 2:
        return Fraction(1, n) if tab.mult[vdiv(beta, n)] > 0 else Fraction(0)
    return Fraction(_descend_mult(tab, beta))


def naive_compute(
    cm: CartanMatrix, cap: int, counter: KillingCounter | None = None
) -> OracleTable:
    """Compute c and mult on every positive lattice point of height <= cap.

    Simple roots are seeded with c = 1; every other point gets the full
    recurrence sum over all box subroots, one counted form per subroot plus
    one for the denominator.  Zero-denominator points take the fallback and
    are logged in .gaps.  Multiplicities come from the same Moebius
    inversion the engine uses and must be non-negative integers.
    """
    if cap < 1:
        raise ValueError("cap must be >= 1")
    tab = OracleTable(cm=cm, cap=cap, counter=counter or KillingCounter())
    simples = set(unit(cm.d, i) for i in range(cm.d))

    for h in range(1, cap + 1):
        for beta in _points_of_height(cm.d, h):
            if beta in simples:
                cval = Fraction(1)
            else:
                denom = killing(cm, beta, beta, tab.counter, PHASE_ORACLE) - rho_pair(
                    cm, beta
                )
                if denom == 0:
                    cval = _zero_denominator_c(tab, beta)
                    tab.gaps.append(beta)
                else:
                    total = Fraction(0)
                    for gamma in subroots(beta):
                        rest = tuple(b - g for b, g in zip(beta, gamma))
                        form = killing(cm, gamma, rest, tab.counter, PHASE_ORACLE)
                        cg = tab.c[gamma]
                        cr = tab.c[rest]
                        if form and cg and cr:
                            total += form * cg * cr
                    cval = total / denom
            tab.c[beta] = cval

            m = Fraction(cval)
            g = coord_gcd(beta)
            for n in range(2, g + 1):
                if g % n == 0:
                    mu = mobius(n)
                    if mu:
                        m += Fraction(mu, n) * tab.c[vdiv(beta, n)]
            if m.denominator != 1 or m < 0:
                raise NonIntegerMultiplicity(
                    f"oracle m({render(beta)}) = {m} is not a non-negative integer"
                )
            tab.mult[beta] = int(m)
    return tab


def compare_tables(table, tab: OracleTable) -> list[dict]:
    """Disagreements between an engine table and an oracle table.

    Checks every positive lattice point up to the smaller cap where either
    side reports a nonzero c or multiplicity; exact rational comparison.
    """
    from .peterson import c_value, query_mult

    cap = min(table.cap, tab.cap)
    mismatches = []
    for h in range(1, cap + 1):
        for v in _points_of_height(table.cm.d, h):
            ec = c_value(table, v)
            em = query_mult(table, v)
            oc = tab.c.get(v, Fraction(0))
            om = tab.mult.get(v, 0)
            if (ec, em) != (oc, om) and (ec or em or oc or om):
                mismatches.append(
                    {"coords": v, "engine": (ec, em), "oracle": (oc, om)}
                )
    return mismatches
