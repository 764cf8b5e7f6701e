"""Fundamental reflections and the pingpong orbit closure.

pingpong walks a seed root's Weyl orbit depth-first, keeping every image
that stays positive with height at most the cap, and propagates the
seed's multiplicity and c-value (both Weyl invariants) into the table.
It is the single writer of the shared RootTable while it runs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cartan import CartanMatrix
from .lattice import Vec, height, is_positive
from .metrics import PHASE_ADHOC, PHASE_PINGPONG, KillingCounter


@dataclass(frozen=True)
class OrbitBatch:
    seed: Vec
    members: frozenset[Vec]

    def __len__(self) -> int:
        return len(self.members)


def reflect(
    cm: CartanMatrix,
    i: int,
    beta: Vec,
    counter: KillingCounter | None = None,
    phase: str = PHASE_ADHOC,
) -> Vec:
    """Image of beta under the i-th fundamental reflection (0-based index):

        s_i(beta) = beta - (sum_j a_ij beta_j) alpha_i

    Counts as one Killing-form-equivalent evaluation when a counter is
    supplied (the coefficient is a full row pairing).
    """
    if not 0 <= i < cm.d:
        raise IndexError(f"reflection index {i} out of range for rank {cm.d}")
    if len(beta) != cm.d:
        raise ValueError("dimension mismatch")
    if counter is not None:
        counter.tick(phase)
    coef = sum(aij * bj for aij, bj in zip(cm.a[i], beta) if bj)
    return beta[:i] + (beta[i] - coef,) + beta[i + 1 :]


def pingpong(cm: CartanMatrix, seed: Vec, cap: int, table) -> OrbitBatch:
    """Close the seed's Weyl orbit under the height cap.

    Pops a vector, forms all d reflections, keeps the positive ones of
    height <= cap, and records each new one with the seed's stored values.
    Returns the batch of all orbit members visited (including ones that
    were already in the table); running it twice adds nothing the second
    time.  The seed must already be recorded.
    """
    record = table.get(seed)
    if record is None:
        raise KeyError(f"pingpong seed {seed} is not recorded in the table")
    if height(seed) > cap:
        raise ValueError("seed height exceeds the cap")

    members = {seed}
    stack = [seed]
    while stack:
        beta = stack.pop()
        for i in range(cm.d):
            gamma = reflect(cm, i, beta, table.counter, PHASE_PINGPONG)
            if gamma in members or height(gamma) > cap or not is_positive(gamma):
                continue
            members.add(gamma)
            stack.append(gamma)
            existing = table.get(gamma)
            if existing is None:
                table.record(gamma, record.c, record.mult, record.kind)
            elif (existing.c, existing.mult) != (record.c, record.mult):
                raise AssertionError(
                    f"orbit member {gamma} already recorded with conflicting values"
                )
    return OrbitBatch(seed=seed, members=frozenset(members))
