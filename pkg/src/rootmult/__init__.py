"""Exact root multiplicities of symmetrizable Kac-Moody algebras.

The engine discovers every positive root up to a height cap: real roots by
closing Weyl orbits of the simple roots, imaginary roots by evaluating the
Peterson recurrence on the points of the fundamental chamber in ascending
height order.  All arithmetic is exact, and every bilinear-form evaluation
is counted so the measured cost can be compared against the closed-form
cost of the naive full-lattice algorithm.
"""

from .cartan import CartanMatrix, NotGCM, NotSymmetrizable, build, killing, rho_pair
from .chamber import (
    CapExceeded,
    HilbertBasis,
    enumerate_chamber,
    extreme_rays,
    hilbert_basis,
    in_chamber,
)
from .lattice import coord_gcd, divisors, height, render, subroots
from .metrics import (
    KillingCounter,
    counter_snapshot,
    k_ascent_measured,
    k_naive_closed,
)
from .oracle import OracleTable, compare_tables, naive_compute
from .peterson import (
    HeightExceedsCap,
    NonIntegerMultiplicity,
    RootRecord,
    RootTable,
    ZeroDenominator,
    c_real_direction,
    c_value,
    compute_all,
    mobius_mult,
    peterson_c,
    query_mult,
)
from .presets import preset_matrix, tree_matrix
from .weyl import OrbitBatch, pingpong, reflect

__version__ = "0.1.0"

__all__ = [
    "CartanMatrix",
    "NotGCM",
    "NotSymmetrizable",
    "build",
    "killing",
    "rho_pair",
    "CapExceeded",
    "HilbertBasis",
    "enumerate_chamber",
    "extreme_rays",
    "hilbert_basis",
    "in_chamber",
    "coord_gcd",
    "divisors",
    "height",
    "render",
    "subroots",
    "KillingCounter",
    "counter_snapshot",
    "k_ascent_measured",
    "k_naive_closed",
    "OracleTable",
    "compare_tables",
    "naive_compute",
    "HeightExceedsCap",
    "NonIntegerMultiplicity",
    "RootRecord",
    "RootTable",
    "ZeroDenominator",
    "c_real_direction",
    "c_value",
    "compute_all",
    "mobius_mult",
    "peterson_c",
    "query_mult",
    "preset_matrix",
    "tree_matrix",
    "OrbitBatch",
    "pingpong",
    "reflect",
]
