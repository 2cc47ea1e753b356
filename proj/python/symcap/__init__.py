"""Exact ECH capacities, obstruction classes and staircases for convex toric domains.

Exact numbers are passed and returned as strings such as "22/9" or
"3 + 2*sqrt(2)"; tuples use the "b:b1,b2,..." form.
"""

from ._core import (
    DomainError,
    capacities,
    continued_fraction,
    cremona_chain,
    cut,
    ellipsoid_capacities,
    integral_weights,
    is_exceptional,
    mu,
    run_cli,
    stats,
    staircase,
    weight_expansion,
)

__all__ = [
    "DomainError",
    "capacities",
    "continued_fraction",
    "cremona_chain",
    "cut",
    "ellipsoid_capacities",
    "integral_weights",
    "is_exceptional",
    "mu",
    "run_cli",
    "stats",
    "staircase",
    "weight_expansion",
]
