"""Multigraded Betti numbers of monomial ideals through Koszul homology."""

from ._core import (
    DEFAULT_CHARACTERISTIC,
    BettiTable,
    DimensionError,
    InfeasibleError,
    InvariantError,
    KoszulError,
    MonomialIdeal,
    ParseError,
    PreconditionError,
    betti_table,
    betti_via_simplicial,
    candidate_multidegrees,
    is_generic,
    is_quasi_stable,
    koszul_homology_dim,
    lcm_lattice,
    scarf_betti,
    taylor_betti,
)

__all__ = [
    "DEFAULT_CHARACTERISTIC",
    "BettiTable",
    "DimensionError",
    "InfeasibleError",
    "InvariantError",
    "KoszulError",
    "MonomialIdeal",
    "ParseError",
    "PreconditionError",
    "betti_table",
    "betti_via_simplicial",
    "candidate_multidegrees",
    "is_generic",
    "is_quasi_stable",
    "koszul_homology_dim",
    "lcm_lattice",
    "scarf_betti",
    "taylor_betti",
]
