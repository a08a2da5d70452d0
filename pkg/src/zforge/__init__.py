"""Exact Zarankiewicz values Z_{2,2}(m,n) and certified witness hypergraphs.

Z_{2,2}(m,n) is the maximum total degree of a linear hypergraph with m
vertices and n edges.  This package evaluates the known piecewise formulas
with exact rational arithmetic, constructs linear hypergraphs attaining
them, and cross-checks both against an independent exhaustive search on
small instances.
"""

from zforge.hypercore import (
    Graph,
    Hypergraph,
    Witness,
    verify_witness,
    witness_from_json,
    witness_to_json,
)
from zforge.bounds import BoundReport, upper_bounds, z_above, z_below, z_value
from zforge.witness import ConstructionUnavailable, construct
from zforge.oracle import exact_z, gdd_exists_bruteforce, max_triples

__all__ = [
    "Graph",
    "Hypergraph",
    "Witness",
    "verify_witness",
    "witness_from_json",
    "witness_to_json",
    "BoundReport",
    "upper_bounds",
    "z_above",
    "z_below",
    "z_value",
    "ConstructionUnavailable",
    "construct",
    "exact_z",
    "gdd_exists_bruteforce",
    "max_triples",
]
