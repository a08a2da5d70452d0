"""Maximum partial triple systems on m vertices with prescribed leaves.

The maximum number of edge-disjoint triples in K_m is

    floor(C(m,2)/3 - m/6)   m even
    C(m,2)/3                m = 1, 3 (mod 6)
    floor(C(m,2)/3) - 1     m = 5 (mod 6)

and a maximum packing can always be chosen whose leave (the graph of
uncovered pairs) is: empty for m = 1, 3 (mod 6); a 4-cycle for
m = 5 (mod 6); a perfect matching for m = 0, 2 (mod 6); and a spanning
forest of m/2 + 1 edges with all degrees odd (a matching plus one claw)
for m = 4 (mod 6).

Packings are cached per m, so repeated witness construction at the same
vertex count reuses one triple system.
"""

from __future__ import annotations

from math import comb
from typing import Optional

from zforge.hypercore import Graph, Hypergraph
from zforge.triangles import triangle_decompose, BudgetExhaustedError, STATUS_OK


def max_pack_triples(m: int) -> int:
    """Maximum number of edge-disjoint triples in K_m."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    c = comb(m, 2)
    if m % 2 == 0:
        return (2 * c - m) // 6
    if m % 6 == 5:
        return c // 3 - 1
    return c // 3


def leave_graph(m: int) -> Graph:
    """The prescribed leave of a maximum triple packing of K_m."""
    if m % 6 in (1, 3):
        return Graph(m, frozenset())
    if m % 6 == 5:
        return Graph.from_pairs(m, [(0, 1), (1, 2), (2, 3), (0, 3)])
    if m % 6 in (0, 2):
        return Graph.from_pairs(m, [(2 * i, 2 * i + 1) for i in range(m // 2)])
    # m = 4 (mod 6): one claw at vertex 0 plus a matching on the rest
    pairs = [(0, 1), (0, 2), (0, 3)]
    pairs += [(2 * i, 2 * i + 1) for i in range(2, m // 2)]
    return Graph.from_pairs(m, pairs)


_pack_cache: dict[int, tuple[tuple[int, int, int], ...]] = {}


def max_packing(m: int, seed: int = 0,
                budget: Optional[int] = None) -> Hypergraph:
    """A maximum partial triple system on m vertices with prescribed leave."""
    if m in _pack_cache:
        return Hypergraph(m, _pack_cache[m])
    leave = leave_graph(m)
    target = Graph(m, frozenset(Graph.complete(m).adjacency - leave.adjacency))
    result = triangle_decompose(target, seed, budget)
    if result.status != STATUS_OK:
        raise BudgetExhaustedError(
            f"packing search failed on m={m}: {result.status}"
        )
    triples = result.triangles.triangles
    assert len(triples) == max_pack_triples(m)
    _pack_cache[m] = triples
    return Hypergraph(m, triples)
