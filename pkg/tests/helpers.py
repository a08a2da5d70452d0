"""Shared test utilities: fast random linear hypergraph generation."""

from __future__ import annotations

import random

from zforge.hypercore import Hypergraph


def random_linear(rng: random.Random, m: int,
                  max_edges: int = 25) -> Hypergraph:
    """A random linear hypergraph on m vertices via greedy insertion.

    Edge sizes are drawn from {2, 3, 4}; an edge is kept only if all of
    its pairs are still uncovered, so linearity holds by construction.
    """
    used: set[tuple[int, int]] = set()
    edges: list[tuple[int, ...]] = []
    target = rng.randint(1, max_edges)
    tries = 0
    while len(edges) < target and tries < 8 * max_edges:
        tries += 1
        k = rng.choice((2, 3, 3, 4))
        if k > m:
            continue
        e = tuple(sorted(rng.sample(range(m), k)))
        pairs = [(e[i], e[j]) for i in range(k) for j in range(i + 1, k)]
        if any(p in used for p in pairs):
            continue
        used.update(pairs)
        edges.append(e)
    if not edges:
        edges.append((0, 1))
    return Hypergraph(m, tuple(edges))
