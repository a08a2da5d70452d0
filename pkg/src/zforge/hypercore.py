"""Core data model: hypergraphs, graphs, and the witness verifier.

A hypergraph is m labelled vertices 0..m-1 plus an ordered multiset of
edges, each a nonempty ascending tuple of distinct vertex ids.  It is
linear when every unordered vertex pair lies in at most one edge, and a
linear space when every pair lies in exactly one.  The total degree is
the sum of edge sizes.

All values here are immutable after construction and every operation is
pure, so everything is safe to share across threads.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Iterable, NamedTuple, Optional


class NotLinearError(ValueError):
    """Raised when an operation requires a linear hypergraph."""


def _canonical_key(edge: tuple[int, ...]) -> tuple:
    # size descending, then lexicographic
    return (-len(edge), edge)


@dataclass(frozen=True)
class Hypergraph:
    """m vertices and an ordered list of ascending edges.

    Duplicate edges are representable (the model permits multiset edges);
    a repeated edge of size >= 2 is not linear and is reported by
    ``is_linear`` rather than rejected here.
    """

    m: int
    edges: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.m < 0:
            raise ValueError(f"vertex count must be nonnegative, got {self.m}")
        object.__setattr__(self, "edges", tuple(tuple(e) for e in self.edges))
        for e in self.edges:
            if not e:
                raise ValueError("edges must be nonempty")
            if any(e[i] >= e[i + 1] for i in range(len(e) - 1)):
                raise ValueError(f"edge {e} is not strictly ascending")
            if e[0] < 0 or e[-1] >= self.m:
                raise ValueError(f"edge {e} has vertex ids outside 0..{self.m - 1}")

    @classmethod
    def from_edges(cls, m: int, edges: Iterable[Iterable[int]]) -> "Hypergraph":
        return cls(m, tuple(tuple(sorted(e)) for e in edges))

    def canonical(self) -> "Hypergraph":
        """Edges reordered by (size descending, lexicographic)."""
        return Hypergraph(self.m, tuple(sorted(self.edges, key=_canonical_key)))

    @property
    def n(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class Graph:
    """Simple graph on vertices 0..m-1; no loops."""

    m: int
    adjacency: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        pairs = frozenset(tuple(sorted(p)) for p in self.adjacency)
        object.__setattr__(self, "adjacency", pairs)
        for a, b in pairs:
            if a == b:
                raise ValueError(f"loop at vertex {a}")
            if a < 0 or b >= self.m:
                raise ValueError(f"pair ({a},{b}) outside 0..{self.m - 1}")

    @classmethod
    def from_pairs(cls, m: int, pairs: Iterable[Iterable[int]]) -> "Graph":
        return cls(m, frozenset(tuple(sorted(p)) for p in pairs))

    @classmethod
    def complete(cls, m: int) -> "Graph":
        return cls(m, frozenset(combinations(range(m), 2)))

    @property
    def edge_count(self) -> int:
        return len(self.adjacency)

    def degrees(self) -> list[int]:
        deg = [0] * self.m
        for a, b in self.adjacency:
            deg[a] += 1
            deg[b] += 1
        return deg

    def complement(self) -> "Graph":
        full = set(combinations(range(self.m), 2))
        return Graph(self.m, frozenset(full - self.adjacency))

    def is_even(self) -> bool:
        return all(d % 2 == 0 for d in self.degrees())

    def is_odd(self) -> bool:
        return all(d % 2 == 1 for d in self.degrees())


class LinearityViolation(NamedTuple):
    pair: tuple[int, int]
    first_edge: int
    second_edge: int


@dataclass(frozen=True)
class SizeProfile:
    """Map from edge size to the number of edges of that size."""

    counts: dict[int, int] = field(default_factory=dict)

    def total_edges(self) -> int:
        return sum(self.counts.values())

    def total_degree(self) -> int:
        return sum(i * c for i, c in self.counts.items())


@dataclass(frozen=True)
class ParityReport:
    underlying_even: bool
    underlying_edges_mod3: int
    defect_even: bool
    defect_odd: bool
    defect_edges_mod3: int


def total_degree(h: Hypergraph) -> int:
    """Sum of edge sizes (equivalently, sum of vertex degrees)."""
    return sum(len(e) for e in h.edges)


def is_linear(h: Hypergraph) -> Optional[LinearityViolation]:
    """None when every pair of vertices lies in at most one edge.

    Otherwise the lexicographically first violating pair, with the two
    lowest offending edge indices.
    """
    seen: dict[tuple[int, int], list[int]] = {}
    for idx, e in enumerate(h.edges):
        for p in combinations(e, 2):
            seen.setdefault(p, []).append(idx)
    bad = [p for p, idxs in seen.items() if len(idxs) > 1]
    if not bad:
        return None
    p = min(bad)
    i, j = seen[p][0], seen[p][1]
    return LinearityViolation(p, i, j)


def _covered_pairs(h: Hypergraph) -> set[tuple[int, int]]:
    pairs: set[tuple[int, int]] = set()
    for e in h.edges:
        pairs.update(combinations(e, 2))
    return pairs


def underlying_graph(h: Hypergraph) -> Graph:
    """Graph of pairs co-occurring in some edge; requires h linear."""
    if is_linear(h) is not None:
        raise NotLinearError("underlying graph requires a linear hypergraph")
    return Graph(h.m, frozenset(_covered_pairs(h)))


def defect_graph(h: Hypergraph) -> Graph:
    """Complement of the underlying graph within K_m; requires h linear."""
    if is_linear(h) is not None:
        raise NotLinearError("defect requires a linear hypergraph")
    full = set(combinations(range(h.m), 2))
    return Graph(h.m, frozenset(full - _covered_pairs(h)))


def size_profile(h: Hypergraph) -> SizeProfile:
    counts: dict[int, int] = {}
    for e in h.edges:
        counts[len(e)] = counts.get(len(e), 0) + 1
    return SizeProfile(counts)


def restrict_to_size(h: Hypergraph, k: int) -> Hypergraph:
    """The sub-hypergraph keeping exactly the size-k edges."""
    if k < 1:
        raise ValueError(f"edge size must be positive, got {k}")
    return Hypergraph(h.m, tuple(e for e in h.edges if len(e) == k))


def parity_report(h: Hypergraph) -> ParityReport:
    g = underlying_graph(h)
    d = defect_graph(h)
    return ParityReport(
        underlying_even=g.is_even(),
        underlying_edges_mod3=g.edge_count % 3,
        defect_even=d.is_even(),
        defect_odd=d.is_odd(),
        defect_edges_mod3=d.edge_count % 3,
    )


@dataclass(frozen=True)
class VerificationReport:
    passed: bool
    failures: tuple[str, ...]


def verify_witness(h: Hypergraph, m: int, n: int, z: int) -> VerificationReport:
    """Certify that h has m vertices, n edges, is linear, and degree z."""
    failures: list[str] = []
    if h.m != m:
        failures.append(f"vertex count: expected {m}, got {h.m}")
    if h.n != n:
        failures.append(f"edge count: expected {n}, got {h.n}")
    violation = is_linear(h)
    if violation is not None:
        failures.append(
            f"linearity: pair {violation.pair} in edges "
            f"{violation.first_edge} and {violation.second_edge}"
        )
    z_actual = total_degree(h)
    if z_actual != z:
        failures.append(f"total degree: expected {z}, got {z_actual}")
    return VerificationReport(not failures, tuple(failures))


@dataclass(frozen=True)
class Witness:
    """A hypergraph with its claimed parameters and construction tag."""

    hypergraph: Hypergraph
    m: int
    n: int
    z: int
    construction: str
    seed: Optional[int] = None

    def verify(self) -> VerificationReport:
        return verify_witness(self.hypergraph, self.m, self.n, self.z)


# --- witness file format -------------------------------------------------
#
# A single JSON document, ASCII, no whitespace, keys in the order
# m, n, z, construction, seed, edges; edges in canonical order
# (size descending, lexicographic).  Byte-exact across runs.


def witness_to_json(w: Witness) -> str:
    h = w.hypergraph.canonical()
    doc = {
        "m": w.m,
        "n": w.n,
        "z": w.z,
        "construction": w.construction,
        "seed": w.seed,
        "edges": [list(e) for e in h.edges],
    }
    return json.dumps(doc, separators=(",", ":"), ensure_ascii=True)


def witness_from_json(text: str) -> Witness:
    doc = json.loads(text)
    for key in ("m", "n", "z", "construction", "seed", "edges"):
        if key not in doc:
            raise ValueError(f"witness document missing key {key!r}")
    h = Hypergraph(doc["m"], tuple(tuple(e) for e in doc["edges"]))
    return Witness(h, doc["m"], doc["n"], doc["z"], doc["construction"], doc["seed"])


def example_linear_space_8() -> Hypergraph:
    """The 8-vertex, 11-edge linear {2,3,4}-space with total degree 30.

    Vertices relabelled 0-based from the classical 1..8 labelling.
    """
    edges_1based = [
        (1, 2, 3, 4),
        (2, 5, 6),
        (2, 7, 8),
        (3, 5, 7),
        (3, 6, 8),
        (4, 5, 8),
        (4, 6, 7),
        (1, 5),
        (1, 6),
        (1, 7),
        (1, 8),
    ]
    return Hypergraph.from_edges(8, [[v - 1 for v in e] for e in edges_1based]).canonical()


def pair_count(m: int) -> int:
    return comb(m, 2)
