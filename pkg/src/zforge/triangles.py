"""Search-based triangle decomposition of even graphs.

Decomposes a graph G into edge-disjoint triangles whenever every degree
is even and |E(G)| = 0 (mod 3).  Those conditions are necessary; they
are sufficient for the dense graphs arising here, where a hill-climbing
search (never decreasing the number of placed triangles, with sideways
block-exchange moves) converges quickly.  Below a vertex-count threshold
the engine runs an exhaustive DFS instead, so infeasibility verdicts on
small graphs are certified.

Complete graphs K_m with m = 1, 3 (mod 6) bypass the search: the Bose
and Skolem quasigroup constructions emit a Steiner triple system
directly.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple, Optional

from zforge.hypercore import Graph, Hypergraph, defect_graph, is_linear, NotLinearError

DEFAULT_BUDGET = 10_000_000
EXHAUSTIVE_THRESHOLD = 12

STATUS_OK = "ok"
STATUS_INFEASIBLE = "infeasible"
STATUS_BUDGET = "budget_exhausted"


def default_budget() -> int:
    return int(os.environ.get("ZFORGE_BUDGET", DEFAULT_BUDGET))


class Obstruction(NamedTuple):
    kind: str  # "odd-degree" | "edges-mod-3" | "pair-in-no-triangle"
    detail: int | tuple[int, int]


@dataclass(frozen=True)
class TriangleSet:
    triangles: tuple[tuple[int, int, int], ...]


@dataclass(frozen=True)
class DecomposeResult:
    status: str
    triangles: Optional[TriangleSet]
    steps: int
    obstruction: Optional[Obstruction] = None

    @property
    def ok(self) -> bool:
        return self.status == STATUS_OK


class InfeasibleError(ValueError):
    """The graph provably has no triangle decomposition."""


class BudgetExhaustedError(RuntimeError):
    """Search budget ran out; retry with a new seed or a bigger budget."""


def necessary_conditions(g: Graph) -> Optional[Obstruction]:
    """None when every degree is even and the edge count is 0 mod 3."""
    for v, d in enumerate(g.degrees()):
        if d % 2 == 1:
            return Obstruction("odd-degree", v)
    if g.edge_count % 3 != 0:
        return Obstruction("edges-mod-3", g.edge_count % 3)
    return None


def verify_triangle_set(g: Graph, ts: TriangleSet) -> bool:
    """Independent re-check: edge-disjoint, within E(G), covering all of it."""
    used: set[tuple[int, int]] = set()
    for t in ts.triangles:
        for p in combinations(t, 2):
            if p not in g.adjacency or p in used:
                return False
            used.add(p)
    return len(used) == g.edge_count


# --- direct Steiner triple system recipes --------------------------------


def bose_sts(m: int) -> TriangleSet:
    """STS(m) for m = 3 (mod 6) from an idempotent commutative quasigroup."""
    if m % 6 != 3:
        raise ValueError(f"Bose construction needs m = 3 (mod 6), got {m}")
    t = (m - 3) // 6
    q = 2 * t + 1

    def vid(i: int, k: int) -> int:
        return 3 * i + k

    triples = [(vid(i, 0), vid(i, 1), vid(i, 2)) for i in range(q)]
    half = t + 1  # multiplicative inverse of 2 mod q
    for i, j in combinations(range(q), 2):
        s = ((i + j) * half) % q
        for k in range(3):
            triples.append(tuple(sorted((vid(i, k), vid(j, k), vid(s, (k + 1) % 3)))))
    return TriangleSet(tuple(sorted(triples)))


def skolem_sts(m: int) -> TriangleSet:
    """STS(m) for m = 1 (mod 6) from a half-idempotent quasigroup."""
    if m % 6 != 1:
        raise ValueError(f"Skolem construction needs m = 1 (mod 6), got {m}")
    t = (m - 1) // 6
    if t == 0:
        return TriangleSet(())
    q = 2 * t
    inf = m - 1

    def vid(i: int, k: int) -> int:
        return 3 * i + k

    def star(i: int, j: int) -> int:
        s = (i + j) % q
        return s // 2 if s % 2 == 0 else t + (s - 1) // 2

    triples = [(vid(i, 0), vid(i, 1), vid(i, 2)) for i in range(t)]
    for i in range(t):
        for k in range(3):
            triples.append(tuple(sorted((inf, vid(t + i, k), vid(i, (k + 1) % 3)))))
    for i, j in combinations(range(q), 2):
        s = star(i, j)
        for k in range(3):
            triples.append(tuple(sorted((vid(i, k), vid(j, k), vid(s, (k + 1) % 3)))))
    return TriangleSet(tuple(sorted(triples)))


# --- exhaustive search (certified on small graphs) -----------------------


def _exhaustive(g: Graph, budget: int) -> DecomposeResult:
    adj = [set() for _ in range(g.m)]
    for a, b in g.adjacency:
        adj[a].add(b)
        adj[b].add(a)
    edges = sorted(g.adjacency)
    live = set(edges)
    chosen: list[tuple[int, int, int]] = []
    steps = 0

    def rec() -> Optional[bool]:
        # True found, False exhausted, None budget out
        nonlocal steps
        steps += 1
        if steps > budget:
            return None
        if not live:
            return True
        u, v = min(live)
        for w in sorted(adj[u] & adj[v]):
            p1, p2 = tuple(sorted((u, w))), tuple(sorted((v, w)))
            if p1 in live and p2 in live:
                for p in ((u, v), p1, p2):
                    live.remove(p)
                chosen.append(tuple(sorted((u, v, w))))
                sub = rec()
                if sub:
                    return True
                chosen.pop()
                for p in ((u, v), p1, p2):
                    live.add(p)
                if sub is None:
                    return None
        return False

    out = rec()
    if out is True:
        return DecomposeResult(STATUS_OK, TriangleSet(tuple(sorted(chosen))), steps)
    if out is False:
        return DecomposeResult(STATUS_INFEASIBLE, None, steps)
    return DecomposeResult(STATUS_BUDGET, None, steps)


# --- hill-climbing search ------------------------------------------------


def _hill_climb(g: Graph, seed: int, budget: int) -> DecomposeResult:
    rng = random.Random(seed)
    adj = [set() for _ in range(g.m)]
    for a, b in g.adjacency:
        adj[a].add(b)
        adj[b].add(a)

    live_adj = [set(s) for s in adj]
    # uncovered pairs as a list with positions, for O(1) random choice
    live_list = sorted(g.adjacency)
    live_pos = {p: i for i, p in enumerate(live_list)}
    cover: dict[tuple[int, int], tuple[int, int, int]] = {}

    def drop_live(p: tuple[int, int]) -> None:
        i = live_pos.pop(p)
        last = live_list.pop()
        if last != p:
            live_list[i] = last
            live_pos[last] = i
        a, b = p
        live_adj[a].discard(b)
        live_adj[b].discard(a)

    def add_live(p: tuple[int, int]) -> None:
        live_pos[p] = len(live_list)
        live_list.append(p)
        a, b = p
        live_adj[a].add(b)
        live_adj[b].add(a)

    def place(tri: tuple[int, int, int]) -> None:
        for p in combinations(tri, 2):
            drop_live(p)
            cover[p] = tri

    def remove(tri: tuple[int, int, int]) -> None:
        for p in combinations(tri, 2):
            del cover[p]
            add_live(p)

    steps = 0
    while live_list:
        steps += 1
        if steps > budget:
            return DecomposeResult(STATUS_BUDGET, None, steps)
        x, y = live_list[rng.randrange(len(live_list))]
        if rng.random() < 0.5:
            x, y = y, x
        others = live_adj[x] - {y}
        if not others:
            continue
        z = rng.choice(sorted(others))
        if z not in adj[y]:
            continue
        tri = tuple(sorted((x, y, z)))
        yz = tuple(sorted((y, z)))
        blocking = cover.get(yz)
        if blocking is not None:
            remove(blocking)
        place(tri)

    triangles = TriangleSet(tuple(sorted(set(cover.values()))))
    return DecomposeResult(STATUS_OK, triangles, steps)


def triangle_decompose(g: Graph, seed: int = 0,
                       budget: Optional[int] = None) -> DecomposeResult:
    """Full decomposition of G into edge-disjoint triangles.

    Infeasible verdicts are returned only when proven: a violated
    necessary condition, a pair lying in no triangle of G, or an
    exhausted search on a small graph.  budget_exhausted means retry
    with a different seed or a larger budget, never nonexistence.
    """
    if budget is None:
        budget = default_budget()
    obstruction = necessary_conditions(g)
    if obstruction is not None:
        return DecomposeResult(STATUS_INFEASIBLE, None, 0, obstruction)
    if g.edge_count == 0:
        return DecomposeResult(STATUS_OK, TriangleSet(()), 0)

    adj = [set() for _ in range(g.m)]
    for a, b in g.adjacency:
        adj[a].add(b)
        adj[b].add(a)
    for a, b in sorted(g.adjacency):
        if not adj[a] & adj[b]:
            return DecomposeResult(
                STATUS_INFEASIBLE, None, 0, Obstruction("pair-in-no-triangle", (a, b))
            )

    active = [v for v in range(g.m) if adj[v]]
    if g.edge_count == len(active) * (len(active) - 1) // 2:
        # complete graph on the active vertices
        k = len(active)
        relabel = {v: i for i, v in enumerate(active)}
        if k % 6 in (1, 3):
            ts = bose_sts(k) if k % 6 == 3 else skolem_sts(k)
            back = {i: v for v, i in relabel.items()}
            tris = tuple(
                sorted(tuple(sorted((back[a], back[b], back[c]))) for a, b, c in ts.triangles)
            )
            return DecomposeResult(STATUS_OK, TriangleSet(tris), 0)

    if len(active) <= EXHAUSTIVE_THRESHOLD:
        return _exhaustive(g, budget)
    result = _hill_climb(g, seed, budget)
    if result.ok:
        assert verify_triangle_set(g, result.triangles)
    return result


def complete_defect(h: Hypergraph, seed: int = 0,
                    budget: Optional[int] = None) -> Hypergraph:
    """Extend h with triples decomposing its defect, yielding a linear space."""
    if is_linear(h) is not None:
        raise NotLinearError("complete_defect requires a linear hypergraph")
    d = defect_graph(h)
    result = triangle_decompose(d, seed, budget)
    if result.status == STATUS_INFEASIBLE:
        raise InfeasibleError(f"defect not decomposable: {result.obstruction}")
    if result.status == STATUS_BUDGET:
        raise BudgetExhaustedError("triangle search budget exhausted on defect")
    return Hypergraph(h.m, h.edges + result.triangles.triangles)
