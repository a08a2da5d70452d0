"""Linear spaces on s vertices whose edges are triples and quads.

A {3,4}-space on s vertices with q quads covers all C(s,2) pairs with
q quads and (C(s,2) - 6q)/3 triples.  Necessary conditions: s != 2, 6
and s != 2 (mod 3); each vertex meets an even number of quads when s is
odd and an odd number when s is even.

Four construction routes, tried in order:

  * full quad systems from difference families (s in 13, 25, 37, 49, 61);
  * quad rings: q quads in a cyclic overlap pattern on 2q vertices,
    every ring vertex in exactly two quads, triangle search on the rest;
  * parallel quad classes, spiders (a centre in three otherwise disjoint
    quads) and rings layered over them, again finished by triangle
    search -- this covers even s, where every quad degree must be odd;
  * a transversal design TD(4, g) with one group truncated to w = s - 3g
    vertices, the four groups filled recursively.  The TD comes from two
    orthogonal Latin squares, available for every g >= 3 with
    g != 2 (mod 4) via finite fields and the Kronecker product.

achievable(s) returns the exact set of quad counts these routes reach,
computed once per s with bitset sumsets; build(s, q, seed) materialises
a space for any achievable q.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterator, Optional

from zforge.hypercore import Graph, Hypergraph, is_linear
from zforge.triangles import (
    triangle_decompose, STATUS_OK, STATUS_BUDGET, BudgetExhaustedError,
    _exhaustive, _hill_climb,
)

MAX_VERTICES = 400
# below this vertex count the parity conditions do not guarantee that a
# sparse quad layout completes with triples, so each layout is certified
# by an actual search before achievable() reports it
CERT_LIMIT = 40


class Space34Error(ValueError):
    """No {3,4}-space with the requested quad count is constructible here."""


# --- two orthogonal Latin squares ----------------------------------------


def _gf_tables(q: int) -> tuple[list[list[int]], list[list[int]]]:
    """Addition and multiplication tables of GF(q) for a prime power q."""
    # factor q = p^k
    p = next(d for d in range(2, q + 1) if q % d == 0)
    k = 0
    qq = q
    while qq > 1:
        if qq % p:
            raise ValueError(f"{q} is not a prime power")
        qq //= p
        k += 1
    if k == 1:
        add = [[(a + b) % p for b in range(p)] for a in range(p)]
        mul = [[(a * b) % p for b in range(p)] for a in range(p)]
        return add, mul
    # elements are base-p digit vectors encoded as ints; find an
    # irreducible monic polynomial of degree k over GF(p)
    def poly(e: int) -> list[int]:
        digits = []
        for _ in range(k + 1):
            digits.append(e % p)
            e //= p
        return digits

    def pmul(a: list[int], b: list[int]) -> list[int]:
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
        return out

    def reducible(mono: list[int]) -> bool:
        for e in range(p, p ** (k // 2 + 1)):
            d = poly(e)[: k // 2 + 1]
            while d and d[-1] == 0:
                d.pop()
            if len(d) < 2:
                continue
            # trial division mono / d over GF(p)
            rem = list(mono)
            inv = pow(d[-1], p - 2, p)
            while len(rem) >= len(d):
                c = (rem[-1] * inv) % p
                for i in range(len(d)):
                    rem[len(rem) - len(d) + i] = (rem[len(rem) - len(d) + i] - c * d[i]) % p
                rem.pop()
            if all(x == 0 for x in rem):
                return True
        return False

    mono = None
    for e in range(p ** k):
        cand = poly(e)[:k] + [1]
        if not reducible(cand):
            mono = cand
            break
    assert mono is not None

    def reduce(v: list[int]) -> int:
        v = list(v)
        while len(v) > k:
            c = v[-1]
            if c:
                for i in range(k + 1):
                    v[len(v) - k - 1 + i] = (v[len(v) - k - 1 + i] - c * mono[i]) % p
            v.pop()
        e = 0
        for d in reversed(v[:k] + [0] * (k - len(v))):
            e = e * p + d
        return e

    add = [[0] * q for _ in range(q)]
    mul = [[0] * q for _ in range(q)]
    for a in range(q):
        pa = poly(a)[:k]
        for b in range(q):
            pb = poly(b)[:k]
            add[a][b] = reduce([(x + y) % p for x, y in zip(pa, pb)])
            mul[a][b] = reduce(pmul(pa, pb))
    return add, mul


def _prime_power_factors(g: int) -> Optional[list[int]]:
    out = []
    for p in range(2, g + 1):
        if p * p > g and g > 1:
            out.append(g)
            break
        if g % p == 0:
            q = 1
            while g % p == 0:
                g //= p
                q *= p
            out.append(q)
    return out


def mols2(g: int) -> Optional[tuple[list[list[int]], list[list[int]]]]:
    """Two orthogonal g x g Latin squares, or None when out of reach.

    Field construction on each prime power factor, combined with the
    Kronecker product; fails exactly when some factor is 2, i.e. when
    g = 2 (mod 4) (or g < 3).
    """
    if g < 3:
        return None
    factors = _prime_power_factors(g)
    if any(q == 2 for q in factors):
        return None
    squares: list[tuple[list[list[int]], list[list[int]], int]] = []
    for q in factors:
        add, mul = _gf_tables(q)
        l1 = [[add[x][y] for y in range(q)] for x in range(q)]
        # multiplier 2 when invertible, otherwise the element 1+1=...
        a = 2 % q if q > 2 else 1
        if a in (0, 1):
            a = 3 % q
        l2 = [[add[mul[a][x]][y] for y in range(q)] for x in range(q)]
        squares.append((l1, l2, q))
    # Kronecker product over mixed-radix indices
    l1, l2, size = squares[0]
    for m1, m2, q in squares[1:]:
        n = size * q
        nl1 = [[0] * n for _ in range(n)]
        nl2 = [[0] * n for _ in range(n)]
        for x1 in range(size):
            for x2 in range(q):
                for y1 in range(size):
                    for y2 in range(q):
                        x, y = x1 * q + x2, y1 * q + y2
                        nl1[x][y] = l1[x1][y1] * q + m1[x2][y2]
                        nl2[x][y] = l2[x1][y1] * q + m2[x2][y2]
        l1, l2, size = nl1, nl2, n
    return l1, l2


# --- full quad systems from difference families --------------------------

# base blocks whose group translates partition all pairs into quads
_DIFF_FAMILIES: dict[int, list[tuple[int, ...]]] = {
    13: [(0, 1, 3, 9)],
    37: [(0, 1, 3, 24), (0, 4, 9, 15), (0, 7, 17, 25)],
    49: [(0, 1, 3, 8), (0, 4, 18, 29), (0, 6, 21, 33), (0, 9, 19, 32)],
    61: [(0, 1, 3, 7), (0, 5, 13, 34), (0, 9, 26, 42), (0, 10, 24, 46),
         (0, 11, 23, 41)],
}
# v = 25 needs the group Z_5 x Z_5; encoded as (a, b) -> 5a + b
_DIFF_FAMILY_25 = [((0, 0), (0, 1), (1, 0), (2, 2)),
                   ((0, 0), (0, 2), (1, 3), (3, 2))]

FULL_QUAD_SIZES = frozenset(_DIFF_FAMILIES) | {25}


def full_quad_system(s: int) -> tuple[tuple[int, ...], ...]:
    """All C(s,2)/6 quads of a linear space with quads only."""
    if s == 25:
        blocks = set()
        for base in _DIFF_FAMILY_25:
            for s0 in range(5):
                for s1 in range(5):
                    blocks.add(tuple(sorted(
                        5 * ((a + s0) % 5) + (b + s1) % 5 for a, b in base)))
        return tuple(sorted(blocks))
    if s not in _DIFF_FAMILIES:
        raise Space34Error(f"no stored quad system on {s} vertices")
    blocks = set()
    for base in _DIFF_FAMILIES[s]:
        for t in range(s):
            blocks.add(tuple(sorted((x + t) % s for x in base)))
    return tuple(sorted(blocks))


# --- sparse quad layouts -------------------------------------------------


def quad_ring(t: int) -> list[tuple[int, ...]]:
    """t quads on vertices 0..2t-1, every vertex in exactly two quads."""
    if t < 5:
        raise ValueError("a quad ring needs at least 5 quads")
    n = 2 * t
    return [tuple(sorted(((2 * i) % n, (2 * i + 1) % n,
                          (2 * i + 3) % n, (2 * i + 4) % n)))
            for i in range(t)]


def _ring_fits(num_quads: int, t: int) -> bool:
    # ring positions j, j+d (d <= 4) must land in distinct host quads
    if t == 0:
        return True
    if t < 5 or num_quads < 5 or 2 * t > 4 * num_quads:
        return False
    return (2 * t) % num_quads not in (1, 2, 3, 4)


def _spider(center: int, leaves: list[int]) -> list[tuple[int, ...]]:
    assert len(leaves) == 9
    return [tuple(sorted([center] + leaves[3 * i:3 * i + 3])) for i in range(3)]


def _even_sparse_options(s: int) -> Iterator[tuple[int, int, int]]:
    """(j spiders, t ring quads, total quad count) for even s."""
    j = 0 if s % 4 == 0 else 1
    while 10 * j <= s:
        base = (s + 2 * j) // 4  # 3j spider quads + (s-10j)/4 disjoint quads
        disjoint = (s - 10 * j) // 4
        yield j, 0, base
        t = 5
        while 2 * t <= 4 * disjoint:
            if _ring_fits(disjoint, t):
                yield j, t, base + t
            t += 1
        j += 2


def _sparse_quads(s: int, j: int, t: int) -> list[tuple[int, ...]]:
    """Quad layout: j spiders, then disjoint quads, then a t-quad ring.

    With j = 0 and odd s the layout degenerates to a bare ring on the
    first 2t vertices (no disjoint quads fit an odd remainder).
    """
    if s % 2 == 1:
        assert j == 0
        return [tuple(q) for q in quad_ring(t)]
    quads: list[tuple[int, ...]] = []
    v = 0
    for _ in range(j):
        quads += _spider(v, list(range(v + 1, v + 10)))
        v += 10
    disjoint = [tuple(range(u, u + 4)) for u in range(v, s, 4)]
    quads += disjoint
    if t:
        nq = len(disjoint)
        order = [disjoint[i % nq][i // nq] for i in range(2 * t)]
        for a, b, c, d in quad_ring(t):
            quads.append(tuple(sorted((order[a], order[b], order[c], order[d]))))
    return quads


_sparse_cache: dict[tuple[int, int, int], Optional[Hypergraph]] = {}


def _certified_sparse(s: int, j: int, t: int) -> Optional[Hypergraph]:
    """Complete a sparse layout on few vertices, or record that none does."""
    key = (s, j, t)
    if key in _sparse_cache:
        return _sparse_cache[key]
    quads = _sparse_quads(s, j, t)
    covered = {p for q in quads for p in combinations(sorted(q), 2)}
    rest = Graph(s, frozenset(set(combinations(range(s), 2)) - covered))
    # hill climbing settles feasible layouts in a few thousand steps;
    # the exhaustive pass certifies the infeasible ones
    result = _hill_climb(rest, 0, 30_000)
    if result.status == STATUS_BUDGET:
        result = _exhaustive(rest, 300_000)
    if result.status == STATUS_BUDGET:
        result = _hill_climb(rest, 1, 100_000)
    h = None
    if result.status == STATUS_OK:
        h = Hypergraph(s, tuple(quads) + result.triangles.triangles)
    _sparse_cache[key] = h
    return h


# --- achievable quad counts ----------------------------------------------


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _sumset(a: int, b: int) -> int:
    out = 0
    for x in _bits(a):
        out |= b << x
    return out


@lru_cache(maxsize=None)
def _achievable_mask(s: int) -> int:
    if s < 0 or s in (2, 6) or s % 3 == 2:
        return 0
    if s <= 1 or s == 3:
        return 1
    if s == 4:
        return 2
    mask = 0
    if s % 6 in (1, 3):
        mask |= 1
    if s in FULL_QUAD_SIZES:
        mask |= 1 << (comb(s, 2) // 6)
    if s % 2 == 1:
        options = [(0, t, t) for t in range(5, s // 2 + 1)]
    else:
        options = list(_even_sparse_options(s))
    for j, t, q in options:
        if s <= CERT_LIMIT and _certified_sparse(s, j, t) is None:
            continue
        mask |= 1 << q
    for g in range((s + 3) // 4, s // 3 + 1):
        w = s - 3 * g
        if mols2(g) is None:
            continue
        ag = _achievable_mask(g)
        aw = _achievable_mask(w)
        if not ag or not aw:
            continue
        fills = _sumset(_sumset(_sumset(ag, ag), ag), aw)
        mask |= fills << (g * w)
    # never more quads than pairs allow
    cap = comb(s, 2) // 6
    return mask & ((1 << (cap + 1)) - 1)


def achievable(s: int) -> frozenset[int]:
    """Quad counts q for which build(s, q) succeeds."""
    if s > MAX_VERTICES:
        raise Space34Error(f"planner capped at {MAX_VERTICES} vertices")
    return frozenset(_bits(_achievable_mask(s)))


def feasible(s: int, q: int) -> bool:
    return s <= MAX_VERTICES and bool(_achievable_mask(s) >> q & 1)


# --- builders ------------------------------------------------------------


def _complete_with_triples(s: int, quads: list[tuple[int, ...]],
                           seed: int, budget: Optional[int]) -> Hypergraph:
    partial = Hypergraph.from_edges(s, quads)
    assert is_linear(partial) is None
    covered = {p for q in quads for p in combinations(sorted(q), 2)}
    rest = Graph(s, frozenset(set(combinations(range(s), 2)) - covered))
    result = triangle_decompose(rest, seed, budget)
    if result.status != STATUS_OK:
        raise BudgetExhaustedError(
            f"triangle completion failed on {s} vertices: {result.status}")
    return Hypergraph(s, tuple(quads) + result.triangles.triangles)


def _build_sparse(s: int, j: int, t: int, seed: int,
                  budget: Optional[int]) -> Optional[Hypergraph]:
    if s <= CERT_LIMIT:
        return _certified_sparse(s, j, t)
    return _complete_with_triples(s, _sparse_quads(s, j, t), seed, budget)


def _build_td(s: int, g: int, target: int, seed: int,
              budget: Optional[int]) -> Hypergraph:
    w = s - 3 * g
    squares = mols2(g)
    assert squares is not None
    l1, l2 = squares
    # greedy split of target - g*w across the four group fills
    rest = target - g * w
    ag = _achievable_mask(g)
    aw = _achievable_mask(w)
    masks = [ag, ag, ag, aw]
    suffix = [0] * 5
    suffix[4] = 1  # only the empty sum
    for i in range(3, -1, -1):
        suffix[i] = _sumset(masks[i], suffix[i + 1])
    fills: list[int] = []
    for i in range(4):
        for a in _bits(masks[i]):
            if a <= rest and (suffix[i + 1] >> (rest - a)) & 1:
                fills.append(a)
                rest -= a
                break
        else:
            raise Space34Error(f"no fill split for {target} quads on {s} vertices")
    assert rest == 0

    groups = [list(range(g)), list(range(g, 2 * g)),
              list(range(2 * g, 3 * g)), list(range(3 * g, 3 * g + w))]
    edges: list[tuple[int, ...]] = []
    for x in range(g):
        for y in range(g):
            block = [groups[0][x], groups[1][y], groups[2][l1[x][y]]]
            if l2[x][y] < w:
                block.append(groups[3][l2[x][y]])
            edges.append(tuple(sorted(block)))
    for grp, q in zip(groups, fills):
        sub = build(len(grp), q, seed, budget)
        for e in sub.edges:
            edges.append(tuple(sorted(grp[v] for v in e)))
    return Hypergraph(s, tuple(edges))


def build(s: int, q: int, seed: int = 0,
          budget: Optional[int] = None) -> Hypergraph:
    """A linear {3,4}-space on s vertices with exactly q quads."""
    if not feasible(s, q):
        raise Space34Error(
            f"no constructible {{3,4}}-space on {s} vertices with {q} quads")
    if s <= 1:
        return Hypergraph(s, ())
    if s == 3:
        return Hypergraph(3, ((0, 1, 2),))
    if s == 4:
        return Hypergraph(4, ((0, 1, 2, 3),))
    if q == 0:
        rest = triangle_decompose(Graph.complete(s), seed, budget)
        assert rest.status == STATUS_OK
        return Hypergraph(s, rest.triangles.triangles)
    if s in FULL_QUAD_SIZES and q == comb(s, 2) // 6:
        return Hypergraph(s, full_quad_system(s))
    if s % 2 == 1:
        options = [(0, t, t) for t in range(5, s // 2 + 1)]
    else:
        options = list(_even_sparse_options(s))
    for j, t, total in options:
        if total != q:
            continue
        if s <= CERT_LIMIT and _certified_sparse(s, j, t) is None:
            continue
        h = _build_sparse(s, j, t, seed, budget)
        if h is not None:
            return h
    for g in range((s + 3) // 4, s // 3 + 1):
        w = s - 3 * g
        if mols2(g) is None:
            continue
        ag = _achievable_mask(g)
        aw = _achievable_mask(w)
        if not ag or not aw:
            continue
        fills = _sumset(_sumset(_sumset(ag, ag), ag), aw)
        rest = q - g * w
        if 0 <= rest and (fills >> rest) & 1:
            return _build_td(s, g, q, seed, budget)
    raise Space34Error(f"planner inconsistency at s={s}, q={q}")
