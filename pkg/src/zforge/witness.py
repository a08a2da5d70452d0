"""Witness constructions attaining the piecewise Z_{2,2}(m,n) values.

Each builder emits a Witness whose hypergraph is verified and whose
total degree matches the applicable formula.  The dispatcher construct()
maps (m, n) to the right builder:

  * at or above the triple-system threshold n >= ceil(C(m,2)/3):
    a maximum {2,3}-space with surplus pairs deleted reaches floor(U+);
    even m near the threshold needs quads to reach floor(U0); and
    m = 5 (mod 6) at the threshold itself tops out one lower;
  * below the threshold: quads make up the shortfall x = C(m,2)/3 - n.
    Even m close to the boundary reuses the floor(U0) construction, the
    fractional boundary point has its own {2,4}-gadget, and deeper n is
    served per residue class: {3,4}-spaces for m = 0, 1, 3, 4 (mod 6),
    near-threshold gadget families for m = 5 (mod 6) (r <= 27) and
    m = 2 (mod 6) (spider gadgets, m >= 10b + 2).

Construction tags ("L3.3" .. "L4.9") identify which builder produced a
witness; they are opaque strings as far as verification is concerned.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import ceil, comb, floor
from typing import Optional

from zforge import bounds, spaces34
from zforge.bounds import BoundsRangeError, z_above, z_value
from zforge.gdd import construct_4u2v, construct_one_irregular, to_linear_space
from zforge.hypercore import (
    Hypergraph, Witness, defect_graph, example_linear_space_8,
    is_linear, size_profile,
)
from zforge.packing import max_packing
from zforge.triangles import (
    BudgetExhaustedError, STATUS_OK, skolem_sts, bose_sts, triangle_decompose,
)

RETRIES = 3


class ConstructionUnavailable(ValueError):
    """(m, n) is in a covered regime but no implemented builder reaches it."""


def _finish(h: Hypergraph, tag: str, seed: Optional[int],
            expect_z: int) -> Witness:
    w = Witness(h.canonical(), h.m, h.n, expect_z, tag, seed)
    report = w.verify()
    if not report.passed:
        raise AssertionError(f"builder {tag} produced a bad witness: "
                             f"{report.failures}")
    return w


def _complete(h: Hypergraph, seed: int, budget: Optional[int],
              min_defect_degree: int) -> Hypergraph:
    """Triangle-complete a partial hypergraph after sanity checks."""
    assert is_linear(h) is None
    d = defect_graph(h)
    assert d.is_even()
    assert d.edge_count % 3 == 0
    degs = d.degrees()
    assert all(x == 0 or x >= min_defect_degree for x in degs)
    result = triangle_decompose(d, seed, budget)
    if result.status != STATUS_OK:
        raise BudgetExhaustedError(
            f"defect completion failed ({result.status}) on m={h.m}")
    return Hypergraph(h.m, h.edges + result.triangles.triangles)


def _delete_pairs(h: Hypergraph, count: int) -> Hypergraph:
    """Drop the lexicographically last `count` size-2 edges."""
    pairs = sorted(e for e in h.edges if len(e) == 2)
    if count > len(pairs):
        raise ValueError(f"cannot delete {count} of {len(pairs)} pairs")
    doomed = set(pairs[len(pairs) - count:])
    kept = []
    for e in h.edges:
        if len(e) == 2 and tuple(e) in doomed:
            doomed.discard(tuple(e))
            continue
        kept.append(e)
    return Hypergraph(h.m, tuple(kept))


# --- at or above the triple-system threshold -----------------------------


def pack_23(m: int, n: int, seed: int = 0,
            budget: Optional[int] = None) -> Witness:
    """A {2,3}-hypergraph reaching floor(U+): max-packing triples + pairs."""
    c = comb(m, 2)
    if n > c:
        raise ValueError(f"n={n} exceeds C({m},2)={c}")
    lo = ceil(Fraction(c, 3))
    if m % 2 == 0:
        lo = ceil(Fraction(c, 3) + Fraction(m, 3))
    elif m % 6 == 5:
        lo = ceil(Fraction(c, 3)) + 1
    if n < lo:
        raise ValueError(f"n={n} below the {m}-vertex floor(U+) range ({lo})")
    n3 = floor(Fraction(c, 2) - Fraction(n, 2))
    n2 = n - n3
    packing = max_packing(m, seed, budget)
    assert n3 <= packing.n
    triples = packing.edges[:n3]
    covered = {p for t in triples for p in combinations(t, 2)}
    free = sorted(set(combinations(range(m), 2)) - covered)
    assert n2 <= len(free)
    edges = tuple(triples) + tuple(free[:n2])
    z = 3 * n3 + 2 * n2
    assert z == floor(Fraction(m * (m - 1), 4) + Fraction(3 * n, 2))
    return _finish(Hypergraph(m, edges), "L3.3", seed, z)


def exception_above_5mod6(m: int, seed: int = 0,
                          budget: Optional[int] = None) -> Witness:
    """The threshold point for m = 5 (mod 6): z = floor(U+) - 1 = C(m,2)."""
    if m % 6 != 5:
        raise ValueError(f"m={m} is not 5 (mod 6)")
    c = comb(m, 2)
    packing = max_packing(m, seed, budget)
    covered = {p for t in packing.edges for p in combinations(t, 2)}
    leave = sorted(set(combinations(range(m), 2)) - covered)
    assert len(leave) == 4
    edges = tuple(packing.edges) + tuple(leave[:2])
    n = packing.n + 2
    assert n == ceil(Fraction(c, 3))
    return _finish(Hypergraph(m, edges), "L3.4", seed, c)


def space_234_even(m: int, n4: int, seed: int = 0,
                   budget: Optional[int] = None) -> Hypergraph:
    """A linear {2,3,4}-space on even m with exactly n4 quads."""
    if m < 2 or m % 2:
        raise ValueError(f"m={m} must be even and at least 2")
    if not 0 <= n4 <= m // 4:
        raise ValueError(f"n4={n4} outside 0..{m // 4}")
    if m % 12 in (6, 8, 10) and n4 == m // 4:
        raise ValueError(f"n4={n4} unreachable for m={m} (mod 12 residue)")
    if m % 12 == 8 and n4 == m // 4 - 1:
        # an 8-vertex group carries the one space that mixes all three sizes
        if m == 8:
            return example_linear_space_8()
        host = construct_one_irregular(8, 4, m // 4 - 2, seed)
        block = example_linear_space_8()
        edges = list(host.triples)
        for g in host.groups:
            if len(g) == 4:
                edges.append(tuple(g))
            else:
                assert len(g) == 8
                edges += [tuple(sorted(g[v] for v in e)) for e in block.edges]
        return Hypergraph(m, tuple(edges))
    a = n4
    want = 1 if m % 6 == 4 else 0
    while a % 3 != want:
        a += 1
    v = m // 2 - 2 * a
    design = construct_4u2v(a, v, seed)
    h = to_linear_space(design)
    extra = a - n4
    if extra:
        edges = list(h.edges)
        quads = [e for e in edges if len(e) == 4][:extra]
        for q in quads:
            edges.remove(q)
            edges.append(q[:3])
            edges += [(min(x, q[3]), max(x, q[3])) for x in q[:3]]
        h = Hypergraph(m, tuple(edges))
    prof = size_profile(h).counts
    assert prof.get(4, 0) == n4
    assert prof.get(3, 0) == floor(Fraction(m * (m - 2), 6) - Fraction(4 * n4, 3))
    return h


def even_u0(m: int, n: int, seed: int = 0,
            budget: Optional[int] = None) -> Witness:
    """floor(U0) witnesses for even m in the quad-assisted window."""
    c = comb(m, 2)
    lo = floor(Fraction(c, 3) - Fraction(m, 4)) + 1
    hi = floor(Fraction(c, 3) + Fraction(m, 3))
    if m % 2 or not lo <= n <= hi:
        raise ValueError(f"(m,n)=({m},{n}) outside the floor(U0) window "
                         f"[{lo},{hi}] for even m")
    if m % 12 in (6, 8, 10) and n == ceil(Fraction(c, 3) - Fraction(m, 4)):
        raise ValueError(f"n={n} is the fractional boundary point; "
                         "use u0_boundary")
    n4 = floor(Fraction(m * (m + 1), 14) - Fraction(3 * n, 7))
    if (m * (m - 2) // 2 - 4 * n4) % 3 == 2 and \
            (m * (m + 1) // 2 - 3 * n) % 7 in (4, 5, 6):
        n4 += 1
    n3 = floor(Fraction(m * (m - 2), 6) - Fraction(4 * n4, 3))
    n2 = n - n3 - n4
    space = space_234_even(m, n4, seed, budget)
    prof = size_profile(space).counts
    surplus = prof.get(2, 0) - n2
    assert surplus >= 0 and prof.get(3, 0) == n3
    h = _delete_pairs(space, surplus)
    z = 2 * n2 + 3 * n3 + 4 * n4
    assert z == floor(Fraction(m * (3 * m - 4), 14) + Fraction(12 * n, 7))
    return _finish(h, "L3.6", seed, z)


# --- below the threshold -------------------------------------------------


def u0_boundary(m: int, seed: int = 0,
                budget: Optional[int] = None) -> Witness:
    """The fractional boundary point n = ceil(C/3 - m/4), m = 6,8,10 mod 12."""
    c = comb(m, 2)
    n = ceil(Fraction(c, 3) - Fraction(m, 4))
    quads: list[tuple[int, ...]] = []
    pairs: list[tuple[int, int]] = []
    if m % 12 in (6, 10):
        if m < 18:
            raise ValueError(f"m={m} too small for the 14-vertex gadget")
        # v0=0 v1=1 w1..w4=2..5 y1..y8=6..13
        pairs = [(0, 2), (1, 3), (4, 5)]
        quads = [(0, 1, 6, 7), (0, 8, 9, 10), (1, 11, 12, 13)]
        first_free = 14
        delete = 2
    elif m % 12 == 8:
        # v0=0 w1=1 y1..y6=2..7
        pairs = [(0, 1)]
        quads = [(0, 2, 3, 4), (0, 5, 6, 7)]
        first_free = 8
        delete = 0
    else:
        raise ValueError(f"m={m} is not 6, 8 or 10 (mod 12)")
    quads += [tuple(range(v, v + 4)) for v in range(first_free, m, 4)]
    h = _complete(Hypergraph.from_edges(m, quads + pairs), seed, budget, m - 8)
    h = _delete_pairs(h, delete)
    assert h.n == n
    z = floor(Fraction(m * (3 * m - 4), 14) + Fraction(12 * n, 7))
    return _finish(h, "L4.2", seed, z)


def space_34(m: int, n4: int, seed: int = 0,
             budget: Optional[int] = None) -> Witness:
    """A {3,4}-space witness: n = C/3 - n4 and z = 3n + n4 = floor(U-)."""
    c = comb(m, 2)
    if m % 3 == 2:
        raise ValueError(f"m={m} = 2 (mod 3) admits no {{3,4}}-space")
    if n4 > (c - m) // 6:
        raise ValueError(f"n4={n4} exceeds floor(C/6 - m/6)")
    least = 5 if m % 2 else (m + 3) // 4
    if n4 < least:
        raise ValueError(f"n4={n4} below the minimum {least} for m={m}")
    if not spaces34.feasible(m, n4):
        raise ConstructionUnavailable(
            f"no constructible {{3,4}}-space layout at (m,n4)=({m},{n4})")
    h = spaces34.build(m, n4, seed, budget)
    n = c // 3 - n4
    return _finish(h, "L4.4", seed, 3 * n + n4)


def odd_near_r(m: int, r: int, seed: int = 0,
               budget: Optional[int] = None) -> Witness:
    """m = 1,3 (mod 6) at n = C/3 - r, r in 1..4: z = C(m,2) - 2r - 1."""
    if m % 6 not in (1, 3):
        raise ValueError(f"m={m} is not 1 or 3 (mod 6)")
    if r not in (1, 2, 3, 4):
        raise ValueError(f"r={r} outside 1..4")
    c = comb(m, 2)
    if r == 1:
        sts = bose_sts(m) if m % 6 == 3 else skolem_sts(m)
        h = Hypergraph(m, sts.triangles[1:])
    else:
        if r in (2, 3):
            quads = [(0, 1, 2, 3), (0, 4, 5, 6)]
            pairs = [(1, 4), (2, 5), (3, 6)]
            delete = r  # keep one pair at r = 2, none at r = 3
        else:
            quads = [(0, 1, 2, 3), (0, 4, 5, 6), (1, 4, 7, 8)]
            pairs = [(2, 5), (3, 7), (6, 8)]
            delete = 3
        h = _complete(Hypergraph.from_edges(m, quads + pairs),
                      seed, budget, m - 7)
        h = _delete_pairs(h, delete)
    assert h.n == c // 3 - r
    return _finish(h, "L4.5", seed, c - 2 * r - 1)


def make4(k: int, m: int) -> Hypergraph:
    """The cyclic {2,4}-gadget: k quads and one pair on 2k+1 vertices."""
    if k < 5:
        raise ValueError(f"k={k} must be at least 5")
    if m < 2 * k + 1:
        raise ValueError(f"m={m} too small for 2k+1={2 * k + 1} vertices")
    n = 2 * k
    s = n  # the extra vertex
    quads = [tuple(sorted(((2 * i) % n, (2 * i + 1) % n,
                           (2 * i + 3) % n, (2 * i + 4) % n)))
             for i in range(k - 1)]
    quads.append(tuple(sorted((n - 2, n - 1, 1, s))))
    return Hypergraph.from_edges(m, quads + [(2, s)])


def five_mod6_near(m: int, r: int, seed: int = 0,
                   budget: Optional[int] = None) -> Witness:
    """m = 5 (mod 6) at n = floor(C/3) - r, r in 0..27."""
    if m % 6 != 5:
        raise ValueError(f"m={m} is not 5 (mod 6)")
    if not 0 <= r <= 27:
        raise ValueError(f"r={r} outside 0..27")
    c = comb(m, 2)
    n = c // 3 - r
    z = c - 2 * r - 1 - (1 if r in (0, 1, 3) else 0)
    if r in (0, 1):
        packing = max_packing(m, seed, budget)
        covered = {p for t in packing.edges for p in combinations(t, 2)}
        leave = sorted(set(combinations(range(m), 2)) - covered)
        edges = tuple(packing.edges) + tuple(leave[:1 - r])
        h = Hypergraph(m, edges)
    elif r == 2:
        design = construct_one_irregular(5, 1, m - 5, seed)
        h = to_linear_space(design, drop_singletons=True)
    elif r == 3:
        base = five_mod6_near(m, 4, seed, budget)
        edges = list(base.hypergraph.edges)
        tri = next(e for e in edges if len(e) == 3)
        edges.remove(tri)
        edges += [(tri[0], tri[1]), (tri[0], tri[2])]
        h = Hypergraph(m, tuple(edges))
    else:
        if m < 2 * (r + 1) + 1:
            raise ValueError(f"m={m} too small for the r={r} gadget")
        h = _complete(make4(r + 1, m), seed, budget, m - 10)
    assert h.n == n
    return _finish(h, "L4.8", seed, z)


def two_mod6_near(m: int, r: int, seed: int = 0,
                  budget: Optional[int] = None) -> Witness:
    """m = 2 (mod 6) at n = floor(C/3 - m/4) - r, r in 0..27."""
    if m % 6 != 2:
        raise ValueError(f"m={m} is not 2 (mod 6)")
    if not 0 <= r <= 27:
        raise ValueError(f"r={r} outside 0..27")
    b = 2 * r + 4 if m % 12 == 2 else 2 * r + 3
    if m < 10 * b + 2:
        raise ValueError(f"m={m} below 10b+2={10 * b + 2} for r={r}")
    c = comb(m, 2)
    n = floor(Fraction(c, 3) - Fraction(m, 4)) - r
    quads: list[tuple[int, ...]] = []
    v = 0
    for _ in range(b):
        quads += [tuple(sorted([v] + list(range(v + 1 + 3 * i, v + 4 + 3 * i))))
                  for i in range(3)]
        v += 10
    pair = (v, v + 1)
    quads += [tuple(range(u, u + 4)) for u in range(v + 2, m, 4)]
    assert len(quads) == (2 * b + m - 2) // 4
    h = _complete(Hypergraph.from_edges(m, quads + [pair]), seed, budget,
                  m - 10)
    assert h.n == n
    z = floor(Fraction(m * (m - 1), 6)) + 2 * n
    return _finish(h, "L4.9", seed, z)


# --- dispatcher ----------------------------------------------------------


def _construct_once(m: int, n: int, seed: int,
                    budget: Optional[int]) -> Witness:
    c = comb(m, 2)
    a_lo, a_hi = bounds.above_range(m)
    if a_lo <= n <= a_hi:
        regime = z_above(m, n).regime
        if regime == bounds.REGIME_ABOVE_1:
            return even_u0(m, n, seed, budget)
        if regime == bounds.REGIME_ABOVE_2:
            return exception_above_5mod6(m, seed, budget)
        return pack_23(m, n, seed, budget)
    b_lo, b_hi = bounds.below_range(m)
    if not b_lo <= n <= b_hi:
        raise BoundsRangeError(
            f"(m,n)=({m},{n}) outside [{b_lo},{b_hi}] and [{a_lo},{a_hi}]")
    if m % 2 == 0:
        boundary = floor(Fraction(c, 3) - Fraction(m, 4))
        if n > boundary:
            if m % 12 in (6, 8, 10) and \
                    n == ceil(Fraction(c, 3) - Fraction(m, 4)):
                return u0_boundary(m, seed, budget)
            return even_u0(m, n, seed, budget)
        if m % 6 == 2:
            r = boundary - n
            b = 2 * r + 4 if m % 12 == 2 else 2 * r + 3
            if r > 27 or m < 10 * b + 2:
                raise ConstructionUnavailable(
                    f"row r={r} needs {10 * b + 2} vertices at m={m}; "
                    f"deeper rows for m = 2 (mod 6) have no finite builder")
            return two_mod6_near(m, r, seed, budget)
        return space_34(m, c // 3 - n, seed, budget)
    if m % 6 == 5:
        r = c // 3 - n
        if r > 27:
            raise ConstructionUnavailable(
                f"r={r} beyond the gadget range 0..27 at m={m}")
        return five_mod6_near(m, r, seed, budget)
    r = c // 3 - n
    if 1 <= r <= 4:
        return odd_near_r(m, r, seed, budget)
    return space_34(m, r, seed, budget)


def construct(m: int, n: int, seed: int = 0,
              budget: Optional[int] = None) -> Witness:
    """Build and verify a witness attaining z_value(m, n).

    Retries with incremented seeds when the triangle engine runs out of
    budget; all other failures propagate immediately.
    """
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    last: Optional[BudgetExhaustedError] = None
    for attempt in range(RETRIES):
        try:
            w = _construct_once(m, n, seed + attempt, budget)
            break
        except BudgetExhaustedError as exc:
            last = exc
    else:
        raise last
    report = z_value(m, n, assume_large=True)
    assert report.z == w.z, (m, n, report.z, w.z)
    return w
