"""Acceptance gate: one test per criterion, one pass/fail line each.

Run with `pytest -v tests/test_acceptance.py`; each criterion appears
as a single PASSED/FAILED line.  Known-infeasible rows (documented in
the README) are asserted to fail loudly rather than silently skipped.
"""

import random
from fractions import Fraction
from math import comb, floor

import pytest

from zforge.bounds import (
    above_range,
    below_range,
    exception_set,
    profile_identities,
    upper_bounds,
    z_above,
    z_below,
)
from zforge.gdd import admissible_4u2v, construct_4u2v, construct_uniform, verify_gdd
from zforge.hypercore import (
    defect_graph,
    example_linear_space_8,
    restrict_to_size,
    size_profile,
    total_degree,
    underlying_graph,
    verify_witness,
)
from zforge.oracle import exact_z, gdd_exists_bruteforce, max_triples
from zforge.triangles import STATUS_OK, triangle_decompose, verify_triangle_set
from zforge.gdd import GddType
from zforge.hypercore import Graph
from zforge.witness import ConstructionUnavailable, construct
from zforge.spaces34 import Space34Error, feasible

from helpers import random_linear


def test_criterion_1_golden_example():
    h = example_linear_space_8()
    assert verify_witness(h, 8, 11, 30).passed
    assert z_above(8, 11).z == 30


def test_criterion_2_oracle_formula_agreement_above_threshold():
    checked = 0
    for m in (4, 5, 6, 7):
        lo, hi = above_range(m)
        for n in range(lo, hi + 1):
            assert exact_z(m, n).optimum == z_above(m, n).z, (m, n)
            checked += 1
    assert exact_z(5, 4).optimum == 10
    assert checked == 38


def test_criterion_3_witness_achievement_above_threshold():
    built = 0
    for m in range(12, 61):
        lo, hi = above_range(m)
        for n in range(lo, hi + 1):
            w = construct(m, n)
            assert w.verify().passed, (m, n, w.verify().failures)
            assert w.z == z_above(m, n).z, (m, n)
            built += 1
    assert built == sum(
        comb(m, 2) - above_range(m)[0] + 1 for m in range(12, 61))


def _two_mod6_max_r(m: int) -> int:
    # the deep construction needs m >= 10b + 2 spider vertices, where
    # b = 2r + 4 (m = 2 mod 12) or b = 2r + 3 (m = 8 mod 12)
    b_max = (m - 2) // 10
    return (b_max - 4) // 2 if m % 12 == 2 else (b_max - 3) // 2


def _expect_constructible(m: int, n: int) -> bool:
    """Mirror of the documented builder coverage below the threshold."""
    c = comb(m, 2)
    base = c // 3
    boundary = floor(Fraction(c, 3) - Fraction(m, 4))
    if m % 2 == 0 and n > boundary:
        return True
    if m % 6 == 2:
        return boundary - n <= _two_mod6_max_r(m)
    if m % 6 == 5:
        return base - n <= 27
    if m % 2 == 1 and base - n in (1, 2, 3, 4):
        return True
    # remaining rows route through the {3,4}-space planner
    return feasible(m, base - n)


def test_criterion_4_witness_achievement_below_threshold():
    failures = []
    documented_gaps = 0
    built = 0

    def attempt(m: int, n: int) -> None:
        nonlocal built, documented_gaps
        expect_ok = _expect_constructible(m, n)
        try:
            w = construct(m, n)
        except (ConstructionUnavailable, Space34Error) as exc:
            if expect_ok:
                failures.append((m, n, str(exc)))
            else:
                documented_gaps += 1
            return
        assert w.verify().passed, (m, n)
        assert w.z == z_below(m, n, assume_large=True).z, (m, n)
        built += 1

    # every r-row at one m per residue class mod 6
    for m in (96, 97, 98, 99, 100, 101):
        base = comb(m, 2) // 3
        b_lo, b_hi = below_range(m)
        for r in range(0, 28):
            n = base - r
            if b_lo <= n <= b_hi:
                attempt(m, n)

    # stratified depth samples for every m in range
    for m in range(96, 121):
        c = comb(m, 2)
        b_lo, b_hi = below_range(m)
        boundary = floor(Fraction(c, 3) - Fraction(m, 4))
        picks = {b_hi, max(b_lo, boundary + 1), max(b_lo, boundary),
                 max(b_lo, boundary - 3), max(b_lo, (b_lo + boundary) // 2)}
        for n in sorted(p for p in picks if b_lo <= p <= b_hi):
            attempt(m, n)

    assert not failures, failures
    assert built >= 200


def test_criterion_5_strengthened_bound_consistency():
    # on the exceptional offsets the bound is strict: Z < floor(U-)
    for m in (5, 7):
        base = comb(m, 2) // 3
        for r in sorted(exception_set(m)):
            n = base - r
            if n < 1:
                continue
            floor_minus = upper_bounds(m, n).floor_minus
            assert exact_z(m, n).optimum < floor_minus, (m, n)
    # the quoted instance attains the strengthened bound exactly
    assert exact_z(5, 3).optimum == 8 == upper_bounds(5, 3).floor_minus - 1
    # at the threshold itself the bound is met with equality
    assert exact_z(7, 7).optimum == upper_bounds(7, 7).floor_minus


def test_criterion_6_gdd_sweep():
    for u in range(0, 16):
        for v in range(0, 31):
            if u == 0 and v == 0 or 4 * u + 2 * v > 60:
                continue
            verdict = admissible_4u2v(u, v)
            if verdict.ok:
                design = construct_4u2v(u, v)
                t = GddType.parse(" ".join(
                    p for p in (f"4^{u}" if u else "",
                                f"2^{v}" if v else "") if p))
                assert verify_gdd(design, t).passed, (u, v)
            else:
                with pytest.raises(Exception):
                    construct_4u2v(u, v)
            if 4 * u + 2 * v <= 16:
                t = GddType.parse(" ".join(
                    p for p in (f"4^{u}" if u else "",
                                f"2^{v}" if v else "") if p))
                brute = gdd_exists_bruteforce(t)
                assert (brute.status == "exists") == verdict.ok, (u, v)


def test_criterion_7_max_packing_cross_check():
    assert [max_triples(m) for m in (5, 6, 7, 8, 9)] == [2, 4, 7, 8, 12]


def test_criterion_8_parity_invariants_bulk():
    rng = random.Random(0)
    for _ in range(10_000):
        h = random_linear(rng, rng.randint(4, 30), max_edges=15)
        g3 = underlying_graph(restrict_to_size(h, 3))
        assert g3.is_even()
        assert g3.edge_count % 3 == 0
        d = defect_graph(h).edge_count
        ident = profile_identities(size_profile(h), h.m, h.n, d)
        assert ident.residual_eq1 == 0
        assert ident.residual_eq2 == 0
        assert ident.residual_eq4 == 0
        assert ident.z_from_eq3 == total_degree(h)


def test_criterion_9_triangle_engine():
    for m in range(3, 100):
        if m % 6 not in (1, 3):
            continue
        g = Graph.complete(m)
        result = triangle_decompose(g)
        assert result.status == STATUS_OK, m
        assert verify_triangle_set(g, result.triangles), m
    for h in range(1, 31):
        for w in range(3, 61):
            if h * w > 60:
                continue
            # complete multipartite K_{h x w} decomposes exactly when
            # degrees are even and the edge count is divisible by 3
            admissible = (h * (w - 1)) % 2 == 0 and \
                (h * h * comb(w, 2)) % 3 == 0
            if not admissible:
                continue
            design = construct_uniform(h, w)
            assert verify_gdd(design, GddType.parse(f"{h}^{w}")).passed, (h, w)
