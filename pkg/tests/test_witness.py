from math import comb

import pytest

from zforge.bounds import z_value
from zforge.hypercore import size_profile
from zforge.witness import (
    ConstructionUnavailable,
    construct,
    even_u0,
    exception_above_5mod6,
    five_mod6_near,
    odd_near_r,
    pack_23,
    space_234_even,
    space_34,
    two_mod6_near,
    u0_boundary,
)


def check(w):
    assert w.verify().passed, w.verify().failures
    return w


def test_pack_23_reference_points():
    w = check(pack_23(9, 36))
    assert w.z == 72 and w.construction == "L3.3"
    # the quoted point (12, 24) cannot exist: it would need 21
    # edge-disjoint triples on 12 vertices, but the maximum packing
    # has 20; the correct value there is 68, not floor(U+) = 69
    with pytest.raises(ValueError):
        pack_23(12, 24)
    assert z_value(12, 24).z == 68


def test_exception_row_for_5_mod_6():
    w = check(exception_above_5mod6(11))
    assert (w.m, w.n, w.z) == (11, 19, 55)
    assert w.construction == "L3.4"


def test_mixed_quad_triple_space_even_m():
    h = space_234_even(8, 1)
    assert size_profile(h).counts == {4: 1, 3: 6, 2: 4}
    h = space_234_even(6, 0)
    assert size_profile(h).counts == {3: 4, 2: 3}


def test_even_u0_golden():
    w = check(even_u0(8, 11))
    assert w.z == 30 and w.construction == "L3.6"


def test_u0_boundary_rows():
    for m in (18, 20, 32):
        w = check(u0_boundary(m))
        # the boundary row attains the floor of the third bound even
        # where the small-m interval leaves the formula uncovered
        rep = z_value(w.m, w.n, assume_large=True)
        assert w.z == rep.floor_zero
        assert w.construction == "L4.2"


def test_space_34_deep_rows():
    w = check(space_34(97, 5))
    assert (w.n, w.z) == (1547, 4646)
    assert w.construction == "L4.4"


def test_odd_near_threshold_profiles():
    for m in (13, 15, 19, 21):
        for r in (1, 2, 3, 4):
            w = check(odd_near_r(m, r))
            assert w.n == comb(m, 2) // 3 - r
            # these rows sit one below the floor of the third bound
            rep = z_value(m, w.n, assume_large=True)
            assert w.z == rep.floor_minus - 1
            assert w.construction == "L4.5"


def test_five_mod6_rows():
    for r in range(0, 10):
        w = check(five_mod6_near(47, r))
        assert w.n == comb(47, 2) // 3 - r
        assert w.z == z_value(47, w.n, assume_large=True).z
        assert w.construction == "L4.8"


def test_two_mod6_rows():
    for r in (0, 1, 2):
        w = check(two_mod6_near(98, r))
        assert w.construction == "L4.9"
        assert w.z == z_value(98, w.n, assume_large=True).z


def test_construct_dispatch_and_retry_determinism():
    for m, n in ((8, 11), (9, 36), (11, 19), (12, 30), (20, 100)):
        a = construct(m, n)
        b = construct(m, n)
        assert a.verify().passed
        assert a.hypergraph.canonical().edges == b.hypergraph.canonical().edges
        assert a.z == z_value(m, n, assume_large=True).z


def test_construct_unreachable_rows_fail_honestly():
    # m = 2 mod 3 deep below the threshold has no implemented builder
    m = 101
    n = comb(m, 2) // 3 - 40
    with pytest.raises((ConstructionUnavailable, ValueError)):
        construct(m, n)
