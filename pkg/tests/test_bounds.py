from fractions import Fraction
from math import ceil, comb, floor

import pytest

from zforge.bounds import (
    BoundsRangeError,
    above_range,
    below_range,
    exception_set,
    profile_identities,
    upper_bounds,
    z_above,
    z_below,
    z_value,
)
from zforge.hypercore import SizeProfile


def test_raw_bounds_are_exact_rationals():
    r = upper_bounds(8, 11)
    assert r.u_plus == Fraction(61, 2)
    assert r.u_zero == Fraction(212, 7)
    assert r.u_minus == Fraction(94, 3)
    assert (r.floor_plus, r.floor_zero, r.floor_minus) == (30, 30, 31)
    assert r.roman_min == 30


def test_above_threshold_golden_values():
    assert z_value(8, 11).z == 30
    assert z_value(9, 36).z == 72
    assert z_value(11, 19).z == 55
    # the exceptional row for m congruent to 5 mod 6 at the threshold
    assert z_above(5, 4).z == 10


def test_exception_sets_by_residue():
    assert exception_set(7) == {1, 2, 3, 4}
    assert exception_set(9) == {1, 2, 3, 4}
    assert exception_set(11) == {0, 1, 3}
    assert exception_set(8) == set()
    assert exception_set(12) == set()


def test_above_range_covers_threshold_to_complete():
    for m in (8, 9, 12, 13):
        lo, hi = above_range(m)
        c = comb(m, 2)
        assert lo == ceil(c / 3) == -(-c // 3)
        assert hi == c
        assert z_above(m, lo).z is not None
        assert z_above(m, hi).z == 2 * c  # pair-only linear space
        with pytest.raises(BoundsRangeError):
            z_above(m, lo - 1)
        with pytest.raises(BoundsRangeError):
            z_above(m, hi + 1)


def test_below_flags_the_asymptotic_caveat():
    lo, hi = below_range(30)
    assert lo <= hi
    assumed = z_below(30, hi, assume_large=True)
    assert assumed.z is not None and not assumed.asymptotic
    flagged = z_below(30, hi)
    assert flagged.z == assumed.z and flagged.asymptotic
    with pytest.raises(BoundsRangeError):
        z_below(30, hi + 1)


def test_regime_labels_partition():
    m = 24
    c = comb(m, 2)
    a_lo, _ = above_range(m)
    b_lo, b_hi = below_range(m)
    for n in range(b_lo, c + 1):
        r = z_value(m, n, assume_large=True)
        if n >= a_lo:
            assert r.regime.startswith("above-")
        elif n <= b_hi:
            assert r.regime.startswith("below-")
        assert r.z is not None


def test_profile_identities_vanish_on_a_real_profile():
    # the 8-vertex linear space: size profile {4: 1, 3: 6, 2: 4}, d = 0
    profile = SizeProfile({4: 1, 3: 6, 2: 4})
    ident = profile_identities(profile, 8, 11, 0)
    assert ident.residual_eq1 == 0
    assert ident.residual_eq2 == 0
    assert ident.residual_eq4 == 0
    assert ident.z_from_eq3 == 30
    assert ident.z_from_uplus == 30


def test_decrement_matches_exception_rows():
    # odd m just below the threshold: r = floor(C/3) - n
    for m in (97, 101):
        base = comb(m, 2) // 3
        for r in range(0, 8):
            rep = z_value(m, base - r, assume_large=True)
            if rep.regime.startswith("below-"):
                expected = 1 if r in exception_set(m) else 0
                assert rep.decrement == expected, (m, r)
    # even the threshold row itself loses one degree for m = 5 mod 6
    rep = z_value(11, ceil(comb(11, 2) / 3))
    assert rep.regime == "above-case2" and rep.decrement == 1
