"""Exact rational evaluation of the three upper bounds and the piecewise
formulas for Z_{2,2}(m,n).

The three bounds, as functions of m and n:

    u_plus  = m(m-1)/4  + 3n/2
    u_zero  = m(3m-4)/14 + 12n/7
    u_minus = m(m-1)/6  + 2n

Z_{2,2}(m,n) never exceeds the minimum of their floors, and in two
exceptional families it is exactly one less than the applicable floor:
m = 5 (mod 6) at n = ceil(C(m,2)/3), and odd m at n = floor(C(m,2)/3) - r
for r in S, where S = {1,2,3,4} when m = 1,3 (mod 6) and S = {0,1,3} when
m = 5 (mod 6).

Everything is computed with Fraction; floors at half, seventh and third
fractions must be exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, floor, ceil
from typing import Optional

from zforge.hypercore import SizeProfile

REGIME_ABOVE_1 = "above-case1"
REGIME_ABOVE_2 = "above-case2"
REGIME_ABOVE_3 = "above-case3"
REGIME_BELOW_1 = "below-case1"
REGIME_BELOW_2 = "below-case2"
REGIME_BELOW_3 = "below-case3"
REGIME_UNCOVERED = "uncovered"


class BoundsRangeError(ValueError):
    """n lies outside the interval a formula covers; message names it."""


@dataclass(frozen=True)
class BoundReport:
    m: int
    n: int
    u_plus: Fraction
    u_zero: Fraction
    u_minus: Fraction
    floor_plus: int
    floor_zero: int
    floor_minus: int
    roman_min: int
    regime: str
    decrement: int
    z: Optional[int]
    asymptotic: bool = False


def exception_set(m: int) -> set[int]:
    """Offsets r below floor(C(m,2)/3) where odd m loses one more degree."""
    if m % 6 in (1, 3):
        return {1, 2, 3, 4}
    if m % 6 == 5:
        return {0, 1, 3}
    return set()


def _raw_bounds(m: int, n: int) -> tuple[Fraction, Fraction, Fraction]:
    u_plus = Fraction(m * (m - 1), 4) + Fraction(3 * n, 2)
    u_zero = Fraction(m * (3 * m - 4), 14) + Fraction(12 * n, 7)
    u_minus = Fraction(m * (m - 1), 6) + 2 * n
    return u_plus, u_zero, u_minus


def _report(m: int, n: int, regime: str, decrement: int = 0,
            z_floor: Optional[str] = None, asymptotic: bool = False) -> BoundReport:
    u_plus, u_zero, u_minus = _raw_bounds(m, n)
    floors = {
        "plus": floor(u_plus),
        "zero": floor(u_zero),
        "minus": floor(u_minus),
    }
    roman_min = min(floors.values())
    z = floors[z_floor] - decrement if z_floor is not None else None
    return BoundReport(
        m=m,
        n=n,
        u_plus=u_plus,
        u_zero=u_zero,
        u_minus=u_minus,
        floor_plus=floors["plus"],
        floor_zero=floors["zero"],
        floor_minus=floors["minus"],
        roman_min=roman_min,
        regime=regime,
        decrement=decrement,
        z=z,
        asymptotic=asymptotic,
    )


def upper_bounds(m: int, n: int) -> BoundReport:
    """The three rational bounds and their floors; no regime logic."""
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    return _report(m, n, REGIME_UNCOVERED)


def above_range(m: int) -> tuple[int, int]:
    """Inclusive n-interval covered above the triple system threshold."""
    c = comb(m, 2)
    return ceil(Fraction(c, 3)), c


def below_range(m: int) -> tuple[int, int]:
    """Inclusive n-interval covered below the triple system threshold."""
    c = comb(m, 2)
    lo = ceil(Fraction(c, 6) + Fraction(m, 3) + 40)
    # upper limit is strict n < C/3
    hi = ceil(Fraction(c, 3)) - 1
    return lo, hi


def z_above(m: int, n: int) -> BoundReport:
    """Exact Z value for n at or above the triple system threshold."""
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    lo, hi = above_range(m)
    if not lo <= n <= hi:
        raise BoundsRangeError(
            f"n={n} outside [{lo}, {hi}] (= [ceil(C({m},2)/3), C({m},2)])"
        )
    c = comb(m, 2)
    if m % 2 == 0 and n <= floor(Fraction(c, 3) + Fraction(m, 3)):
        return _report(m, n, REGIME_ABOVE_1, z_floor="zero")
    if m % 6 == 5 and n == ceil(Fraction(c, 3)):
        return _report(m, n, REGIME_ABOVE_2, decrement=1, z_floor="plus")
    return _report(m, n, REGIME_ABOVE_3, z_floor="plus")


def z_below(m: int, n: int, assume_large: bool = False) -> BoundReport:
    """Z value for n below the triple system threshold.

    The formula is proved only for sufficiently large m (with some
    subcases established for all m >= 96); the report is flagged
    asymptotic unless assume_large is set.
    """
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    lo, hi = below_range(m)
    if not lo <= n <= hi:
        raise BoundsRangeError(
            f"n={n} outside [{lo}, {hi}] "
            f"(= [ceil(C({m},2)/6 + {m}/3 + 40), ceil(C({m},2)/3) - 1])"
        )
    c = comb(m, 2)
    asymptotic = not assume_large
    if m % 2 == 0 and n > floor(Fraction(c, 3) - Fraction(m, 4)):
        return _report(m, n, REGIME_BELOW_1, z_floor="zero", asymptotic=asymptotic)
    if m % 2 == 1:
        r = c // 3 - n
        if r in exception_set(m):
            return _report(m, n, REGIME_BELOW_2, decrement=1, z_floor="minus",
                           asymptotic=asymptotic)
    return _report(m, n, REGIME_BELOW_3, z_floor="minus", asymptotic=asymptotic)


def z_value(m: int, n: int, assume_large: bool = False) -> BoundReport:
    """Dispatch to the applicable formula, or report the bare bound minimum."""
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    a_lo, a_hi = above_range(m)
    if a_lo <= n <= a_hi:
        return z_above(m, n)
    b_lo, b_hi = below_range(m)
    if b_lo <= n <= b_hi:
        return z_below(m, n, assume_large)
    return _report(m, n, REGIME_UNCOVERED)


@dataclass(frozen=True)
class ProfileIdentity:
    """Residuals of the edge-count and pair-count identities.

    For the size profile of any linear hypergraph with defect edge count
    d, all three residuals vanish and z_from_eq3 (and the u_plus variant)
    equal the total degree exactly.
    """

    d: int
    x: int
    delta: int
    residual_eq1: int
    residual_eq2: int
    residual_eq4: int
    z_from_eq3: Fraction
    z_from_uplus: Fraction


def profile_identities(profile: SizeProfile, m: int, n: int, d: int) -> ProfileIdentity:
    if d < 0:
        raise ValueError("defect edge count must be nonnegative")
    c = comb(m, 2)
    x = c // 3 - n
    delta = c % 3
    counts = profile.counts
    sum_n = sum(counts.values())
    sum_pairs = sum(comb(i, 2) * cnt for i, cnt in counts.items())
    residual_eq1 = sum_n - n
    residual_eq2 = sum_pairs - (c - d)
    residual_eq4 = sum(
        (comb(i, 2) - 3) * cnt for i, cnt in counts.items()
    ) - (3 * x + delta - d)
    u_plus, _, u_minus = _raw_bounds(m, n)
    z_eq3 = u_minus - Fraction(d, 3) - sum(
        (2 + Fraction(comb(i, 2), 3) - i) * cnt for i, cnt in counts.items()
    )
    z_uplus = u_plus - Fraction(d, 2) - sum(
        (Fraction(comb(i, 2), 2) + Fraction(3, 2) - i) * cnt
        for i, cnt in counts.items()
    )
    return ProfileIdentity(
        d=d,
        x=x,
        delta=delta,
        residual_eq1=residual_eq1,
        residual_eq2=residual_eq2,
        residual_eq4=residual_eq4,
        z_from_eq3=z_eq3,
        z_from_uplus=z_uplus,
    )
