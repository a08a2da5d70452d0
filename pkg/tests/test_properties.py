"""Property-based invariants on randomly generated linear hypergraphs."""

import random

from hypothesis import given, settings, strategies as st

from zforge.bounds import profile_identities, upper_bounds
from zforge.hypercore import (
    defect_graph,
    is_linear,
    pair_count,
    restrict_to_size,
    size_profile,
    total_degree,
    underlying_graph,
)

from helpers import random_linear


@st.composite
def linear_hypergraphs(draw):
    seed = draw(st.integers(min_value=0, max_value=2**32 - 1))
    m = draw(st.integers(min_value=4, max_value=30))
    return random_linear(random.Random(seed), m)


@given(linear_hypergraphs())
@settings(max_examples=300, deadline=None)
def test_generator_produces_linear_hypergraphs(h):
    assert is_linear(h) is None


@given(linear_hypergraphs())
@settings(max_examples=300, deadline=None)
def test_triple_part_parity(h):
    # the size-3 restriction always has an even underlying graph whose
    # edge count is divisible by three
    g = underlying_graph(restrict_to_size(h, 3))
    assert g.is_even()
    assert g.edge_count % 3 == 0


@given(linear_hypergraphs())
@settings(max_examples=300, deadline=None)
def test_profile_identity_residuals_vanish(h):
    d = defect_graph(h).edge_count
    ident = profile_identities(size_profile(h), h.m, h.n, d)
    assert ident.residual_eq1 == 0
    assert ident.residual_eq2 == 0
    assert ident.residual_eq4 == 0
    assert ident.z_from_eq3 == total_degree(h)
    assert ident.z_from_uplus == total_degree(h)


@given(linear_hypergraphs())
@settings(max_examples=300, deadline=None)
def test_pair_partition_and_bounds(h):
    g = underlying_graph(h)
    d = defect_graph(h)
    assert g.edge_count + d.edge_count == pair_count(h.m)
    z = total_degree(h)
    rep = upper_bounds(h.m, h.n)
    assert z <= rep.floor_plus
    assert z <= rep.floor_minus
    if h.m % 2 == 0:
        assert z <= rep.floor_zero


@given(linear_hypergraphs())
@settings(max_examples=200, deadline=None)
def test_deleting_a_pair_edge(h):
    # removing one pair edge drops n by 1, z by 2, defect up by 1
    pairs = [e for e in h.edges if len(e) == 2]
    if not pairs:
        return
    smaller = type(h)(h.m, tuple(e for e in h.edges if e != pairs[0]))
    assert smaller.n == h.n - 1
    assert total_degree(smaller) == total_degree(h) - 2
    assert defect_graph(smaller).edge_count == defect_graph(h).edge_count + 1
