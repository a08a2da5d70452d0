import json
import random

import pytest

from zforge.hypercore import (
    Graph,
    Hypergraph,
    Witness,
    defect_graph,
    example_linear_space_8,
    is_linear,
    pair_count,
    parity_report,
    restrict_to_size,
    size_profile,
    total_degree,
    underlying_graph,
    verify_witness,
    witness_from_json,
    witness_to_json,
)

from helpers import random_linear


def test_linearity_detection():
    good = Hypergraph(5, ((0, 1, 2), (0, 3, 4)))
    assert is_linear(good) is None
    bad = Hypergraph(5, ((0, 1, 2), (0, 1, 3)))
    violation = is_linear(bad)
    assert violation is not None
    assert violation.pair == (0, 1)


def test_underlying_and_defect_partition_pairs():
    h = Hypergraph(6, ((0, 1, 2), (3, 4)))
    g = underlying_graph(h)
    d = defect_graph(h)
    assert g.edge_count + d.edge_count == pair_count(6)
    assert g.adjacency.isdisjoint(d.adjacency)


def test_total_degree_is_sum_of_sizes():
    h = Hypergraph(7, ((0, 1, 2, 3), (4, 5), (0, 4, 6)))
    assert total_degree(h) == 4 + 2 + 3
    profile = size_profile(h)
    assert profile.counts == {4: 1, 3: 1, 2: 1}
    assert profile.total_degree() == 9


def test_example_space_is_a_linear_space():
    h = example_linear_space_8()
    assert h.m == 8 and h.n == 11
    assert is_linear(h) is None
    assert defect_graph(h).edge_count == 0
    assert total_degree(h) == 30


def test_verify_witness_reports_each_failure():
    h = Hypergraph(5, ((0, 1, 2), (0, 1, 3)))
    report = verify_witness(h, 6, 3, 7)
    assert not report.passed
    joined = " ".join(report.failures)
    assert "vertex count" in joined
    assert "edge count" in joined
    assert "linearity" in joined
    assert "total degree" in joined


def test_witness_json_round_trip_and_canonical_bytes():
    h = Hypergraph(5, ((3, 4), (0, 1, 2)))
    w = Witness(h, 5, 2, 5, "L3.3", seed=7)
    text = witness_to_json(w)
    # canonical order: sizes descending, lexicographic inside a size
    doc = json.loads(text)
    assert list(doc) == ["m", "n", "z", "construction", "seed", "edges"]
    assert doc["edges"] == [[0, 1, 2], [3, 4]]
    back = witness_from_json(text)
    assert witness_to_json(back) == text
    assert back.verify().passed


def test_witness_json_rejects_garbage():
    with pytest.raises((ValueError, TypeError)):
        witness_from_json("{\"m\": 3}")
    with pytest.raises((ValueError, TypeError)):
        witness_from_json("not json")


def test_triple_restriction_parity():
    # any collection of edge-disjoint triples has an even underlying
    # graph with edge count divisible by three
    rng = random.Random(5)
    for _ in range(50):
        h = random_linear(rng, rng.randint(4, 20))
        h3 = restrict_to_size(h, 3)
        g = underlying_graph(h3)
        assert g.is_even()
        assert g.edge_count % 3 == 0


def test_graph_parity_helpers():
    triangle = Graph.from_pairs(3, [(0, 1), (1, 2), (2, 0)])
    assert triangle.is_even()
    path = Graph.from_pairs(3, [(0, 1), (1, 2)])
    assert not path.is_even() and not path.is_odd()
    matching = Graph.from_pairs(4, [(0, 1), (2, 3)])
    assert matching.is_odd()
