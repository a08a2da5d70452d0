import pytest

from zforge.hypercore import Graph, Hypergraph, defect_graph
from zforge.triangles import (
    STATUS_INFEASIBLE,
    STATUS_OK,
    bose_sts,
    complete_defect,
    default_budget,
    necessary_conditions,
    skolem_sts,
    triangle_decompose,
    verify_triangle_set,
)


def test_necessary_conditions_catch_parity_and_divisibility():
    # K_4: odd degrees
    assert necessary_conditions(Graph.complete(4)) is not None
    # C_4: even but edge count not divisible by 3
    c4 = Graph.from_pairs(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert necessary_conditions(c4) is not None
    # K_3 passes
    assert necessary_conditions(Graph.complete(3)) is None


def test_bose_and_skolem_steiner_systems():
    for m in (9, 15, 21, 33):
        ts = bose_sts(m)
        assert verify_triangle_set(Graph.complete(m), ts)
    for m in (13, 19, 25, 37):
        ts = skolem_sts(m)
        assert verify_triangle_set(Graph.complete(m), ts)


def test_decompose_complete_graphs():
    for m in (3, 7, 9, 13, 15):
        result = triangle_decompose(Graph.complete(m))
        assert result.status == STATUS_OK
        assert verify_triangle_set(Graph.complete(m), result.triangles)


def test_decompose_reports_infeasible_with_certificate():
    result = triangle_decompose(Graph.complete(4))
    assert result.status == STATUS_INFEASIBLE
    # C_6 satisfies all counting conditions but has no triangle at all
    c6 = Graph.from_pairs(6, [(i, (i + 1) % 6) for i in range(6)])
    result = triangle_decompose(c6)
    assert result.status == STATUS_INFEASIBLE


def test_decompose_is_seed_deterministic():
    g = Graph.complete(15)
    a = triangle_decompose(g, seed=3)
    b = triangle_decompose(g, seed=3)
    assert a.triangles.triangles == b.triangles.triangles


def test_complete_defect_fills_a_partial_system():
    h = Hypergraph(9, ((0, 1, 2), (3, 4, 5), (6, 7, 8)))
    full = complete_defect(h)
    assert defect_graph(full).edge_count == 0
    assert set(h.edges) <= set(full.edges)
    assert all(len(e) == 3 for e in full.edges)


def test_default_budget_env_override(monkeypatch):
    monkeypatch.setenv("ZFORGE_BUDGET", "1234")
    assert default_budget() == 1234
    monkeypatch.delenv("ZFORGE_BUDGET")
    assert default_budget() == 10_000_000
