import pytest

from zforge.gdd import (
    GddType,
    InadmissibleError,
    admissible_4u2v,
    construct_4u2v,
    construct_one_irregular,
    construct_uniform,
    fill_group,
    to_linear_space,
    verify_gdd,
)
from zforge.hypercore import defect_graph, is_linear


def test_type_parse_and_round_trip():
    t = GddType.parse("4^3 2^6")
    assert t.vertex_count == 24
    assert sorted(t.group_sizes()) == [2] * 6 + [4] * 3
    assert GddType.parse(str(t)) == t
    with pytest.raises(ValueError):
        GddType.parse("4^")


def test_verify_gdd_rejects_cross_pair_gaps():
    design = construct_uniform(3, 3)
    t = GddType.parse("3^3")
    assert verify_gdd(design, t).passed
    broken = type(design)(design.m, design.groups, design.triples[:-1])
    assert not verify_gdd(broken, t).passed


def test_uniform_and_one_irregular_constructions():
    for h, w in ((3, 3), (3, 7), (4, 4), (2, 6), (6, 4)):
        design = construct_uniform(h, w)
        assert verify_gdd(design).passed
    design = construct_one_irregular(5, 1, 12)
    assert verify_gdd(design).passed


def test_admissibility_characterisation():
    # 4^u 2^v with 3-blocks: known admissible small cases
    assert admissible_4u2v(3, 0).ok
    assert admissible_4u2v(0, 3).ok
    assert not admissible_4u2v(2, 0).ok
    assert not admissible_4u2v(1, 1).ok


def test_construct_4u2v_matches_admissibility():
    for u in range(0, 7):
        for v in range(0, 7):
            if u == 0 and v == 0:
                continue
            verdict = admissible_4u2v(u, v)
            if verdict.ok:
                design = construct_4u2v(u, v)
                t = GddType.parse(
                    " ".join(p for p in (f"4^{u}" if u else "",
                                         f"2^{v}" if v else "") if p))
                assert verify_gdd(design, t).passed, (u, v)
            else:
                with pytest.raises(InadmissibleError):
                    construct_4u2v(u, v)


def test_fill_group_refines_types():
    host = construct_uniform(6, 4)  # type 6^4
    filler = construct_4u2v(0, 3)   # type 2^3 on 6 points
    refined = fill_group(host, 0, filler)
    assert verify_gdd(refined).passed
    sizes = sorted(refined.type_signature().group_sizes())
    assert sizes == [2, 2, 2, 6, 6, 6]


def test_to_linear_space():
    design = construct_4u2v(3, 0)
    h = to_linear_space(design)
    assert is_linear(h) is None
    assert defect_graph(h).edge_count == 0
