import json

import pytest

from simplefold.gadgets import (
    PolyPattern,
    ThreePartitionInstance,
    ThreeSatFormula,
    gen_3partition_assigned,
    gen_3partition_unassigned,
    gen_3sat_rect,
    poly_to_fold,
    rect_to_fold,
    sat_layout_config,
    trace_union_boundary,
    validate_polypattern,
)
from simplefold.pattern import U, V, rational
from simplefold.rect import rect_to_dict


def dump(obj):
    return json.dumps(obj, sort_keys=True)


def test_instance_validation():
    with pytest.raises(ValueError):
        ThreePartitionInstance((1, 1))  # n not divisible by 3
    with pytest.raises(ValueError):
        ThreePartitionInstance((1, 1, 2))  # sum not divisible by 3
    with pytest.raises(ValueError):
        ThreeSatFormula(2, ((1, -2, 3),))  # literal out of range
    inst = ThreePartitionInstance((1, 2, 3))
    assert inst.m == 1 and inst.target == 2


def test_union_tracer_rejects_bad_shapes():
    with pytest.raises(ValueError):
        trace_union_boundary([(0, 0, 1, 1), (2, 0, 3, 1)])  # disconnected
    with pytest.raises(ValueError):
        trace_union_boundary([(0, 0, 1, 1), (1, 1, 2, 2)])  # pinch point
    donut = [(0, 0, 3, 1), (0, 2, 3, 3), (0, 0, 1, 3), (2, 0, 3, 3)]
    with pytest.raises(ValueError):
        trace_union_boundary(donut)  # hole


def test_wrapper_and_cage_counts():
    pat = gen_3partition_assigned(ThreePartitionInstance((1, 1, 1)))
    wrapper = pat.parts["wrapper"]
    assert wrapper["crease_count"] == "2"
    assert pat.config["cage_step_height"] == "2"  # 2t with t = 1
    assert pat.config["cage_steps"] == "1"
    report = validate_polypattern(pat)
    assert report.passed, report.failures


def test_assigned_generator_multiple_instances():
    for numbers in ((1, 1, 1), (1, 2, 3), (1, 1, 1, 1, 1, 1), (2, 3, 4, 2, 2, 5)):
        pat = gen_3partition_assigned(ThreePartitionInstance(numbers))
        report = validate_polypattern(pat)
        assert report.passed, (numbers, report.failures)


def test_unassigned_generator():
    inst = ThreePartitionInstance((1, 1, 1))
    pat = gen_3partition_unassigned(inst)
    cactus = pat.parts["cactus"]
    assert cactus["crease_count"] == "2"
    branches = [n for n in pat.parts if n.startswith("branch_")]
    assert len(branches) == 2
    assert all(c.mv is U for c in pat.creases)
    report = validate_polypattern(pat)
    assert report.passed, report.failures
    for name in branches:
        meta = pat.parts[name]
        assert rational(meta["x0"]) < rational(meta["crease_x"]) < rational(meta["x1"])


def test_buggy_variant_behind_flag():
    pat = gen_3partition_assigned(ThreePartitionInstance((1, 1, 1)), include_arm2=False)
    assert "arm2" not in pat.parts
    assert pat.config["arm2"] == "omitted"
    assert validate_polypattern(pat).passed


def test_determinism_byte_identical():
    inst = ThreePartitionInstance((1, 2, 3))
    a = dump(gen_3partition_assigned(inst).to_dict())
    b = dump(gen_3partition_assigned(inst).to_dict())
    assert a == b
    f = ThreeSatFormula(2, ((1, -2, 1), (2, 2, -1)))
    assert dump(rect_to_dict(gen_3sat_rect(f))) == dump(rect_to_dict(gen_3sat_rect(f)))


def test_negative_controls():
    pat = gen_3partition_assigned(ThreePartitionInstance((1, 1, 1)))
    # self-intersecting polygon
    verts = list(pat.vertices)
    verts[0], verts[1] = verts[1], verts[0]
    bad = PolyPattern(tuple(verts), pat.creases, pat.parts, pat.attachments, pat.config)
    assert not validate_polypattern(bad).passed

    cpat = gen_3partition_unassigned(ThreePartitionInstance((1, 1, 1)))
    parts = dict(cpat.parts)
    parts.pop("branch_0")
    broken = PolyPattern(cpat.vertices, cpat.creases, parts, cpat.attachments, cpat.config)
    report = validate_polypattern(broken)
    assert any("branch" in f for f in report.failures)


def test_3sat_examples():
    f = ThreeSatFormula(1, ((1, 1, 1),))
    pat = gen_3sat_rect(f)
    unassigned_rows = [c for c in pat.creases if c.axis == "h" and c.mv is U]
    assert len(unassigned_rows) == 2  # the t/f pair of the single variable
    v_lines = sorted(c.coord for c in pat.creases if c.axis == "v")
    assert v_lines == [1, 2, 3, 4]  # 2(n+1) order-enforcing lines
    assert all(c.lo == 0 and c.hi == pat.height for c in pat.creases if c.axis == "v")

    fig6 = ThreeSatFormula(3, ((1, -2, 3), (1, -2, -3)))
    pat = gen_3sat_rect(fig6)
    pairs = [c for c in pat.creases if c.axis == "h" and c.mv is U]
    assert len(pairs) == 2 * 3  # one adjacent pair per variable section


def test_sat_layout_config_recorded():
    f = ThreeSatFormula(2, ((1, 2, -1),))
    cfg = sat_layout_config(f)
    assert cfg["variables"] == "2" and cfg["clauses"] == "1"


def test_fold_export_shapes():
    pat = gen_3partition_unassigned(ThreePartitionInstance((1, 1, 1)))
    fold = poly_to_fold(pat)
    assert fold["frame_classes"] == ["creasePattern"]
    assert len(fold["edges_vertices"]) == len(fold["edges_assignment"])
    assert set(fold["edges_assignment"]) <= {"B", "M", "V", "U"}
    assert fold["edges_assignment"].count("B") == len(pat.vertices)

    rect = gen_3sat_rect(ThreeSatFormula(1, ((1, 1, 1),)))
    fold = rect_to_fold(rect)
    assert fold["edges_assignment"].count("B") == 4
    assert len(fold["edges_vertices"]) == 4 + len(rect.creases)
