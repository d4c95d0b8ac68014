import random

import pytest

from simplefold.mixed import decide_mixed
from simplefold.pattern import M, U, V, make_pattern
from simplefold.rect import (
    RectPattern,
    decide_rect_one_layer,
    full_line,
    make_rect,
    rect_from_dict,
    rect_to_dict,
)


def embed(pattern1d):
    """1D pattern as full-height vertical lines on a rectangle."""
    p = RectPattern(pattern1d.length, pattern1d.length / 2 + 1)
    return RectPattern(
        p.width,
        p.height,
        tuple(full_line(p, "v", c.position, c.mv) for c in pattern1d.creases),
    )


def test_crossing_directions_never_fold():
    r = make_rect(4, 2, [("v", 2, 0, 2, U), ("h", 1, 0, 4, U)])
    v = decide_rect_one_layer(r)
    assert not v.foldable and v.reason == "crossing-directions"


def test_single_direction_reduces_to_1d():
    r = make_rect(8, 1, [("v", 3, 0, 1, M), ("v", 5, 0, 1, U)])
    v = decide_rect_one_layer(r)
    assert v.foldable and v.inner.assignment == {5: V}


def test_no_creases_foldable():
    assert decide_rect_one_layer(make_rect(3, 2)).foldable


def test_partial_crease_is_unfoldable_distinctly():
    r = make_rect(8, 2, [("v", 3, 0, 1, M)])
    v = decide_rect_one_layer(r)
    assert not v.foldable and v.reason == "partial-crease"


def test_validation():
    with pytest.raises(ValueError):
        make_rect(4, 2, [("v", 2, 1, 1, M)])  # zero length
    with pytest.raises(ValueError):
        make_rect(4, 2, [("v", 5, 0, 2, M)])  # outside
    with pytest.raises(ValueError):
        make_rect(4, 2, [("v", 2, 0, 2, M), ("v", 2, 1, 2, V)])  # overlap on a line


def test_embedding_equivalence_seeded():
    rng = random.Random(99)
    checked = 0
    while checked < 220:
        length = rng.randint(2, 9)
        k = rng.randint(0, min(5, length - 1))
        pos = sorted(rng.sample(range(1, length), k))
        mvs = [rng.choice([M, V, U]) for _ in range(k)]
        p = make_pattern(length, list(zip(pos, mvs)))
        want = decide_mixed(p, "one").foldable
        got = decide_rect_one_layer(embed(p)).foldable
        assert got == want, p
        checked += 1


def test_json_roundtrip():
    r = make_rect(4, 2, [("v", 2, 0, 2, U), ("h", 1, 0, 4, M)])
    d = rect_to_dict(r)
    assert d["creases"][0] == {"axis": "v", "coord": "2", "from": "0", "to": "2", "mv": "U"}
    assert rect_from_dict(d) == r
