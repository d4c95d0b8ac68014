import itertools

import pytest

from simplefold.all_layers import (
    InvalidFoldError,
    decide_all_layers_mixed,
    is_valid_all_layers_fold,
    plausible_creases,
    reduce_at,
)
from simplefold.mixed import decide_mixed
from simplefold.pattern import M, U, V, make_pattern


def plausible_positions(p):
    return [p.creases[i].position for i, _ in plausible_creases(p)]


def test_validity_examples():
    p = make_pattern(6, [(2, V), (4, M)])
    assert is_valid_all_layers_fold(p, 0).valid

    p = make_pattern(4, [(1, M), (2, M), (3, M)])
    r = is_valid_all_layers_fold(p, 1)
    assert not r.valid and r.conflict_at == 3

    p = make_pattern(6, [(2, V), (3, M)])
    r = is_valid_all_layers_fold(p, 0)
    assert not r.valid and r.conflict_at == 1


def test_reduce_examples():
    p = reduce_at(make_pattern(6, [(2, V), (4, M)]), 0)
    assert p == make_pattern(4, [(2, M)])

    p = reduce_at(make_pattern(4, [(1, M), (2, M), (3, M)]), 0)
    assert p == make_pattern(3, [(1, M), (2, M)])

    # a paper end landing exactly on a crease leaves it unassigned
    p = reduce_at(make_pattern(8, [(2, V), (4, U)]), 0)
    assert p == make_pattern(6, [(2, U)])

    with pytest.raises(InvalidFoldError):
        reduce_at(make_pattern(6, [(2, V), (3, M)]), 0)


def test_assignment_transfer_on_gluing():
    # arriving mountain forces a receiving unassigned crease to valley
    p = make_pattern(8, [(1, M), (2, V), (3, U)])
    out = reduce_at(p, 1)
    assert out == make_pattern(6, [(1, V)])


def test_plausible_examples():
    assert plausible_positions(make_pattern(6, [(2, V), (4, M)])) == [2, 4]
    assert plausible_positions(make_pattern(6, [(2, V), (3, M)])) == []
    assert plausible_positions(make_pattern(4, [(1, M), (2, M), (3, M)])) == [1, 2, 3]


def test_valid_implies_plausible():
    for k in range(1, 5):
        for pos in itertools.combinations(range(1, 7), k):
            for mvs in itertools.product([M, V, U], repeat=k):
                p = make_pattern(7, list(zip(pos, mvs)))
                plausible = {i for i, _ in plausible_creases(p)}
                for idx in range(k):
                    if is_valid_all_layers_fold(p, idx).valid:
                        assert idx in plausible, p


def test_decide_examples():
    v = decide_all_layers_mixed(make_pattern(6, [(2, V), (4, M)]))
    assert v.foldable and v.folds == (2, 2)
    assert v.original_positions == (2, 4)

    assert not decide_all_layers_mixed(make_pattern(6, [(2, V), (3, M)])).foldable

    v = decide_all_layers_mixed(make_pattern(4, [(1, M), (2, M), (3, M)]))
    assert v.foldable and v.folds == (1, 1, 1)
    assert v.original_positions == (1, 2, 3)


def test_fold_order_matters_for_mixed():
    # folding crease 2 of M@1 M@2 M@3 first would be invalid; greedy avoids it
    p = make_pattern(4, [(1, M), (2, M), (3, M)])
    assert not is_valid_all_layers_fold(p, 1).valid
    assert decide_all_layers_mixed(p).foldable


def test_model_separation_witness():
    p = make_pattern(6, [(2, V), (3, M)])
    assert decide_mixed(p, "some").foldable
    assert not decide_all_layers_mixed(p).foldable


def test_reduce_shrinks():
    for k in range(1, 5):
        for pos in itertools.combinations(range(1, 7), k):
            for mvs in itertools.product([M, V], repeat=k):
                p = make_pattern(7, list(zip(pos, mvs)))
                for idx in range(k):
                    if is_valid_all_layers_fold(p, idx).valid:
                        q = reduce_at(p, idx)
                        assert q.length < p.length
                        assert q.n < p.n


def test_verdict_json():
    d = decide_all_layers_mixed(make_pattern(6, [(2, V), (4, M)])).to_dict()
    assert d == {
        "foldable": True,
        "sequence": ["2", "2"],
        "coordinates": "reduced",
        "original_positions": ["2", "4"],
    }
