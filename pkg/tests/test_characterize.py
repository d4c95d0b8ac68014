import itertools
import pytest

from simplefold.characterize import (
    CharacterizationViolationError,
    Crimp,
    EndFold,
    InvalidReductionError,
    NotFoldableError,
    apply_reduction,
    decide_assigned,
    find_reducible_segment,
    first_guilty_interval,
    synthesize_sequence,
)
from simplefold.pattern import (
    M,
    U,
    UnassignedCreaseError,
    V,
    is_innocent,
    make_pattern,
    suspicious_intervals,
)

MV = [M, V]


def assigned_patterns(max_creases=4, length=7):
    """Every assigned pattern with integer crease positions on [0, length]."""
    for k in range(0, max_creases + 1):
        for pos in itertools.combinations(range(1, length), k):
            for mvs in itertools.product(MV, repeat=k):
                yield make_pattern(length, list(zip(pos, mvs)))


def test_decide_examples():
    v = decide_assigned(make_pattern(8, [(3, M), (5, M)]))
    assert not v.foldable and v.guilty == (3, 5)

    v = decide_assigned(make_pattern(8, [(3, M), (5, V)]))
    assert v.foldable and v.sequence == (Crimp(3, 5),)

    v = decide_assigned(make_pattern(4, [(1, M), (2, M), (3, M)]))
    assert v.foldable

    v = decide_assigned(make_pattern(5))
    assert v.foldable and v.sequence == ()

    with pytest.raises(UnassignedCreaseError):
        decide_assigned(make_pattern(8, [(3, M), (5, U)]))


def test_find_reducible_examples():
    assert find_reducible_segment(make_pattern(8, [(3, M), (5, V)])) == Crimp(3, 5)
    assert find_reducible_segment(make_pattern(4, [(3, M)])) == EndFold(3, "right")
    assert find_reducible_segment(make_pattern(4, [(1, M), (2, M), (3, M)])) == EndFold(1, "left")
    with pytest.raises(ValueError):
        find_reducible_segment(make_pattern(4))
    with pytest.raises(CharacterizationViolationError):
        # guilty interval [3,5]: the shortest-run recipe cannot produce an op
        find_reducible_segment(make_pattern(8, [(3, M), (5, M)]))


def test_apply_reduction_examples():
    p = apply_reduction(make_pattern(8, [(3, M), (5, V)]), Crimp(3, 5))
    assert p == make_pattern(4)

    p = apply_reduction(make_pattern(4, [(3, M)]), EndFold(3, "right"))
    assert p == make_pattern(3)

    p = apply_reduction(make_pattern(4, [(1, M), (2, M), (3, M)]), EndFold(1, "left"))
    assert p == make_pattern(3, [(1, M), (2, M)])


def test_apply_reduction_rejections():
    p = make_pattern(8, [(3, M), (5, M)])
    with pytest.raises(InvalidReductionError):
        apply_reduction(p, Crimp(3, 5))  # equal signs
    p = make_pattern(8, [(1, M), (5, V)])
    with pytest.raises(InvalidReductionError):
        apply_reduction(p, Crimp(1, 5))  # middle longer than left flap
    with pytest.raises(InvalidReductionError):
        apply_reduction(make_pattern(4, [(1, M), (3, V)]), EndFold(3, "left"))
    with pytest.raises(InvalidReductionError):
        apply_reduction(make_pattern(8, [(3, M)]), EndFold(3, "right"))  # end segment 5 > flap 3


def test_synthesize_examples():
    assert synthesize_sequence(make_pattern(8, [(3, M), (5, V)])) == [Crimp(3, 5)]
    ops = synthesize_sequence(make_pattern(4, [(1, M), (2, M), (3, M)]))
    assert ops == [EndFold(1, "left"), EndFold(1, "left"), EndFold(1, "left")]
    assert synthesize_sequence(make_pattern(6)) == []
    with pytest.raises(NotFoldableError) as ei:
        synthesize_sequence(make_pattern(8, [(3, M), (5, M)]))
    assert ei.value.guilty == (3, 5)


def test_sequence_replay_consumes_all_creases():
    for p in assigned_patterns():
        if first_guilty_interval(p) is not None:
            continue
        ops = synthesize_sequence(p)
        crimps = sum(isinstance(op, Crimp) for op in ops)
        ends = sum(isinstance(op, EndFold) for op in ops)
        assert 2 * crimps + ends == p.n
        cur = p
        for op in ops:
            cur = apply_reduction(cur, op)
        assert cur.n == 0


def test_reductions_preserve_innocence_along_prefixes():
    # crimps and end folds keep "every suspicious interval innocent"
    for p in assigned_patterns():
        if first_guilty_interval(p) is not None:
            continue
        cur = p
        for op in synthesize_sequence(p):
            cur = apply_reduction(cur, op)
            assert all(is_innocent(cur, iv) for iv in suspicious_intervals(cur))
