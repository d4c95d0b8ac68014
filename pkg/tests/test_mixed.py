import itertools
import random

import pytest

from simplefold.characterize import decide_assigned
from simplefold.mixed import (
    Failure,
    assignment_to_dict,
    decide_mixed,
    find_valid_assignment,
    process_interval,
)
from simplefold.pattern import (
    Assignment,
    Interval,
    M,
    OpCounter,
    U,
    V,
    make_pattern,
    suspicious_intervals,
)


def completions(pattern):
    free = pattern.unassigned_indices()
    for mvs in itertools.product([M, V], repeat=len(free)):
        yield pattern.with_assignment(dict(zip(free, mvs)))


def brute_force_has_completion(pattern):
    return any(decide_assigned(q).foldable for q in completions(pattern))


def mixed_patterns(max_creases=4, length=6, max_unassigned=3):
    for k in range(0, max_creases + 1):
        for pos in itertools.combinations(range(1, length), k):
            for mvs in itertools.product([M, V, U], repeat=k):
                if sum(mv is U for mv in mvs) > max_unassigned:
                    continue
                yield make_pattern(length, list(zip(pos, mvs)))


def test_find_valid_assignment_examples():
    a = find_valid_assignment(make_pattern(8, [(3, M), (5, U)]))
    assert a == {1: V}

    a = find_valid_assignment(make_pattern(12, [(3, M), (5, U), (7, M)]))
    assert a == {1: V}

    assert find_valid_assignment(make_pattern(8, [(3, M), (5, M)])) is None

    a = find_valid_assignment(make_pattern(4, [(1, U), (2, U), (3, U)]))
    assert a == {0: M, 1: M, 2: M}


def test_returned_assignment_is_valid():
    for p in mixed_patterns():
        a = find_valid_assignment(p)
        if a is not None:
            assert decide_assigned(p.with_assignment(a)).foldable, p


def test_matches_brute_force_existence():
    for p in mixed_patterns():
        got = find_valid_assignment(p) is not None
        want = brute_force_has_completion(p)
        assert got == want, p


def test_process_interval_examples():
    p = make_pattern(8, [(3, M), (5, U)])
    out = process_interval({}, p, Interval(1, 2))
    assert out == {1: V}

    p = make_pattern(12, [(3, M), (5, U), (7, M)])
    out = process_interval({}, p, Interval(1, 3))
    assert out == {1: V}

    p = make_pattern(8, [(3, M), (5, M)])
    out = process_interval({}, p, Interval(1, 2))
    assert isinstance(out, Failure)


def test_process_interval_never_overwrites():
    p = make_pattern(12, [(3, U), (5, U), (7, U)])
    state = {0: M}
    out = process_interval(state, p, Interval(1, 3))
    assert out[0] is M
    assert state == {0: M}  # input untouched


def test_decide_mixed_examples():
    assert decide_mixed(make_pattern(8, [(3, M), (5, U)]), "one").foldable
    v = decide_mixed(make_pattern(8, [(3, M), (5, M)]), "some")
    assert not v.foldable and v.guilty == (3, 5)
    v = decide_mixed(make_pattern(12, [(5, M), (7, M)]), "some")
    assert not v.foldable and v.guilty == (5, 7)
    with pytest.raises(ValueError):
        decide_mixed(make_pattern(4), "all")


def test_decide_mixed_witness_replays():
    from simplefold.characterize import apply_reduction

    v = decide_mixed(make_pattern(8, [(3, M), (5, U)]), "some")
    assert v.foldable and v.assignment == {5: V}
    cur = make_pattern(8, [(3, M), (5, V)])
    for op in v.sequence:
        cur = apply_reduction(cur, op)
    assert cur.n == 0


def test_order_robustness_against_brute_force():
    # processing order among equal keys is a free choice; the verdict is not
    rng = random.Random(5)
    for p in mixed_patterns(max_creases=4, length=6):
        if not p.unassigned_indices():
            continue
        sus = suspicious_intervals(p)
        if len(sus) < 2 or rng.random() < 0.7:
            continue
        state = {}
        failed = False
        for iv in sorted(sus, key=lambda iv: (p.vertices[iv.right] - p.vertices[iv.left], -p.vertices[iv.left])):
            out = process_interval(state, p, iv)
            if isinstance(out, Failure):
                failed = True
                break
            state = out
        assert (not failed) == brute_force_has_completion(p), p


def test_assignment_json():
    p = make_pattern(8, [(3, M), (5, U)])
    d = assignment_to_dict(p, {1: V})
    assert d["assignment"] == {"5": "V"}
    assert d["completed_pattern"]["creases"][1] == {"pos": "5", "mv": "V"}


def test_cubic_operation_budget():
    rng = random.Random(3)
    for n in (10, 20, 40):
        pos = sorted(rng.sample(range(1, 20 * n), n))
        mvs = [rng.choice([M, V, U]) for _ in range(n)]
        p = make_pattern(20 * n, list(zip(pos, mvs)))
        counter = OpCounter()
        find_valid_assignment(p, counter=counter)
        assert counter.total <= 5 * n**3 + 1000
