"""Mountain/valley completion of mixed 1D patterns.

Whether an interval is suspicious depends only on crease positions, so a
mixed pattern folds flat (one-layer or some-layers) exactly when its
unassigned creases can be completed so that every suspicious interval ends
up innocent.  Processing suspicious intervals from smallest to largest and
balancing each one greedily decides this in polynomial time and produces a
concrete completion.

Deterministic choices: intervals are ordered by (width, leftmost); inside
an interval the deficient signs are handed out left to right; the crease
left out in the odd case is the leftmost unassigned one; creases untouched
by any suspicious interval become mountains.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .characterize import FoldVerdict, decide_assigned, synthesize_sequence
from .pattern import (
    Assignment,
    CreasePattern1D,
    Interval,
    M,
    U,
    V,
    interval_positions,
    suspicious_intervals,
)


@dataclass(frozen=True)
class Failure:
    """No completion can make this interval innocent, so none exists at all."""

    interval: Interval
    reason: str


def _interval_state(state: dict[int, Assignment], pattern: CreasePattern1D, iv: Interval):
    assigned_m = assigned_v = 0
    free: list[int] = []
    for idx in range(iv.left - 1, iv.right):
        mv = pattern.creases[idx].mv
        if mv is U:
            mv = state.get(idx, U)
        if mv is M:
            assigned_m += 1
        elif mv is V:
            assigned_v += 1
        else:
            free.append(idx)
    return assigned_m, assigned_v, free


def _hand_out(state, free, need_m):
    """Assign the first need_m free creases mountain, the rest valley."""
    for j, idx in enumerate(free):
        state[idx] = M if j < need_m else V


def process_interval(
    state: dict[int, Assignment], pattern: CreasePattern1D, iv: Interval
) -> dict[int, Assignment] | Failure:
    """Assign all or all-but-one unassigned creases of iv so it is innocent.

    iv must be the next interval in (width, leftmost) order among the
    suspicious intervals; earlier ones are reflected in `state`.
    """
    new_state = dict(state)
    ms, vs, free = _interval_state(state, pattern, iv)
    total = ms + vs + len(free)
    k, odd = divmod(total, 2)
    if not odd:
        if ms > k or vs > k:
            return Failure(iv, f"{max(ms, vs)} creases of one sign in an interval of {total}")
        _hand_out(new_state, free, k - ms)
        return new_state
    if ms <= k and vs <= k and free:
        # leave the leftmost unassigned crease out, balance the rest
        rest = free[1:]
        excluded = free[0]
        _hand_out(new_state, rest, k - ms)
        new_state.pop(excluded, None)
        return new_state
    if ms == k + 1 and vs <= k:
        _hand_out(new_state, free, 0)  # everything valley
        return new_state
    if vs == k + 1 and ms <= k:
        _hand_out(new_state, free, len(free))  # everything mountain
        return new_state
    if not free and abs(ms - vs) <= 1:
        return new_state
    return Failure(iv, f"{max(ms, vs)} creases of one sign in an interval of {total}")


def find_valid_assignment(
    pattern: CreasePattern1D, counter=None
) -> dict[int, Assignment] | None:
    """Completion of the unassigned creases making the pattern flat-foldable,
    or None when no completion works.  Pre-assigned creases are never touched;
    for a fully assigned pattern the result is {} iff it is foldable.
    """
    result = _find_valid_assignment(pattern, counter)
    return None if isinstance(result, Failure) else result


def _find_valid_assignment(pattern, counter=None):
    state: dict[int, Assignment] = {}
    for iv in suspicious_intervals(pattern, counter=counter):
        if counter is not None:
            counter.add(iv.right - iv.left + 1)
        result = process_interval(state, pattern, iv)
        if isinstance(result, Failure):
            return result
        state = result
    for idx in pattern.unassigned_indices():
        state.setdefault(idx, M)
    return state


def decide_mixed(pattern: CreasePattern1D, model: str) -> FoldVerdict:
    """One-layer / some-layers flat-foldability of a mixed pattern.

    Both models give the same answer: foldable iff a valid completion exists.
    The witness carries the completion and its crimp/end-fold sequence.
    """
    if model not in ("one", "some"):
        raise ValueError(f"unsupported model {model!r}; expected 'one' or 'some'")
    result = _find_valid_assignment(pattern)
    if isinstance(result, Failure):
        return FoldVerdict(False, guilty=interval_positions(pattern, result.interval))
    completed = pattern.with_assignment(result)
    sequence = tuple(synthesize_sequence(completed))
    by_position = {pattern.creases[i].position: mv for i, mv in result.items()}
    return FoldVerdict(True, sequence=sequence, assignment=by_position)


def assignment_to_dict(pattern: CreasePattern1D, assignment: dict[int, Assignment]) -> dict:
    from .pattern import pattern_to_dict

    completed = pattern.with_assignment(assignment)
    return {
        "assignment": {
            str(pattern.creases[i].position): mv.value for i, mv in sorted(assignment.items())
        },
        "completed_pattern": pattern_to_dict(completed),
    }
