"""Flat-foldability of fully assigned 1D patterns.

A fully assigned pattern folds flat (in the one-layer and some-layers
models alike) exactly when every suspicious interval has balanced
mountain/valley counts.  On the positive side this module synthesizes an
explicit witness: a sequence of crimps and end folds that consumes every
crease, each operation expressed in the coordinates of the pattern it is
applied to.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .pattern import (
    Assignment,
    Crease,
    CreasePattern1D,
    Interval,
    M,
    U,
    UnassignedCreaseError,
    V,
    interval_positions,
    is_innocent,
    suspicious_intervals,
)


class InvalidReductionError(ValueError):
    """A crimp or end fold whose length/sign conditions do not hold."""


class CharacterizationViolationError(RuntimeError):
    """No reducible segment although every suspicious interval was innocent."""


class NotFoldableError(Exception):
    def __init__(self, guilty: tuple[Fraction, Fraction]):
        super().__init__(f"guilty suspicious interval [{guilty[0]}, {guilty[1]}]")
        self.guilty = guilty


@dataclass(frozen=True)
class Crimp:
    left: Fraction
    right: Fraction


@dataclass(frozen=True)
class EndFold:
    crease: Fraction
    side: str  # "left" | "right"


ReductionOp = Crimp | EndFold


@dataclass
class FoldVerdict:
    foldable: bool
    sequence: tuple[ReductionOp, ...] | None = None
    guilty: tuple[Fraction, Fraction] | None = None
    assignment: dict[Fraction, Assignment] | None = None  # position -> M/V, mixed deciders only

    def to_dict(self) -> dict:
        if not self.foldable:
            out = {"foldable": False, "guilty": [str(self.guilty[0]), str(self.guilty[1])]}
            return out
        out: dict = {"foldable": True}
        if self.assignment is not None:
            out["assignment"] = {str(p): mv.value for p, mv in sorted(self.assignment.items())}
        out["sequence"] = [op_to_dict(op) for op in self.sequence or ()]
        return out


def op_to_dict(op: ReductionOp) -> dict:
    if isinstance(op, Crimp):
        return {"op": "crimp", "left": str(op.left), "right": str(op.right)}
    return {"op": "end_fold", "crease": str(op.crease), "side": op.side}


def _require_assigned(pattern: CreasePattern1D):
    if not pattern.is_fully_assigned:
        raise UnassignedCreaseError("pattern has unassigned creases")


def first_guilty_interval(pattern: CreasePattern1D) -> Interval | None:
    for iv in suspicious_intervals(pattern):
        if not is_innocent(pattern, iv):
            return iv
    return None


def decide_assigned(pattern: CreasePattern1D) -> FoldVerdict:
    """Foldable iff every suspicious interval is innocent; with witness either way."""
    _require_assigned(pattern)
    guilty = first_guilty_interval(pattern)
    if guilty is not None:
        return FoldVerdict(False, guilty=interval_positions(pattern, guilty))
    return FoldVerdict(True, sequence=tuple(synthesize_sequence(pattern)))


def find_reducible_segment(pattern: CreasePattern1D) -> ReductionOp:
    """Locate a crimp or end fold that must exist when no interval is guilty.

    Recipe: take the leftmost shortest segment, extend it to the maximal run
    of equal-length segments; if the run touches a paper end the incident end
    segment folds, otherwise the run holds an adjacent mountain/valley pair
    whose segment crimps.
    """
    _require_assigned(pattern)
    n = pattern.n
    if n == 0:
        raise ValueError("pattern has no creases")
    verts = pattern.vertices
    seg_len = [verts[i + 1] - verts[i] for i in range(n + 1)]
    shortest = min(seg_len)
    k = seg_len.index(shortest)  # leftmost shortest segment
    lo = k
    while lo > 0 and seg_len[lo - 1] == shortest:
        lo -= 1
    hi = k
    while hi < n and seg_len[hi + 1] == shortest:
        hi += 1
    # run spans segments lo..hi, i.e. vertices lo..hi+1
    if lo == 0:
        return EndFold(verts[1], "left")
    if hi == n:
        return EndFold(verts[n], "right")
    for v_idx in range(lo, hi + 1):  # crease pairs (v_idx, v_idx+1) inside the run
        a = pattern.creases[v_idx - 1].mv
        b = pattern.creases[v_idx].mv
        if {a, b} == {M, V}:
            return Crimp(verts[v_idx], verts[v_idx + 1])
    raise CharacterizationViolationError(
        f"equal-length run [{verts[lo]}, {verts[hi + 1]}] has no mountain/valley pair"
    )


def apply_reduction(pattern: CreasePattern1D, op: ReductionOp) -> CreasePattern1D:
    """Fold the operation and glue the overlap into a smaller pattern.

    A crimp merges its three segments into one, removing both creases; the
    merged extent is the union of the three segment images under the two
    folds.  An end fold deletes the end segment and its crease.  The result
    is re-anchored at coordinate 0.
    """
    verts = pattern.vertices
    if isinstance(op, EndFold):
        idx = pattern.crease_index_at(op.crease)
        if idx is None:
            raise InvalidReductionError(f"no crease at {op.crease}")
        if op.side == "left":
            if idx != 0:
                raise InvalidReductionError("left end fold must use the first crease")
            flap = verts[2] - verts[1]
            if verts[1] - verts[0] > flap:
                raise InvalidReductionError("end segment longer than its flap")
            shift = op.crease
            creases = tuple(Crease(c.position - shift, c.mv) for c in pattern.creases[1:])
            return CreasePattern1D(pattern.length - shift, creases)
        if op.side == "right":
            if idx != pattern.n - 1:
                raise InvalidReductionError("right end fold must use the last crease")
            flap = verts[-2] - verts[-3]
            if verts[-1] - verts[-2] > flap:
                raise InvalidReductionError("end segment longer than its flap")
            return CreasePattern1D(op.crease, pattern.creases[:-1])
        raise InvalidReductionError(f"unknown side {op.side!r}")

    ia = pattern.crease_index_at(op.left)
    ib = pattern.crease_index_at(op.right)
    if ia is None or ib is None:
        raise InvalidReductionError("crimp positions are not creases")
    if ib != ia + 1:
        raise InvalidReductionError("crimp creases must be adjacent")
    a, b = pattern.creases[ia], pattern.creases[ib]
    if {a.mv, b.mv} != {M, V}:
        raise InvalidReductionError("crimp needs one mountain and one valley")
    mid = b.position - a.position
    left_flap = verts[ia + 1] - verts[ia]
    right_flap = verts[ib + 2] - verts[ib + 1]
    if mid > left_flap or mid > right_flap:
        raise InvalidReductionError("crimped segment longer than a flap")
    shrink = 2 * mid
    creases = []
    for i, c in enumerate(pattern.creases):
        if i in (ia, ib):
            continue
        pos = c.position if i < ia else c.position - shrink
        creases.append(Crease(pos, c.mv))
    return CreasePattern1D(pattern.length - shrink, tuple(creases))


def synthesize_sequence(pattern: CreasePattern1D) -> list[ReductionOp]:
    """Crimp/end-fold sequence consuming every crease, or NotFoldableError.

    Each returned operation refers to positions in the pattern produced by
    replaying the operations before it.
    """
    _require_assigned(pattern)
    guilty = first_guilty_interval(pattern)
    if guilty is not None:
        raise NotFoldableError(interval_positions(pattern, guilty))
    ops: list[ReductionOp] = []
    cur = pattern
    while cur.n:
        op = find_reducible_segment(cur)
        ops.append(op)
        cur = apply_reduction(cur, op)
    return ops
