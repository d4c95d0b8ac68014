"""All-layers simple folding of mixed 1D patterns.

In the all-layers model layers glue together wherever they touch, so a fold
at a crease is only usable when every crease inside the overlap window
lands on a compatibly assigned crease or on a paper end; the fold then
discards the shorter side, transferring assignments onto creases that
received an assigned partner.

A plain greedy over valid folds can paint itself into a corner on mixed
patterns, so the decision procedure folds, at every step, the crease
nearest a paper end among those whose crease *locations* are mirror
symmetric within the window (assignments ignored).  If that crease is not
a valid fold, nothing is.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .pattern import Assignment, Crease, CreasePattern1D, M, U, V


class InvalidFoldError(ValueError):
    def __init__(self, report: "ValidityReport"):
        super().__init__(report.reason or "invalid all-layers fold")
        self.report = report


@dataclass(frozen=True)
class ValidityReport:
    crease_index: int
    valid: bool
    reason: str | None = None
    conflict_at: Fraction | None = None  # paper position of the offending point


@dataclass
class AllLayersVerdict:
    foldable: bool
    folds: tuple[Fraction, ...] | None = None  # positions, each in its reduced frame
    original_positions: tuple[Fraction, ...] | None = None
    blocking: ValidityReport | None = None

    def to_dict(self) -> dict:
        if not self.foldable:
            out: dict = {"foldable": False}
            if self.blocking is not None:
                out["reason"] = self.blocking.reason
            return out
        return {
            "foldable": True,
            "sequence": [str(p) for p in self.folds],
            "coordinates": "reduced",
            "original_positions": [str(p) for p in self.original_positions],
        }


def _window(pattern: CreasePattern1D, idx: int) -> Fraction:
    p = pattern.creases[idx].position
    return min(p, pattern.length - p)


def is_valid_all_layers_fold(pattern: CreasePattern1D, idx: int) -> ValidityReport:
    """Check the mirror condition around crease idx over the overlap window.

    Every crease strictly within the window must reflect onto a crease whose
    assignment is opposite or unassigned; creases exactly on the window
    boundary meet a paper end, which is always compatible.
    """
    p = pattern.creases[idx].position
    d = _window(pattern, idx)
    for j, c in enumerate(pattern.creases):
        if j == idx or not abs(c.position - p) < d:
            continue
        mirror = 2 * p - c.position
        k = pattern.crease_index_at(mirror)
        if k is None:
            return ValidityReport(
                idx, False, f"crease at {c.position} reflects onto non-crease point {mirror}", mirror
            )
        other = pattern.creases[k].mv
        if c.mv is not U and c.mv is other:
            return ValidityReport(
                idx,
                False,
                f"creases at {c.position} and {mirror} are both {other.value}",
                mirror,
            )
    return ValidityReport(idx, True)


def plausible_creases(pattern: CreasePattern1D) -> list[tuple[int, Fraction]]:
    """Creases whose locations (assignments ignored) are symmetric within the
    window reaching the nearest paper end; returned with that distance.
    An empty result means the pattern is not foldable in this model.
    """
    out = []
    positions = set(pattern.positions)
    for idx, c in enumerate(pattern.creases):
        p = c.position
        d = _window(pattern, idx)
        ok = True
        for q in pattern.positions:
            if q != p and abs(q - p) < d and (2 * p - q) not in positions:
                ok = False
                break
        if ok:
            out.append((idx, d))
    return out


def reduce_at(pattern: CreasePattern1D, idx: int) -> CreasePattern1D:
    """Fold at crease idx and discard the shorter side (ties discard the left).

    Surviving creases keep their positions (re-anchored at 0).  A surviving
    unassigned crease that received an assigned partner takes the opposite of
    the arriving assignment; a paper end landing exactly on a crease leaves
    it unchanged.
    """
    report = is_valid_all_layers_fold(pattern, idx)
    if not report.valid:
        raise InvalidFoldError(report)
    p = pattern.creases[idx].position
    d = _window(pattern, idx)
    keep_right = p <= pattern.length - p  # shorter (or tied) left side is discarded
    arriving: dict[Fraction, Assignment] = {}
    for j, c in enumerate(pattern.creases):
        if j == idx or not abs(c.position - p) < d:
            continue
        on_kept_side = (c.position > p) == keep_right
        if not on_kept_side:
            arriving[2 * p - c.position] = c.mv
    out = []
    for j, c in enumerate(pattern.creases):
        if j == idx:
            continue
        on_kept_side = (c.position > p) == keep_right
        if not on_kept_side:
            continue
        mv = c.mv
        got = arriving.get(c.position)
        if mv is U and got not in (None, U):
            mv = got.opposite  # the arriving crease is flipped by the fold
        pos = c.position - p if keep_right else c.position
        out.append(Crease(pos, mv))
    new_len = pattern.length - p if keep_right else p
    return CreasePattern1D(new_len, tuple(out))


def decide_all_layers_mixed(pattern: CreasePattern1D) -> AllLayersVerdict:
    """Greedy decision: repeatedly fold the plausible crease nearest an end.

    Among equally near plausible creases the leftmost is folded.  If the
    chosen crease is not a valid fold, or no crease is plausible, the pattern
    cannot be folded with all-layers simple folds.
    """
    cur = pattern
    origins = list(pattern.positions)
    folds: list[Fraction] = []
    echoed: list[Fraction] = []
    while cur.n:
        plausible = plausible_creases(cur)
        if not plausible:
            return AllLayersVerdict(False, blocking=None)
        idx, _d = min(plausible, key=lambda t: (t[1], cur.creases[t[0]].position))
        report = is_valid_all_layers_fold(cur, idx)
        if not report.valid:
            return AllLayersVerdict(False, blocking=report)
        folds.append(cur.creases[idx].position)
        echoed.append(origins[idx])
        p = cur.creases[idx].position
        keep_right = p <= cur.length - p
        d = min(p, cur.length - p)
        survivors = [
            origins[j]
            for j, c in enumerate(cur.creases)
            if j != idx and ((c.position > p) == keep_right)
        ]
        origins = survivors
        cur = reduce_at(cur, idx)
        assert len(origins) == cur.n
    return AllLayersVerdict(True, folds=tuple(folds), original_positions=tuple(echoed))
