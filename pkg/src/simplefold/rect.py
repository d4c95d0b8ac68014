"""Orthogonal crease patterns on rectangular paper, one-layer decision.

One-layer simple folds cannot fold two crossing creases, so a rectangle
with both vertical and horizontal creases is never flat-foldable in that
model.  With creases in a single direction the rectangle behaves exactly
like a 1D pattern, provided every crease segment spans the full rectangle;
a partial segment can never be completed by a one-layer fold and makes the
pattern unfoldable as well (reported distinctly).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .characterize import FoldVerdict
from .mixed import decide_mixed
from .pattern import Assignment, CreasePattern1D, make_pattern, rational

VERTICAL = "v"
HORIZONTAL = "h"


@dataclass(frozen=True)
class RectCrease:
    axis: str  # "v": line x=coord, spans y in [lo, hi]; "h": line y=coord
    coord: Fraction
    lo: Fraction
    hi: Fraction
    mv: Assignment


@dataclass(frozen=True)
class RectPattern:
    width: Fraction
    height: Fraction
    creases: tuple[RectCrease, ...] = ()

    def __post_init__(self):
        if self.width <= 0 or self.height <= 0:
            raise ValueError("rectangle sides must be positive")
        for c in self.creases:
            if c.axis not in (VERTICAL, HORIZONTAL):
                raise ValueError(f"unknown axis {c.axis!r}")
            if c.lo >= c.hi:
                raise ValueError("zero-length crease segment")
            span = self.height if c.axis == VERTICAL else self.width
            run = self.width if c.axis == VERTICAL else self.height
            if not (0 < c.coord < run and 0 <= c.lo and c.hi <= span):
                raise ValueError("crease segment outside the rectangle")
        for a, b in zip(self.creases, self.creases[1:]):
            pass  # ordering not required; overlap checked below
        by_line: dict[tuple[str, Fraction], list[RectCrease]] = {}
        for c in self.creases:
            by_line.setdefault((c.axis, c.coord), []).append(c)
        for segs in by_line.values():
            segs = sorted(segs, key=lambda c: c.lo)
            for a, b in zip(segs, segs[1:]):
                if b.lo < a.hi:
                    raise ValueError(f"coincident crease segments on {a.axis}={a.coord}")


def make_rect(width, height, creases=()) -> RectPattern:
    out = []
    for axis, coord, lo, hi, mv in creases:
        if isinstance(mv, str):
            mv = Assignment(mv)
        out.append(RectCrease(axis, rational(coord), rational(lo), rational(hi), mv))
    return RectPattern(rational(width), rational(height), tuple(out))


def full_line(pattern: RectPattern, axis, coord, mv) -> RectCrease:
    span = pattern.height if axis == VERTICAL else pattern.width
    return RectCrease(axis, rational(coord), Fraction(0), span, mv if isinstance(mv, Assignment) else Assignment(mv))


@dataclass
class RectVerdict:
    foldable: bool
    reason: str | None = None  # "crossing-directions" | "partial-crease" | "guilty-interval"
    inner: FoldVerdict | None = None
    axis: str | None = None

    def to_dict(self) -> dict:
        out: dict = {"foldable": self.foldable}
        if self.reason:
            out["reason"] = self.reason
        if self.inner is not None:
            inner = self.inner.to_dict()
            inner.pop("foldable", None)
            out.update(inner)
        if self.axis:
            out["axis"] = self.axis
        return out


def project_to_1d(pattern: RectPattern, axis: str) -> CreasePattern1D:
    """Collapse full-span creases of one direction onto the matching side."""
    run = pattern.width if axis == VERTICAL else pattern.height
    return make_pattern(run, [(c.coord, c.mv) for c in pattern.creases])


def decide_rect_one_layer(pattern: RectPattern) -> RectVerdict:
    axes = {c.axis for c in pattern.creases}
    if not axes:
        return RectVerdict(True, inner=FoldVerdict(True, sequence=()))
    if len(axes) == 2:
        return RectVerdict(False, reason="crossing-directions")
    axis = axes.pop()
    span = pattern.height if axis == VERTICAL else pattern.width
    for c in pattern.creases:
        if c.lo != 0 or c.hi != span:
            return RectVerdict(False, reason="partial-crease", axis=axis)
    verdict = decide_mixed(project_to_1d(pattern, axis), "one")
    if not verdict.foldable:
        return RectVerdict(False, reason="guilty-interval", inner=verdict, axis=axis)
    return RectVerdict(True, inner=verdict, axis=axis)


# -- JSON ----------------------------------------------------------------


def rect_to_dict(pattern: RectPattern) -> dict:
    return {
        "type": "rect",
        "width": str(pattern.width),
        "height": str(pattern.height),
        "creases": [
            {
                "axis": c.axis,
                "coord": str(c.coord),
                "from": str(c.lo),
                "to": str(c.hi),
                "mv": c.mv.value,
            }
            for c in pattern.creases
        ],
    }


def rect_from_dict(obj: dict) -> RectPattern:
    if obj.get("type") != "rect":
        raise ValueError("expected a pattern object with type 'rect'")
    return make_rect(
        obj["width"],
        obj["height"],
        [
            (c["axis"], c["coord"], c["from"], c["to"], c["mv"])
            for c in obj.get("creases", [])
        ],
    )
