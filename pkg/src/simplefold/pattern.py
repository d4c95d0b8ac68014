"""1D crease patterns on exact rational coordinates.

A pattern is the segment [0, length] together with creases at interior
points, each labelled mountain (M), valley (V), or unassigned (U).  All
coordinates are fractions.Fraction values; floats are rejected so that
strict/non-strict boundary comparisons stay exact.

The module also provides the folded-image map (first segment stationary,
direction alternating at every crease) and the machinery built on it:
which intervals have both flap far-endpoints landing strictly outside
their own folded image, and whether such an interval has balanced
mountain/valley counts.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Iterable


class UnassignedCreaseError(ValueError):
    """An operation that requires fully assigned creases met a U crease."""


class Assignment(Enum):
    MOUNTAIN = "M"
    VALLEY = "V"
    UNASSIGNED = "U"

    @property
    def opposite(self) -> "Assignment":
        if self is Assignment.MOUNTAIN:
            return Assignment.VALLEY
        if self is Assignment.VALLEY:
            return Assignment.MOUNTAIN
        return self


M = Assignment.MOUNTAIN
V = Assignment.VALLEY
U = Assignment.UNASSIGNED


def rational(value) -> Fraction:
    """Convert an int, Fraction, or exact-number string ("3", "1/2", "0.25").

    Floats are rejected: every comparison in this package must be exact.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not coordinates")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"expected an exact number, got {type(value).__name__}")


@dataclass(frozen=True)
class Crease:
    position: Fraction
    mv: Assignment


@dataclass(frozen=True)
class CreasePattern1D:
    length: Fraction
    creases: tuple[Crease, ...] = ()

    def __post_init__(self):
        if self.length <= 0:
            raise ValueError("paper length must be positive")
        prev = Fraction(0)
        for c in self.creases:
            if not 0 < c.position < self.length:
                raise ValueError(f"crease at {c.position} outside the open paper (0, {self.length})")
            if c.position == prev:
                raise ValueError(f"coincident creases at {c.position}")
            if c.position < prev:
                raise ValueError("creases must be sorted by position")
            prev = c.position

    # -- basic views ------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.creases)

    @property
    def positions(self) -> tuple[Fraction, ...]:
        return tuple(c.position for c in self.creases)

    @property
    def vertices(self) -> tuple[Fraction, ...]:
        """Paper ends and creases: vertex 0 is the left end, vertex n+1 the right end."""
        return (Fraction(0),) + self.positions + (self.length,)

    @property
    def is_fully_assigned(self) -> bool:
        return all(c.mv is not U for c in self.creases)

    def unassigned_indices(self) -> tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.creases) if c.mv is U)

    def crease_index_at(self, position: Fraction) -> int | None:
        i = bisect_left(self.positions, position)
        if i < self.n and self.creases[i].position == position:
            return i
        return None

    def with_assignment(self, mapping: dict[int, Assignment]) -> "CreasePattern1D":
        """Complete unassigned creases; assigned creases may never be overwritten."""
        out = []
        for i, c in enumerate(self.creases):
            if i in mapping:
                if c.mv is not U:
                    raise ValueError(f"crease {i} already assigned {c.mv.value}")
                out.append(Crease(c.position, mapping[i]))
            else:
                out.append(c)
        return CreasePattern1D(self.length, tuple(out))

    def mirrored(self) -> "CreasePattern1D":
        """Reflect the paper end to end (position -> length - position)."""
        cs = tuple(Crease(self.length - c.position, c.mv) for c in reversed(self.creases))
        return CreasePattern1D(self.length, cs)


def make_pattern(length, creases: Iterable = ()) -> CreasePattern1D:
    """Build a pattern from exact-number values and (position, mv) pairs."""
    out = []
    for pos, mv in creases:
        if isinstance(mv, str):
            mv = Assignment(mv)
        out.append(Crease(rational(pos), mv))
    out.sort(key=lambda c: c.position)
    return CreasePattern1D(rational(length), tuple(out))


# -- the folded-image map f ------------------------------------------------


@lru_cache(maxsize=None)
def segment_maps(pattern: CreasePattern1D) -> tuple[tuple[Fraction, int], ...]:
    """Per-segment affine map (offset, direction) with image(x) = offset + direction*x.

    The first segment is stationary and the direction flips at every crease;
    offsets are chosen so the map is continuous.  Assignments are ignored.
    """
    maps = [(Fraction(0), 1)]
    for c in pattern.creases:
        off, d = maps[-1]
        y = off + d * c.position
        nd = -d
        maps.append((y - nd * c.position, nd))
    return tuple(maps)


def folded_image(pattern: CreasePattern1D, x) -> Fraction:
    """Horizontal position of paper point x once every crease is folded."""
    x = rational(x)
    if not 0 <= x <= pattern.length:
        raise ValueError(f"point {x} outside the paper [0, {pattern.length}]")
    k = bisect_left(pattern.positions, x)
    off, d = segment_maps(pattern)[k]
    return off + d * x


@lru_cache(maxsize=None)
def vertex_images(pattern: CreasePattern1D) -> tuple[Fraction, ...]:
    maps = segment_maps(pattern)
    verts = pattern.vertices
    out = [Fraction(0)]
    for i in range(1, len(verts)):
        off, d = maps[i - 1]  # vertex i is the right end of segment i-1
        out.append(off + d * verts[i])
    return tuple(out)


# -- intervals ---------------------------------------------------------------


@dataclass(frozen=True)
class Interval:
    """Pair of vertex indices with left < right."""

    left: int
    right: int


def is_interior(pattern: CreasePattern1D, iv: Interval) -> bool:
    return 1 <= iv.left and iv.right <= pattern.n


def interval_positions(pattern: CreasePattern1D, iv: Interval) -> tuple[Fraction, Fraction]:
    verts = pattern.vertices
    return verts[iv.left], verts[iv.right]


def interval_sort_key(pattern: CreasePattern1D, iv: Interval):
    """Canonical "smaller" order: shorter paper width first, then leftmost."""
    lo, hi = interval_positions(pattern, iv)
    return (hi - lo, lo)


def suspicious_intervals(pattern: CreasePattern1D, counter=None) -> list[Interval]:
    """All interior intervals whose flaps' far endpoints both map strictly
    outside the closed folded image of the interval.

    Depends only on crease positions, never on assignments.  The result is
    sorted by (width, leftmost), the canonical processing order.
    """
    fv = vertex_images(pattern)
    n = pattern.n
    out: list[Interval] = []
    for i in range(1, n + 1):
        lo = hi = fv[i]
        for j in range(i + 1, n + 1):
            if counter is not None:
                counter.add(1)
            lo = min(lo, fv[j])
            hi = max(hi, fv[j])
            far_l = fv[i - 1]
            far_r = fv[j + 1]
            if (far_l < lo or far_l > hi) and (far_r < lo or far_r > hi):
                out.append(Interval(i, j))
    out.sort(key=lambda iv: interval_sort_key(pattern, iv))
    return out


def crease_counts(pattern: CreasePattern1D, iv: Interval) -> tuple[int, int, int]:
    """(mountains, valleys, unassigned) over the closed interval, endpoints included."""
    if not is_interior(pattern, iv):
        raise ValueError("interval endpoints must be creases, not paper ends")
    ms = vs = us = 0
    for k in range(iv.left - 1, iv.right):  # vertex i <-> crease index i-1
        mv = pattern.creases[k].mv
        if mv is M:
            ms += 1
        elif mv is V:
            vs += 1
        else:
            us += 1
    return ms, vs, us


def is_innocent(pattern: CreasePattern1D, iv: Interval) -> bool:
    """Mountain and valley counts over the closed interval differ by at most 1.

    Requires the interval to be fully assigned.
    """
    ms, vs, us = crease_counts(pattern, iv)
    if us:
        raise UnassignedCreaseError(f"interval contains {us} unassigned crease(s)")
    return abs(ms - vs) <= 1


# -- JSON --------------------------------------------------------------------


def pattern_to_dict(pattern: CreasePattern1D) -> dict:
    return {
        "type": "1d",
        "length": str(pattern.length),
        "creases": [{"pos": str(c.position), "mv": c.mv.value} for c in pattern.creases],
    }


def pattern_from_dict(obj: dict) -> CreasePattern1D:
    if obj.get("type") != "1d":
        raise ValueError("expected a pattern object with type '1d'")
    return make_pattern(obj["length"], [(c["pos"], c["mv"]) for c in obj.get("creases", [])])


class OpCounter:
    """Tiny basic-operation counter used by complexity sanity tests."""

    def __init__(self):
        self.total = 0

    def add(self, k: int = 1):
        self.total += k
