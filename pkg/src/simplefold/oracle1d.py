"""Exhaustive simple-fold search over 1D folded states.

Ground truth for the polynomial deciders.  A folded state is a list of
facets (maximal paper pieces between folded creases), each carrying the
affine map onto its image and a face-up/flipped direction, plus a total
layer order over every column where images overlap.  Successor moves are
the legal simple folds of the requested model:

* one-layer: exactly one layer is creased, the top or bottom facet at the
  fold line, dragging along whatever the folded joints connect on the
  moving side (dragged material moves rigidly, nothing else bends);
* some-layers: likewise for a top-k or bottom-k prefix of the facets
  crossing the fold line;
* all-layers: everything on the moving side, with the extra gluing rule
  that the resulting overlaps must keep every remaining crease foldable.

Creases fold in the sense their assignment demands: a flipped facet folds
its creases in the mirrored sense, and a moved block always lands beyond
the extreme of the stack it came from (peeling, never tucking).

Searches are depth-first with memoization on translation-canonical states
and an explicit node budget; running out of budget yields the verdict
"inconclusive", never a silent wrong answer.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .pattern import Assignment, CreasePattern1D, M, U, V

TOP = "top"
BOTTOM = "bottom"
LEFT = "left"
RIGHT = "right"

MODELS = ("one", "some", "all")


class SearchBudgetExceeded(Exception):
    pass


@dataclass(frozen=True)
class Facet:
    src_lo: Fraction
    src_hi: Fraction
    offset: Fraction
    direction: int  # +1 face-up, -1 flipped; image(t) = offset + direction*t

    def image_of(self, t: Fraction) -> Fraction:
        return self.offset + self.direction * t

    def source_of(self, x: Fraction) -> Fraction:
        return (x - self.offset) * self.direction

    @property
    def img_lo(self) -> Fraction:
        a, b = self.image_of(self.src_lo), self.image_of(self.src_hi)
        return a if a < b else b

    @property
    def img_hi(self) -> Fraction:
        a, b = self.image_of(self.src_lo), self.image_of(self.src_hi)
        return b if a < b else a

    def crosses(self, x: Fraction) -> bool:
        return self.img_lo < x < self.img_hi

    def reflected(self, x: Fraction) -> "Facet":
        return Facet(self.src_lo, self.src_hi, 2 * x - self.offset, -self.direction)


@dataclass(frozen=True)
class FoldedState1D:
    facets: tuple[Facet, ...]  # in paper order
    stacks: tuple[tuple[Fraction, Fraction, tuple[int, ...]], ...]  # (lo, hi, ids bottom->top)
    folded: frozenset[int]


@dataclass(frozen=True)
class FoldMove:
    axis: str  # 1D folds are vertical lines over the paper axis
    coord: Fraction
    side: str  # which half of the image moves
    kind: str  # "one" | "some" | "all"
    k: int | None
    landing: str  # extreme the block peels from and lands on

    def to_dict(self) -> dict:
        extent = self.kind if self.kind != "some" else str(self.k)
        return {
            "axis": self.axis,
            "coord": str(self.coord),
            "side": self.side,
            "extent": extent,
            "landing": self.landing,
        }


@dataclass
class SearchResult:
    status: str  # "foldable" | "unfoldable" | "inconclusive"
    trace: tuple[FoldMove, ...] | None
    nodes: int

    @property
    def foldable(self) -> bool | None:
        if self.status == "inconclusive":
            return None
        return self.status == "foldable"

    def to_dict(self) -> dict:
        out = {"status": self.status, "nodes": self.nodes}
        if self.trace is not None:
            out["trace"] = [m.to_dict() for m in self.trace]
        return out


def initial_state(pattern: CreasePattern1D) -> FoldedState1D:
    f = Facet(Fraction(0), pattern.length, Fraction(0), 1)
    return FoldedState1D((f,), ((Fraction(0), pattern.length, (0,)),), frozenset())


def canonical_key(state: FoldedState1D):
    base = min(f.img_lo for f in state.facets)
    facets = tuple((f.src_lo, f.src_hi, f.offset - base, f.direction) for f in state.facets)
    stacks = tuple((lo - base, hi - base, ids) for lo, hi, ids in state.stacks)
    return facets, stacks


def _stack_over(state: FoldedState1D, lo: Fraction, hi: Fraction) -> tuple[int, ...]:
    """Layer order of the first column positively overlapping (lo, hi).

    Any facet whose image covers all of [lo, hi] is listed in that column,
    because facet endpoints are column breakpoints.
    """
    for olo, ohi, ids in state.stacks:
        if max(olo, lo) < min(ohi, hi):
            return ids
    raise AssertionError(f"no column overlaps ({lo}, {hi})")


def _joints(state: FoldedState1D):
    """(id_a, id_b, image position, joined side) for every folded crease."""
    out = []
    for i in range(len(state.facets) - 1):
        a, b = state.facets[i], state.facets[i + 1]
        y = a.image_of(a.src_hi)
        side_a = LEFT if a.image_of(a.src_lo) < y else RIGHT
        side_b = LEFT if b.image_of(b.src_hi) < y else RIGHT
        assert b.image_of(b.src_lo) == y and side_a == side_b, "inconsistent joint"
        out.append((i, i + 1, y, side_a))
    return out


def check_non_penetration(state: FoldedState1D) -> None:
    """A facet strictly crossing a joint and stacked strictly between the two
    joined facets would pass through the closed end of that fold."""
    for ia, ib, y, side in _joints(state):
        eps_mid = None
        for lo, hi, ids in state.stacks:
            if (side == RIGHT and lo == y) or (side == LEFT and hi == y):
                eps_mid = (lo + hi) / 2
                stack = ids
                break
        assert eps_mid is not None, "joint has no adjacent column"
        pa, pb = stack.index(ia), stack.index(ib)
        lo_i, hi_i = min(pa, pb), max(pa, pb)
        for cid in stack[lo_i + 1 : hi_i]:
            if state.facets[cid].crosses(y):
                raise RuntimeError(
                    f"non-penetration violated at joint {y} between facets {ia},{ib}: facet {cid} crosses"
                )


def _sense(landing: str, direction: int) -> Assignment:
    """Crease sense when a facet is peeled toward `landing`: a face-up facet
    folding over the top closes a valley; flipped facets mirror."""
    return V if (landing == TOP) == (direction == 1) else M


def _sense_ok(mv: Assignment, sense: Assignment) -> bool:
    return mv is U or mv is sense


def _split_info(
    state: FoldedState1D, pattern: CreasePattern1D, x: Fraction, landing: str, split_ids
) -> dict[int, int] | None:
    """Crease index folded on each split facet, or None when some facet is
    not creased at the line or folds against its assignment."""
    out: dict[int, int] = {}
    for fid in split_ids:
        f = state.facets[fid]
        t = f.source_of(x)
        ci = pattern.crease_index_at(t)
        if ci is None or ci in state.folded:
            return None
        if not _sense_ok(pattern.creases[ci].mv, _sense(landing, f.direction)):
            return None
        out[fid] = ci
    return out


def _side_of(value: Fraction, x: Fraction, side: str) -> bool:
    return value > x if side == RIGHT else value < x


def _drag_closure(
    state: FoldedState1D, x: Fraction, side: str, split_ids: set[int], crossing: set[int]
) -> set[int] | None:
    """Whole facets on the moving side pulled along through folded joints.

    Returns None when the closure would tear: it demands the moving-side end
    of a facet that crosses the line without being creased there.
    """
    # piece keys: ("half", fid) for split facets, ("whole", fid) for facets
    # nonstrictly on the moving side; crossing-but-not-split facets poison.
    edges: dict[tuple, list[tuple]] = {}

    def piece_at(fid: int):
        f = state.facets[fid]
        if fid in split_ids:
            return "half", fid
        if fid in crossing:
            return "blocked", fid
        if (side == RIGHT and f.img_lo >= x) or (side == LEFT and f.img_hi <= x):
            return "whole", fid
        raise AssertionError("stationary-side facet incident to a moving-side joint")

    for ia, ib, y, jside in _joints(state):
        if not (_side_of(y, x, side) or (y == x and jside == side)):
            continue
        pa = piece_at(ia)
        pb = piece_at(ib)
        edges.setdefault(pa, []).append(pb)
        edges.setdefault(pb, []).append(pa)

    moved: set[int] = set()
    frontier = [("half", fid) for fid in split_ids]
    seen = set(frontier)
    while frontier:
        node = frontier.pop()
        for nxt in edges.get(node, ()):
            if nxt in seen:
                continue
            seen.add(nxt)
            kind, fid = nxt
            if kind == "blocked":
                return None
            if kind == "whole":
                moved.add(fid)
            frontier.append(nxt)
    return moved


def _extraction_ok(
    state: FoldedState1D, x: Fraction, side: str, landing: str, moving_part: set[int]
) -> bool:
    """The moved pieces must form the extreme block of every column they
    occupy on the moving side, else peeling them out sweeps through paper."""
    for lo, hi, ids in state.stacks:
        if side == RIGHT and hi <= x:
            continue
        if side == LEFT and lo >= x:
            continue
        moved_layers = []
        stationary_layers = []
        for layer, fid in enumerate(ids):
            f = state.facets[fid]
            # the part of fid inside this column moves iff fid's moving-side
            # part moves; columns beyond the line only hold moving-side parts
            in_part = fid in moving_part
            if lo < x < hi:  # straddling column: only crossing facets present
                in_part = fid in moving_part and state.facets[fid].crosses(x)
            if in_part:
                moved_layers.append(layer)
            else:
                stationary_layers.append(layer)
        if not moved_layers or not stationary_layers:
            continue
        if landing == TOP and max(stationary_layers) > min(moved_layers):
            return False
        if landing == BOTTOM and min(stationary_layers) < max(moved_layers):
            return False
    return True


def _build_successor(
    state: FoldedState1D,
    pattern: CreasePattern1D,
    x: Fraction,
    side: str,
    landing: str,
    split: dict[int, int],
    moved_wholes: set[int],
) -> FoldedState1D:
    new_facets: list[Facet] = []
    old_of_new: list[int] = []
    moved_new: list[bool] = []
    for fid, f in enumerate(state.facets):
        if fid in split:
            t = f.source_of(x)
            lo_half = Facet(f.src_lo, t, f.offset, f.direction)
            hi_half = Facet(t, f.src_hi, f.offset, f.direction)
            if side == RIGHT:
                mov = hi_half if f.direction == 1 else lo_half
            else:
                mov = lo_half if f.direction == 1 else hi_half
            for piece in (lo_half, hi_half):
                new_facets.append(piece.reflected(x) if piece is mov else piece)
                old_of_new.append(fid)
                moved_new.append(piece is mov)
        elif fid in moved_wholes:
            new_facets.append(f.reflected(x))
            old_of_new.append(fid)
            moved_new.append(True)
        else:
            new_facets.append(f)
            old_of_new.append(fid)
            moved_new.append(False)

    order = sorted(range(len(new_facets)), key=lambda i: new_facets[i].src_lo)
    new_facets = [new_facets[i] for i in order]
    old_of_new = [old_of_new[i] for i in order]
    moved_new = [moved_new[i] for i in order]

    points = sorted({p for f in new_facets for p in (f.img_lo, f.img_hi)})
    stacks = []
    for lo, hi in zip(points, points[1:]):
        members = [i for i, f in enumerate(new_facets) if f.img_lo <= lo and f.img_hi >= hi]
        if not members:
            continue
        stationary = [i for i in members if not moved_new[i]]
        moved = [i for i in members if moved_new[i]]
        if stationary:
            old_stack = _stack_over(state, lo, hi)
            stationary.sort(key=lambda i: old_stack.index(old_of_new[i]))
        if moved:
            old_stack = _stack_over(state, 2 * x - hi, 2 * x - lo)
            moved.sort(key=lambda i: old_stack.index(old_of_new[i]), reverse=True)
        stack = stationary + moved if landing == TOP else moved + stationary
        stacks.append((lo, hi, tuple(stack)))

    succ = FoldedState1D(
        tuple(new_facets), tuple(stacks), state.folded | frozenset(split.values())
    )
    check_non_penetration(succ)
    return succ


def _glued_creases_ok(state: FoldedState1D, pattern: CreasePattern1D) -> bool:
    """All-layers gluing rule: wherever an unfolded crease now lies, every
    facet strictly covering that position must carry an unfolded crease of
    its own there, and one common fold direction must suit them all."""
    images: dict[Fraction, None] = {}
    for fid, f in enumerate(state.facets):
        for ci, c in enumerate(pattern.creases):
            if ci not in state.folded and f.src_lo < c.position < f.src_hi:
                images[f.image_of(c.position)] = None
    for y in images:
        here: list[tuple[int, Assignment]] = []
        for f in state.facets:
            if not f.crosses(y):
                continue
            ci = pattern.crease_index_at(f.source_of(y))
            if ci is None or ci in state.folded:
                return False  # a crease glued over a plain point can never fold
            here.append((f.direction, pattern.creases[ci].mv))
        for landing in (TOP, BOTTOM):
            if all(_sense_ok(mv, _sense(landing, d)) for d, mv in here):
                break
        else:
            return False
    return True


def enumerate_successors_1d(
    state: FoldedState1D, pattern: CreasePattern1D, model: str
) -> list[tuple[FoldMove, FoldedState1D]]:
    if model not in MODELS:
        raise ValueError(f"unknown model {model!r}")
    unfolded = [i for i in range(pattern.n) if i not in state.folded]
    if not unfolded:
        return []
    lines: set[Fraction] = set()
    for f in state.facets:
        for ci in unfolded:
            p = pattern.creases[ci].position
            if f.src_lo < p < f.src_hi:
                lines.add(f.image_of(p))
    out: list[tuple[FoldMove, FoldedState1D]] = []
    img_lo = min(f.img_lo for f in state.facets)
    img_hi = max(f.img_hi for f in state.facets)
    for x in sorted(lines):
        crossing = [i for i, f in enumerate(state.facets) if f.crosses(x)]
        crossing_set = set(crossing)
        stack = [i for i in _stack_at_line(state, x) if i in crossing_set]
        if model == "all":
            sides = [LEFT if x - img_lo <= img_hi - x else RIGHT]
        else:
            sides = [LEFT, RIGHT]
        for side in sides:
            for landing in (TOP, BOTTOM):
                if model == "one":
                    # exactly one layer is creased: the extreme crossing facet
                    fid = stack[-1] if landing == TOP else stack[0]
                    split = _split_info(state, pattern, x, landing, [fid])
                    if split is None:
                        continue
                    closure = _drag_closure(state, x, side, {fid}, crossing_set)
                    if closure is None:
                        continue
                    if not _extraction_ok(state, x, side, landing, {fid} | closure):
                        continue
                    succ = _build_successor(state, pattern, x, side, landing, split, closure)
                    move = FoldMove("v", x, side, "one", None, landing)
                    out.append((move, succ))
                elif model == "some":
                    for k in range(1, len(crossing) + 1):
                        chosen = set(stack[-k:]) if landing == TOP else set(stack[:k])
                        split = _split_info(state, pattern, x, landing, chosen)
                        if split is None:
                            continue
                        closure = _drag_closure(state, x, side, chosen, crossing_set)
                        if closure is None:
                            continue
                        if not _extraction_ok(state, x, side, landing, chosen | closure):
                            continue
                        succ = _build_successor(state, pattern, x, side, landing, split, closure)
                        move = FoldMove("v", x, side, "some", k, landing)
                        out.append((move, succ))
                else:  # all
                    split = _split_info(state, pattern, x, landing, crossing)
                    if split is None:
                        continue
                    wholes = {
                        i
                        for i, f in enumerate(state.facets)
                        if i not in crossing_set
                        and (f.img_lo >= x if side == RIGHT else f.img_hi <= x)
                    }
                    if not _extraction_ok(state, x, side, landing, crossing_set | wholes):
                        continue
                    succ = _build_successor(state, pattern, x, side, landing, split, wholes)
                    if not _glued_creases_ok(succ, pattern):
                        continue
                    move = FoldMove("v", x, side, "all", None, landing)
                    out.append((move, succ))
    return out


def _stack_at_line(state: FoldedState1D, x: Fraction) -> tuple[int, ...]:
    """Layer order in a column adjacent to x (crossing facets appear in both
    adjacent columns in the same relative order)."""
    for lo, hi, ids in state.stacks:
        if lo <= x < hi:
            return ids
    # x at the right edge of the image: use the last column
    return state.stacks[-1][2]


def search_1d(pattern: CreasePattern1D, model: str, max_nodes: int = 200_000) -> SearchResult:
    """Depth-first fold search; foldable iff some move sequence folds every
    crease.  Memoized on canonical states; budget overruns are reported as
    "inconclusive"."""
    if model not in MODELS:
        raise ValueError(f"unknown model {model!r}")
    total = pattern.n
    memo: dict = {}
    nodes = 0

    def dfs(state: FoldedState1D):
        nonlocal nodes
        if len(state.folded) == total:
            return ()
        key = canonical_key(state)
        if key in memo:
            return memo[key]
        nodes += 1
        if nodes > max_nodes:
            raise SearchBudgetExceeded
        best = None
        for move, succ in enumerate_successors_1d(state, pattern, model):
            sub = dfs(succ)
            if sub is not None:
                best = (move,) + sub
                break
        memo[key] = best
        return best

    try:
        trace = dfs(initial_state(pattern))
    except SearchBudgetExceeded:
        return SearchResult("inconclusive", None, nodes)
    if trace is None:
        return SearchResult("unfoldable", None, nodes)
    return SearchResult("foldable", trace, nodes)
