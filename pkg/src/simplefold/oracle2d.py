"""Exhaustive simple-fold search for rectangular paper, full-line folds.

The 2D analogue of the 1D search: facets are axis-aligned paper rectangles
carrying per-axis affine image maps, states keep a layer order over every
cell of the image grid, and folds run along entire vertical or horizontal
lines through the image of some unfolded crease material.

A moved facet must be creased along its whole crossing segment by unfolded
crease segments whose assignments all match the facet's fold sense (a
flipped facet folds mirrored senses).  The moved set is any top- or
bottom-closed subset of the facets crossing the line (so the extraction is
well defined at every point of the line simultaneously), together with
everything the folded joints drag along on the moving side.  Blocks land
beyond the extreme of the destination stack, order reversed.

Crease segments fold piecewise: each facet folds only the part of a
segment it spans, and the state tracks the folded sub-intervals per
segment.  The search is depth-first, memoized, budgeted; exceeding the
budget gives "inconclusive".
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .pattern import Assignment, M, U, V
from .rect import HORIZONTAL, RectCrease, RectPattern, VERTICAL

TOP = "top"
BOTTOM = "bottom"

SIDES = {VERTICAL: ("left", "right"), HORIZONTAL: ("down", "up")}


class SearchBudgetExceeded(Exception):
    pass


@dataclass(frozen=True)
class RectFacet:
    x0: Fraction
    x1: Fraction
    y0: Fraction
    y1: Fraction
    ox: Fraction
    dx: int
    oy: Fraction
    dy: int

    def image_x(self, t: Fraction) -> Fraction:
        return self.ox + self.dx * t

    def image_y(self, t: Fraction) -> Fraction:
        return self.oy + self.dy * t

    def source_x(self, x: Fraction) -> Fraction:
        return (x - self.ox) * self.dx

    def source_y(self, y: Fraction) -> Fraction:
        return (y - self.oy) * self.dy

    @property
    def img_x(self) -> tuple[Fraction, Fraction]:
        a, b = self.image_x(self.x0), self.image_x(self.x1)
        return (a, b) if a < b else (b, a)

    @property
    def img_y(self) -> tuple[Fraction, Fraction]:
        a, b = self.image_y(self.y0), self.image_y(self.y1)
        return (a, b) if a < b else (b, a)

    @property
    def face_up(self) -> bool:
        return self.dx * self.dy == 1

    def img_span(self, axis: str) -> tuple[Fraction, Fraction]:
        return self.img_x if axis == VERTICAL else self.img_y

    def crosses(self, axis: str, coord: Fraction) -> bool:
        lo, hi = self.img_span(axis)
        return lo < coord < hi

    def reflected(self, axis: str, coord: Fraction) -> "RectFacet":
        if axis == VERTICAL:
            return RectFacet(self.x0, self.x1, self.y0, self.y1, 2 * coord - self.ox, -self.dx, self.oy, self.dy)
        return RectFacet(self.x0, self.x1, self.y0, self.y1, self.ox, self.dx, 2 * coord - self.oy, -self.dy)


Cell = tuple[Fraction, Fraction, Fraction, Fraction, tuple[int, ...]]  # xlo xhi ylo yhi stack
Cover = tuple[tuple[tuple[Fraction, Fraction], ...], ...]  # folded sub-intervals per crease


@dataclass(frozen=True)
class RectFoldedState:
    facets: tuple[RectFacet, ...]  # sorted by paper rectangle
    cells: tuple[Cell, ...]
    cover: Cover


@dataclass(frozen=True)
class RectMove:
    axis: str
    coord: Fraction
    side: str
    landing: str
    moved_crossing: int
    crossing: int
    extent: str  # "all" when every crossing facet moves, else the moved count

    def to_dict(self) -> dict:
        return {
            "axis": self.axis,
            "coord": str(self.coord),
            "side": self.side,
            "extent": self.extent,
            "landing": self.landing,
        }


@dataclass
class RectSearchResult:
    status: str
    trace: tuple[RectMove, ...] | None
    nodes: int

    @property
    def foldable(self) -> bool | None:
        return None if self.status == "inconclusive" else self.status == "foldable"

    def to_dict(self) -> dict:
        out = {"status": self.status, "nodes": self.nodes}
        if self.trace is not None:
            out["trace"] = [m.to_dict() for m in self.trace]
        return out


def initial_rect_state(pattern: RectPattern) -> RectFoldedState:
    f = RectFacet(Fraction(0), pattern.width, Fraction(0), pattern.height, Fraction(0), 1, Fraction(0), 1)
    cell = (Fraction(0), pattern.width, Fraction(0), pattern.height, (0,))
    return RectFoldedState((f,), (cell,), tuple(() for _ in pattern.creases))


def canonical_rect_key(state: RectFoldedState):
    bx = min(f.img_x[0] for f in state.facets)
    by = min(f.img_y[0] for f in state.facets)
    facets = tuple(
        (f.x0, f.x1, f.y0, f.y1, f.ox - bx, f.dx, f.oy - by, f.dy) for f in state.facets
    )
    cells = tuple((xl - bx, xh - bx, yl - by, yh - by, ids) for xl, xh, yl, yh, ids in state.cells)
    return facets, cells, state.cover


def _merge_intervals(parts):
    parts = sorted(parts)
    out = []
    for lo, hi in parts:
        if out and lo <= out[-1][1]:
            out[-1] = (out[-1][0], max(out[-1][1], hi))
        else:
            out.append((lo, hi))
    return tuple(out)


def _subtract(interval, blocks):
    """interval minus the union of blocks, as a list of intervals."""
    lo, hi = interval
    out = []
    cur = lo
    for blo, bhi in blocks:
        if bhi <= cur:
            continue
        if blo >= hi:
            break
        if blo > cur:
            out.append((cur, blo))
        cur = max(cur, bhi)
    if cur < hi:
        out.append((cur, hi))
    return out


def fully_folded(state: RectFoldedState, pattern: RectPattern) -> bool:
    for c, parts in zip(pattern.creases, state.cover):
        if _subtract((c.lo, c.hi), parts):
            return False
    return True


def _joints(state: RectFoldedState):
    """(ia, ib, axis of the fold line, image line coord, image span, joined side)
    for every shared paper edge; shared paper edges are always folded."""
    out = []
    for ia, ib in combinations(range(len(state.facets)), 2):
        a, b = state.facets[ia], state.facets[ib]
        # vertical shared edge
        for fa, fb in ((a, b), (b, a)):
            if fa.x1 == fb.x0:
                ylo, yhi = max(fa.y0, fb.y0), min(fa.y1, fb.y1)
                if ylo < yhi:
                    xa = fa.image_x(fa.x1)
                    assert xa == fb.image_x(fb.x0), "torn vertical joint"
                    sa = "left" if fa.image_x(fa.x0) < xa else "right"
                    sb = "left" if fb.image_x(fb.x1) < xa else "right"
                    assert sa == sb, "vertical joint does not double back"
                    span = (fa.image_y(ylo), fa.image_y(yhi))
                    span = (min(span), max(span))
                    assert span == tuple(sorted((fb.image_y(ylo), fb.image_y(yhi))))
                    out.append((ia, ib, VERTICAL, xa, span, sa))
            if fa.y1 == fb.y0:
                xlo, xhi = max(fa.x0, fb.x0), min(fa.x1, fb.x1)
                if xlo < xhi:
                    ya = fa.image_y(fa.y1)
                    assert ya == fb.image_y(fb.y0), "torn horizontal joint"
                    sa = "down" if fa.image_y(fa.y0) < ya else "up"
                    sb = "down" if fb.image_y(fb.y1) < ya else "up"
                    assert sa == sb, "horizontal joint does not double back"
                    span = (fa.image_x(xlo), fa.image_x(xhi))
                    span = (min(span), max(span))
                    assert span == tuple(sorted((fb.image_x(xlo), fb.image_x(xhi))))
                    out.append((ia, ib, HORIZONTAL, ya, span, sa))
    return out


def check_non_penetration(state: RectFoldedState) -> None:
    by_edge: dict[tuple, list[Cell]] = {}
    for cell in state.cells:
        xl, xh, yl, yh, _ids = cell
        by_edge.setdefault((VERTICAL, "right", xl), []).append(cell)
        by_edge.setdefault((VERTICAL, "left", xh), []).append(cell)
        by_edge.setdefault((HORIZONTAL, "up", yl), []).append(cell)
        by_edge.setdefault((HORIZONTAL, "down", yh), []).append(cell)
    for ia, ib, axis, coord, span, side in _joints(state):
        for xl, xh, yl, yh, ids in by_edge.get((axis, side, coord), ()):
            if axis == VERTICAL:
                overlap = max(yl, span[0]) < min(yh, span[1])
            else:
                overlap = max(xl, span[0]) < min(xh, span[1])
            if not overlap or ia not in ids or ib not in ids:
                continue
            pa, pb = ids.index(ia), ids.index(ib)
            for cid in ids[min(pa, pb) + 1 : max(pa, pb)]:
                if state.facets[cid].crosses(axis, coord):
                    raise RuntimeError(
                        f"non-penetration violated at {axis}={coord}: facet {cid} crosses between {ia},{ib}"
                    )


def _sense(landing: str, face_up: bool) -> Assignment:
    return V if (landing == TOP) == face_up else M


def _sense_ok(mv: Assignment, sense: Assignment) -> bool:
    return mv is U or mv is sense


def _stack_over(state: RectFoldedState, x0, x1, y0, y1) -> tuple[int, ...]:
    for xl, xh, yl, yh, ids in state.cells:
        if max(xl, x0) < min(xh, x1) and max(yl, y0) < min(yh, y1):
            return ids
    raise AssertionError("no cell overlaps the query box")


def _crease_lines(pattern: RectPattern) -> dict[tuple[str, Fraction], list[tuple[int, RectCrease]]]:
    index: dict[tuple[str, Fraction], list[tuple[int, RectCrease]]] = {}
    for ci, c in enumerate(pattern.creases):
        index.setdefault((c.axis, c.coord), []).append((ci, c))
    return index


def _split_info(state, pattern: RectPattern, axis, coord, landing, split_ids, crease_lines):
    """Per moved crossing facet: the crease pieces folded along its crossing,
    or None when a gap or an incompatible assignment makes the fold tear."""
    folds: dict[int, list[tuple[int, tuple[Fraction, Fraction]]]] = {}
    for fid in split_ids:
        f = state.facets[fid]
        sense = _sense(landing, f.face_up)
        if axis == VERTICAL:
            t = f.source_x(coord)
            lo, hi = f.y0, f.y1
        else:
            t = f.source_y(coord)
            lo, hi = f.x0, f.x1
        pieces = []
        for ci, c in crease_lines.get((axis, t), ()):
            plo, phi = max(c.lo, lo), min(c.hi, hi)
            if plo >= phi:
                continue
            for ulo, uhi in _subtract((plo, phi), state.cover[ci]):
                if not _sense_ok(c.mv, sense):
                    return None
                pieces.append((ci, (ulo, uhi)))
        remaining = [(lo, hi)]
        for _, (ulo, uhi) in sorted(pieces, key=lambda p: p[1]):
            nxt = []
            for rlo, rhi in remaining:
                nxt.extend(_subtract((rlo, rhi), [(ulo, uhi)]))
            remaining = nxt
        if remaining:
            return None  # part of the crossing is not creased: tearing
        folds[fid] = pieces
    return folds


def _on_side(value: Fraction, coord: Fraction, side: str) -> bool:
    return value > coord if side in ("right", "up") else value < coord


def _facet_side(f: RectFacet, axis, coord, side) -> str:
    """"moving", "stationary", or "crossing" relative to the fold line."""
    lo, hi = f.img_span(axis)
    if lo < coord < hi:
        return "crossing"
    if side in ("right", "up"):
        return "moving" if lo >= coord else "stationary"
    return "moving" if hi <= coord else "stationary"


def _drag_closure(state, axis, coord, side, split_ids, crossing, joints):
    """Whole moving-side facets pulled along through joints; None on a tear."""
    edges: dict[tuple, list[tuple]] = {}

    def piece_of(fid):
        if fid in split_ids:
            return "half", fid
        if fid in crossing:
            return "blocked", fid
        kind = _facet_side(state.facets[fid], axis, coord, side)
        assert kind == "moving", "stationary facet at a moving-side joint"
        return "whole", fid

    for ia, ib, jaxis, jcoord, span, jside in joints:
        if jaxis == axis:
            relevant = _on_side(jcoord, coord, side) or (jcoord == coord and jside == side)
        else:
            # perpendicular joint: its moving-side portion links the parts
            slo, shi = span
            relevant = max(slo, coord) < shi if side in ("right", "up") else slo < min(shi, coord)
        if not relevant:
            continue
        pa, pb = piece_of(ia), piece_of(ib)
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


def _extraction_ok(state, axis, coord, side, landing, moving_part):
    for xl, xh, yl, yh, ids in state.cells:
        lo, hi = (xl, xh) if axis == VERTICAL else (yl, yh)
        if side in ("right", "up") and hi <= coord:
            continue
        if side in ("left", "down") and lo >= coord:
            continue
        straddles = lo < coord < hi
        moved_layers = []
        stationary_layers = []
        for layer, fid in enumerate(ids):
            in_part = fid in moving_part
            if straddles:
                in_part = in_part and state.facets[fid].crosses(axis, coord)
            (moved_layers if in_part else stationary_layers).append(layer)
        if not moved_layers or not stationary_layers:
            continue
        if landing == TOP and max(stationary_layers) > min(moved_layers):
            return False
        if landing == BOTTOM and min(stationary_layers) < max(moved_layers):
            return False
    return True


def _build_successor(state, pattern, axis, coord, side, landing, folds, moved_wholes):
    new_facets: list[RectFacet] = []
    old_of_new: list[int] = []
    moved_new: list[bool] = []
    for fid, f in enumerate(state.facets):
        if fid in folds:
            if axis == VERTICAL:
                t = f.source_x(coord)
                lo_half = RectFacet(f.x0, t, f.y0, f.y1, f.ox, f.dx, f.oy, f.dy)
                hi_half = RectFacet(t, f.x1, f.y0, f.y1, f.ox, f.dx, f.oy, f.dy)
                d = f.dx
            else:
                t = f.source_y(coord)
                lo_half = RectFacet(f.x0, f.x1, f.y0, t, f.ox, f.dx, f.oy, f.dy)
                hi_half = RectFacet(f.x0, f.x1, t, f.y1, f.ox, f.dx, f.oy, f.dy)
                d = f.dy
            if side in ("right", "up"):
                mov = hi_half if d == 1 else lo_half
            else:
                mov = lo_half if d == 1 else hi_half
            for piece in (lo_half, hi_half):
                new_facets.append(piece.reflected(axis, coord) if piece is mov else piece)
                old_of_new.append(fid)
                moved_new.append(piece is mov)
        elif fid in moved_wholes:
            new_facets.append(f.reflected(axis, coord))
            old_of_new.append(fid)
            moved_new.append(True)
        else:
            new_facets.append(f)
            old_of_new.append(fid)
            moved_new.append(False)

    order = sorted(range(len(new_facets)), key=lambda i: (new_facets[i].x0, new_facets[i].y0, new_facets[i].x1, new_facets[i].y1))
    new_facets = [new_facets[i] for i in order]
    old_of_new = [old_of_new[i] for i in order]
    moved_new = [moved_new[i] for i in order]

    xs = sorted({v for f in new_facets for v in f.img_x})
    ys = sorted({v for f in new_facets for v in f.img_y})
    cells: list[Cell] = []
    for xl, xh in zip(xs, xs[1:]):
        for yl, yh in zip(ys, ys[1:]):
            members = [
                i
                for i, f in enumerate(new_facets)
                if f.img_x[0] <= xl and f.img_x[1] >= xh and f.img_y[0] <= yl and f.img_y[1] >= yh
            ]
            if not members:
                continue
            stationary = [i for i in members if not moved_new[i]]
            moved = [i for i in members if moved_new[i]]
            if stationary:
                old = _stack_over(state, xl, xh, yl, yh)
                stationary.sort(key=lambda i: old.index(old_of_new[i]))
            if moved:
                if axis == VERTICAL:
                    old = _stack_over(state, 2 * coord - xh, 2 * coord - xl, yl, yh)
                else:
                    old = _stack_over(state, xl, xh, 2 * coord - yh, 2 * coord - yl)
                moved.sort(key=lambda i: old.index(old_of_new[i]), reverse=True)
            stack = stationary + moved if landing == TOP else moved + stationary
            cells.append((xl, xh, yl, yh, tuple(stack)))

    cover = [list(parts) for parts in state.cover]
    for fid, pieces in folds.items():
        for ci, piece in pieces:
            cover[ci].append(piece)
    new_cover = tuple(_merge_intervals(parts) for parts in cover)

    succ = RectFoldedState(tuple(new_facets), tuple(cells), new_cover)
    check_non_penetration(succ)
    return succ


def _crossing_order(state, axis, coord, crossing):
    """Direct 'stacked above' edges among crossing facets sharing cells.

    Every crossing facet covers the cells hugging the line, so scanning the
    cells whose edge or interior meets the line covers all comparable pairs.
    """
    crossing_set = set(crossing)
    above: dict[int, set[int]] = {fid: set() for fid in crossing}
    for xl, xh, yl, yh, ids in state.cells:
        lo, hi = (xl, xh) if axis == VERTICAL else (yl, yh)
        if not lo <= coord <= hi:
            continue
        present = [fid for fid in ids if fid in crossing_set]
        for i, low_fid in enumerate(present):
            for high_fid in present[i + 1 :]:
                above[low_fid].add(high_fid)
    return above


def _iter_moved_sets(crossing, above, landing, cap: int = 2048):
    """Nonempty subsets closed upward (landing top) or downward (bottom),
    the full crossing set first.

    Grown by repeatedly adding one eligible facet and deduplicating, so a
    totally ordered stack of n layers yields its n prefixes, not 2^n masks.
    Raises when more than cap subsets exist (reported as inconclusive).
    """
    full = frozenset(crossing)
    yield set(full)
    if landing == TOP:
        blockers = {fid: frozenset(above[fid]) for fid in crossing}
    else:
        blockers = {
            fid: frozenset(g for g in crossing if fid in above[g]) for fid in crossing
        }
    seen: set[frozenset] = {full}
    frontier: list[frozenset] = [frozenset()]
    while frontier:
        base = frontier.pop()
        for fid in crossing:
            if fid in base or not blockers[fid] <= base:
                continue
            grown = base | {fid}
            if grown in seen:
                continue
            seen.add(grown)
            if len(seen) > cap:
                raise SearchBudgetExceeded
            yield set(grown)
            frontier.append(grown)


def enumerate_successors_rect(
    state: RectFoldedState, pattern: RectPattern, model: str
) -> list[tuple[RectMove, RectFoldedState]]:
    return list(_iter_successors_rect(state, pattern, model))


def _assigned_line_images(state: RectFoldedState, pattern: RectPattern):
    """Image line coordinates carrying unfolded assigned crease material."""
    out = {VERTICAL: set(), HORIZONTAL: set()}
    for fid, f in enumerate(state.facets):
        for ci, c in enumerate(pattern.creases):
            if c.mv is U:
                continue
            if c.axis == VERTICAL and f.x0 < c.coord < f.x1:
                lo, hi = max(c.lo, f.y0), min(c.hi, f.y1)
                if lo < hi and _subtract((lo, hi), state.cover[ci]):
                    out[VERTICAL].add(f.image_x(c.coord))
            elif c.axis == HORIZONTAL and f.y0 < c.coord < f.y1:
                lo, hi = max(c.lo, f.x0), min(c.hi, f.x1)
                if lo < hi and _subtract((lo, hi), state.cover[ci]):
                    out[HORIZONTAL].add(f.image_y(c.coord))
    return out


def _line_order_key(assigned, axis, coord):
    """Folds that land assigned creases onto assigned creases come first:
    witnesses for heavily constrained patterns are alignment-driven.
    Ordering only; completeness and verdicts do not depend on it."""
    lines = assigned[axis]
    score = sum(1 for y in lines if y != coord and (2 * coord - y) in lines)
    score += 2 * (coord in lines)
    return -score


def _iter_successors_rect(state: RectFoldedState, pattern: RectPattern, model: str):
    if model not in ("some", "all"):
        raise ValueError(f"unsupported model {model!r}; the rectangle search handles 'some' and 'all'")
    lines: set[tuple[str, Fraction]] = set()
    for fid, f in enumerate(state.facets):
        for ci, c in enumerate(pattern.creases):
            if c.axis == VERTICAL:
                if not f.x0 < c.coord < f.x1:
                    continue
                plo, phi = max(c.lo, f.y0), min(c.hi, f.y1)
                if plo < phi and _subtract((plo, phi), state.cover[ci]):
                    lines.add((VERTICAL, f.image_x(c.coord)))
            else:
                if not f.y0 < c.coord < f.y1:
                    continue
                plo, phi = max(c.lo, f.x0), min(c.hi, f.x1)
                if plo < phi and _subtract((plo, phi), state.cover[ci]):
                    lines.add((HORIZONTAL, f.image_y(c.coord)))

    assigned = _assigned_line_images(state, pattern)
    ordered = sorted(lines, key=lambda ln: (_line_order_key(assigned, *ln), ln))
    joints = _joints(state)
    crease_lines = _crease_lines(pattern)
    for axis, coord in ordered:
        crossing = [i for i, f in enumerate(state.facets) if f.crosses(axis, coord)]
        crossing_set = set(crossing)
        low_side, high_side = SIDES[axis]
        if model == "all":
            span_lo = min(f.img_span(axis)[0] for f in state.facets)
            span_hi = max(f.img_span(axis)[1] for f in state.facets)
            sides = [low_side if coord - span_lo <= span_hi - coord else high_side]
        else:
            sides = [low_side, high_side]
        above = _crossing_order(state, axis, coord, crossing)
        for side in sides:
            for landing in (TOP, BOTTOM):
                if model == "all":
                    moved_sets = iter([crossing_set]) if crossing_set else iter(())
                else:
                    moved_sets = _iter_moved_sets(crossing, above, landing)
                for chosen in moved_sets:
                    folds = _split_info(state, pattern, axis, coord, landing, chosen, crease_lines)
                    if folds is None:
                        continue
                    if model == "all":
                        closure = {
                            i
                            for i, f in enumerate(state.facets)
                            if i not in crossing_set
                            and _facet_side(f, axis, coord, side) == "moving"
                        }
                    else:
                        closure = _drag_closure(state, axis, coord, side, chosen, crossing_set, joints)
                        if closure is None:
                            continue
                    if not _extraction_ok(state, axis, coord, side, landing, chosen | closure):
                        continue
                    succ = _build_successor(state, pattern, axis, coord, side, landing, folds, closure)
                    extent = "all" if len(chosen) == len(crossing) else str(len(chosen))
                    move = RectMove(axis, coord, side, landing, len(chosen), len(crossing), extent)
                    yield move, succ


def search_rect(
    pattern: RectPattern,
    model: str,
    max_nodes: int = 50_000,
    edge_log: list | None = None,
    use_memo: bool = True,
) -> RectSearchResult:
    """Exhaustive search; edge_log, when given, receives one
    (previous axis, move) pair per explored edge (memo disabled makes the
    log cover every reachable edge of small instances)."""
    memo: dict = {}
    nodes = 0

    def dfs(state: RectFoldedState, prev_axis: str | None):
        nonlocal nodes
        if fully_folded(state, pattern):
            return ()
        key = canonical_rect_key(state)
        if use_memo and key in memo:
            return memo[key]
        nodes += 1
        if nodes > max_nodes:
            raise SearchBudgetExceeded
        best = None
        for move, succ in _iter_successors_rect(state, pattern, model):
            if edge_log is not None:
                edge_log.append((prev_axis, move))
            sub = dfs(succ, move.axis)
            if sub is not None and best is None:
                best = (move,) + sub
                if edge_log is None:
                    break
        if use_memo:
            memo[key] = best
        return best

    try:
        trace = dfs(initial_rect_state(pattern), None)
    except SearchBudgetExceeded:
        return RectSearchResult("inconclusive", None, nodes)
    if trace is None:
        return RectSearchResult("unfoldable", None, nodes)
    return RectSearchResult("foldable", trace, nodes)
