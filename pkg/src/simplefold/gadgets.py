"""Hardness-instance generators: crease patterns whose foldability encodes
satisfiability or 3-partition questions.

Two families are generated:

* a rectangular mixed pattern from a 3-CNF formula: per-variable sections
  with an adjacent unassigned crease pair (fold one or the other first to
  pick the truth value), per-occurrence assigned creases, order-enforcing
  assigned vertical lines, and a clause-checking top section;
* orthogonal-polygon patterns from a 3-partition instance: Bar, Staircase
  (vertical runs of lengths a_i between alternating horizontal creases),
  Wrapper (2m valley creases spaced like the Column width), Column, Cage
  (stepped walls, each step 2t tall), a lower Arm, and the corrective
  upper Arm.  The unassigned variant replaces the Wrapper with the Cactus:
  same creases, all unassigned, plus one branch of paper crossing each
  crease line to force the fold order.

The exact coordinatization is fixed by GadgetConfig / SatConfig records;
the published constructions pin the topology and the key lengths (a_i, the
2t step, the 2m crease count, spacing = column width) but not a full
embedding.  Generators are deterministic: equal inputs give byte-identical
JSON.  Folding these polygons is out of scope; validate_polypattern checks
the structure only.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .pattern import Assignment, M, U, V, rational
from .rect import HORIZONTAL, RectCrease, RectPattern, VERTICAL

Rect = tuple[Fraction, Fraction, Fraction, Fraction]  # x0, y0, x1, y1


# -- instances ---------------------------------------------------------------


@dataclass(frozen=True)
class ThreeSatFormula:
    num_vars: int
    clauses: tuple[tuple[int, int, int], ...]  # signed 1-based literals

    def __post_init__(self):
        if self.num_vars < 1:
            raise ValueError("need at least one variable")
        for clause in self.clauses:
            if len(clause) != 3:
                raise ValueError("every clause needs exactly 3 literals")
            for lit in clause:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise ValueError(f"literal {lit} outside 1..{self.num_vars}")

    def occurrences(self, var: int) -> list[tuple[int, int, bool]]:
        """(clause index, slot, positive?) for each occurrence of var."""
        out = []
        for ci, clause in enumerate(self.clauses):
            for slot, lit in enumerate(clause):
                if abs(lit) == var:
                    out.append((ci, slot, lit > 0))
        return out


@dataclass(frozen=True)
class ThreePartitionInstance:
    numbers: tuple[int, ...]

    def __post_init__(self):
        if len(self.numbers) % 3 or not self.numbers:
            raise ValueError("a 3-partition instance has n = 3m numbers")
        if any(a <= 0 for a in self.numbers):
            raise ValueError("numbers must be positive")
        if sum(self.numbers) % 3:
            raise ValueError("sum must be divisible by 3 so the target is integral")

    @property
    def n(self) -> int:
        return len(self.numbers)

    @property
    def m(self) -> int:
        return self.n // 3

    @property
    def target(self) -> int:
        return sum(self.numbers) // 3


# -- rectangle unions --------------------------------------------------------


def trace_union_boundary(rects: list[Rect]) -> tuple[tuple[Fraction, Fraction], ...]:
    """Counterclockwise boundary of a union of axis-aligned rectangles.

    Raises ValueError when the union is disconnected, has a hole, or pinches
    at a point: those are not simple polygons.
    """
    xs = sorted({v for r in rects for v in (r[0], r[2])})
    ys = sorted({v for r in rects for v in (r[1], r[3])})
    nx, ny = len(xs) - 1, len(ys) - 1

    def covered(i, j):
        cx0, cx1 = xs[i], xs[i + 1]
        cy0, cy1 = ys[j], ys[j + 1]
        return any(r[0] <= cx0 and cx1 <= r[2] and r[1] <= cy0 and cy1 <= r[3] for r in rects)

    grid = [[covered(i, j) for j in range(ny)] for i in range(nx)]

    cells = [(i, j) for i in range(nx) for j in range(ny) if grid[i][j]]
    if not cells:
        raise ValueError("empty union")
    seen = {cells[0]}
    frontier = [cells[0]]
    while frontier:
        i, j = frontier.pop()
        for di, dj in ((1, 0), (-1, 0), (0, 1), (0, -1)):
            ni, nj = i + di, j + dj
            if 0 <= ni < nx and 0 <= nj < ny and grid[ni][nj] and (ni, nj) not in seen:
                seen.add((ni, nj))
                frontier.append((ni, nj))
    if len(seen) != len(cells):
        raise ValueError("union is disconnected")

    # holes: every uncovered cell must reach the outside
    outside = set()
    frontier = []
    for i in range(-1, nx + 1):
        for j in (-1, ny):
            outside.add((i, j))
            frontier.append((i, j))
    for j in range(-1, ny + 1):
        for i in (-1, nx):
            outside.add((i, j))
            frontier.append((i, j))
    while frontier:
        i, j = frontier.pop()
        for di, dj in ((1, 0), (-1, 0), (0, 1), (0, -1)):
            ni, nj = i + di, j + dj
            if -1 <= ni <= nx and -1 <= nj <= ny and (ni, nj) not in outside:
                if 0 <= ni < nx and 0 <= nj < ny and grid[ni][nj]:
                    continue
                outside.add((ni, nj))
                frontier.append((ni, nj))
    for i in range(nx):
        for j in range(ny):
            if not grid[i][j] and (i, j) not in outside:
                raise ValueError(f"union has a hole near ({xs[i]}, {ys[j]})")

    def cell_covered(i, j):
        return 0 <= i < nx and 0 <= j < ny and grid[i][j]

    for i in range(nx + 1):
        for j in range(ny + 1):
            quad = (
                cell_covered(i - 1, j - 1),
                cell_covered(i, j - 1),
                cell_covered(i - 1, j),
                cell_covered(i, j),
            )
            if quad in ((True, False, False, True), (False, True, True, False)):
                raise ValueError(f"union pinches at ({xs[i]}, {ys[j]})")

    # directed boundary edges, interior on the left
    edges: dict[tuple[Fraction, Fraction], tuple[Fraction, Fraction]] = {}
    for i in range(nx):
        for j in range(ny):
            if not grid[i][j]:
                continue
            x0, x1, y0, y1 = xs[i], xs[i + 1], ys[j], ys[j + 1]
            if not cell_covered(i, j - 1):
                edges[(x0, y0)] = (x1, y0)
            if not cell_covered(i + 1, j):
                edges[(x1, y0)] = (x1, y1)
            if not cell_covered(i, j + 1):
                edges[(x1, y1)] = (x0, y1)
            if not cell_covered(i - 1, j):
                edges[(x0, y1)] = (x0, y0)

    start = min(edges)
    loop = [start]
    cur = edges.pop(start)
    while cur != start:
        loop.append(cur)
        cur = edges.pop(cur)
    if edges:
        raise ValueError("boundary is not a single loop")

    out = []
    k = len(loop)
    for idx, pt in enumerate(loop):
        prev = loop[idx - 1]
        nxt = loop[(idx + 1) % k]
        if (prev[0] == pt[0] == nxt[0]) or (prev[1] == pt[1] == nxt[1]):
            continue  # drop collinear grid vertices
        out.append(pt)
    return tuple(out)


# -- polygon patterns --------------------------------------------------------


@dataclass
class PolyPattern:
    vertices: tuple[tuple[Fraction, Fraction], ...]
    creases: tuple[RectCrease, ...]
    parts: dict[str, dict]
    attachments: tuple[tuple[str, str], ...]
    config: dict[str, str]

    def to_dict(self) -> dict:
        return {
            "type": "poly",
            "vertices": [[str(x), str(y)] for x, y in self.vertices],
            "creases": [
                {
                    "axis": c.axis,
                    "coord": str(c.coord),
                    "from": str(c.lo),
                    "to": str(c.hi),
                    "mv": c.mv.value,
                }
                for c in self.creases
            ],
            "parts": {name: dict(sorted(meta.items())) for name, meta in sorted(self.parts.items())},
            "attachments": sorted(list(pair) for pair in self.attachments),
            "config": dict(sorted(self.config.items())),
        }


def poly_from_dict(obj: dict) -> PolyPattern:
    if obj.get("type") != "poly":
        raise ValueError("expected a pattern object with type 'poly'")
    vertices = tuple((rational(x), rational(y)) for x, y in obj["vertices"])
    creases = tuple(
        RectCrease(c["axis"], rational(c["coord"]), rational(c["from"]), rational(c["to"]), Assignment(c["mv"]))
        for c in obj.get("creases", [])
    )
    parts = {name: dict(meta) for name, meta in obj.get("parts", {}).items()}
    attachments = tuple(tuple(p) for p in obj.get("attachments", []))
    return PolyPattern(vertices, creases, parts, attachments, dict(obj.get("config", {})))


def _part(x0, y0, x1, y1, **meta) -> dict:
    out = {"x0": str(x0), "y0": str(y0), "x1": str(x1), "y1": str(y1)}
    out.update({k: str(v) for k, v in meta.items()})
    return out


def _bbox(meta: dict) -> Rect:
    return (rational(meta["x0"]), rational(meta["y0"]), rational(meta["x1"]), rational(meta["y1"]))


# -- 3-partition generators --------------------------------------------------

BAR_HEIGHT = Fraction(1)
STAIR_WIDTH = Fraction(2)
WRAP_HEIGHT = Fraction(1)
COLUMN_WIDTH = Fraction(2)  # equals the wrapper crease spacing
COLUMN_HEIGHT = Fraction(1)
STEP_LENGTH = Fraction(2)
ARM_THICKNESS = Fraction(1)
ARM_CLEARANCE = Fraction(1, 2)
BRANCH_HALFWIDTH = Fraction(1, 2)
BRANCH_DEPTH = Fraction(1, 2)


def _gadget_layout(inst: ThreePartitionInstance, wrapper_mv: Assignment, stair_mvs):
    """Shared geometry of the assigned and unassigned reductions."""
    n, m, t = inst.n, inst.m, inst.target
    total = Fraction(sum(inst.numbers))

    bar_top = BAR_HEIGHT
    stair_top = bar_top + total
    wrap_top = stair_top + WRAP_HEIGHT
    wrap_end = STAIR_WIDTH + (2 * m + 2) * COLUMN_WIDTH
    crease_xs = [STAIR_WIDTH + j * COLUMN_WIDTH for j in range(1, 2 * m + 1)]

    cage_x0 = wrap_end + 4
    cage_x1 = cage_x0 + m * STEP_LENGTH
    slot_base = bar_top + 1
    # consecutive channel segments must overlap or the slot would close up
    slot_height = 2 * t + 1
    cage_top = slot_base + (m - 1) * (2 * t) + slot_height + 1
    bar_len = cage_x1 + 1

    arm1_y0 = bar_top + ARM_CLEARANCE
    arm1_y1 = arm1_y0 + ARM_THICKNESS
    arm2_y0 = wrap_top + ARM_CLEARANCE
    arm2_y1 = arm2_y0 + ARM_THICKNESS
    stub1_x0 = wrap_end + 2

    parts: dict[str, dict] = {}
    rects: dict[str, list[Rect]] = {}

    def add(name, x0, y0, x1, y1, **meta):
        box = tuple(rational(v) for v in (x0, y0, x1, y1))
        parts[name] = _part(*box, **meta)
        rects[name] = [box]

    add("bar", 0, 0, bar_len, bar_top, length=bar_len)
    add("staircase", 0, bar_top, STAIR_WIDTH, stair_top,
        segment_lengths=",".join(str(a) for a in inst.numbers), crease_count=n - 1)
    add("wrapper", 0, stair_top, wrap_end, wrap_top,
        crease_count=2 * m, crease_spacing=COLUMN_WIDTH)
    add("column", wrap_end - COLUMN_WIDTH, stair_top - COLUMN_HEIGHT, wrap_end, stair_top,
        width=COLUMN_WIDTH)
    add("arm1_stub", stub1_x0, bar_top, stub1_x0 + 1, arm1_y1)
    add("arm1", STAIR_WIDTH + 1, arm1_y0, stub1_x0, arm1_y1)
    add("arm2_stub", wrap_end - 1, wrap_top, wrap_end, arm2_y1)
    add("arm2", STAIR_WIDTH + 1, arm2_y0, wrap_end - 1, arm2_y1)

    cage_rects: list[Rect] = []
    for i in range(m):
        x0 = cage_x0 + i * STEP_LENGTH
        x1 = x0 + STEP_LENGTH
        cage_rects.append((x0, bar_top, x1, slot_base + i * 2 * t))
        cage_rects.append((x0, slot_base + i * 2 * t + slot_height, x1, cage_top))
    cage_rects.append((cage_x1, bar_top, cage_x1 + 1, cage_top))  # spine
    parts["cage"] = _part(cage_x0, bar_top, cage_x1 + 1, cage_top,
                          steps=m, step_height=2 * t, slot_height=slot_height)
    rects["cage"] = cage_rects

    attachments = [
        ("bar", "staircase"),
        ("bar", "arm1_stub"),
        ("bar", "cage"),
        ("staircase", "wrapper"),
        ("wrapper", "column"),
        ("wrapper", "arm2_stub"),
        ("arm1_stub", "arm1"),
        ("arm2_stub", "arm2"),
    ]

    creases: list[RectCrease] = []
    running = bar_top
    for k, a in enumerate(inst.numbers[:-1]):
        running += a
        creases.append(RectCrease(HORIZONTAL, running, Fraction(0), STAIR_WIDTH, stair_mvs[k]))
    for x in crease_xs:
        creases.append(RectCrease(VERTICAL, x, stair_top, wrap_top, wrapper_mv))

    config = {
        "bar_height": str(BAR_HEIGHT),
        "staircase_width": str(STAIR_WIDTH),
        "staircase_crease_count": str(n - 1),
        "wrapper_height": str(WRAP_HEIGHT),
        "wrapper_crease_count": str(2 * m),
        "column_width": str(COLUMN_WIDTH),
        "cage_steps": str(m),
        "cage_step_height": str(2 * t),
        "cage_step_length": str(STEP_LENGTH),
        "slot_height": str(slot_height),
        "target": str(t),
        "numbers": ",".join(str(a) for a in inst.numbers),
    }
    return parts, rects, attachments, creases, crease_xs, config


def _assemble(parts, rects, attachments, creases, config) -> PolyPattern:
    all_rects = [r for rs in rects.values() for r in rs]
    vertices = trace_union_boundary(all_rects)
    pattern = PolyPattern(vertices, tuple(creases), parts, tuple(attachments), config)
    # coordinate counts stay polynomial in the instance size
    budget = int(config["size_budget"])
    assert len(pattern.vertices) + len(pattern.creases) <= budget, "output larger than declared budget"
    return pattern


def gen_3partition_assigned(inst: ThreePartitionInstance, include_arm2: bool = True) -> PolyPattern:
    """Assigned reduction.  include_arm2=False reproduces the earlier, buggy
    layout without the upper arm: an unintended folding can then dodge the
    cage alignment, so that variant exists for study only."""
    stair_mvs = [V if k % 2 == 0 else M for k in range(inst.n - 1)]
    parts, rects, attachments, creases, _xs, config = _gadget_layout(inst, V, stair_mvs)
    if not include_arm2:
        for name in ("arm2", "arm2_stub"):
            parts.pop(name)
            rects.pop(name)
        attachments = [
            (a, b) for a, b in attachments if not (a.startswith("arm2") or b.startswith("arm2"))
        ]
        config["arm2"] = "omitted"
    config["variant"] = "assigned"
    config["size_budget"] = str(40 + 4 * inst.n + 12 * inst.m)
    return _assemble(parts, rects, attachments, creases, config)


def gen_3partition_unassigned(inst: ThreePartitionInstance) -> PolyPattern:
    """Unassigned reduction: the Cactus replaces the Wrapper, every crease is
    unassigned, and one branch of paper crosses each crease line so the
    creases can only fold in right-to-left order."""
    stair_mvs = [U] * (inst.n - 1)
    parts, rects, attachments, creases, crease_xs, config = _gadget_layout(inst, U, stair_mvs)
    parts["cactus"] = parts.pop("wrapper")
    rects["cactus"] = rects.pop("wrapper")
    attachments = [tuple("cactus" if p == "wrapper" else p for p in pair) for pair in attachments]
    stair_top = rational(parts["cactus"]["y0"])
    for j, x in enumerate(crease_xs):
        name = f"branch_{j}"
        x0, x1 = x - BRANCH_HALFWIDTH, x + BRANCH_HALFWIDTH
        parts[name] = _part(x0, stair_top - BRANCH_DEPTH, x1, stair_top, crease_x=x)
        rects[name] = [(x0, stair_top - BRANCH_DEPTH, x1, stair_top)]
        attachments.append(("cactus", name))
    config["variant"] = "unassigned-cactus"
    config["branch_count"] = str(2 * inst.m)
    config["size_budget"] = str(40 + 4 * inst.n + 24 * inst.m)
    return _assemble(parts, rects, attachments, creases, config)


# -- 3SAT rectangle generator --------------------------------------------------


def gen_3sat_rect(formula: ThreeSatFormula) -> RectPattern:
    """Mixed rectangular pattern from a 3-CNF formula.

    Per variable section, bottom to top: one valley crease per occurrence,
    the adjacent unassigned pair (f_i below t_i, full width), one mountain
    crease per occurrence (its span encodes the literal sign).  Vertical
    assigned creases on the 2(n+1) order-enforcing lines.  The topmost
    section holds one valley check crease per clause over its column.
    sat_layout_config records every coordinate rule used.
    """
    n = formula.num_vars
    ncl = len(formula.clauses)
    width = Fraction(2 * max(n + 1, ncl + 1) + 1)

    creases: list[RectCrease] = []
    y = Fraction(0)
    rows: list[Fraction] = []

    def next_row() -> Fraction:
        nonlocal y
        y += 1
        rows.append(y)
        return y

    def clause_col(ci: int) -> Fraction:
        return Fraction(2 * ci + 1)

    for var in range(1, n + 1):
        occs = formula.occurrences(var)
        for ci, slot, _pos in occs:
            ry = next_row()
            x0 = clause_col(ci)
            creases.append(RectCrease(HORIZONTAL, ry, x0, x0 + 1, V))
        f_y = next_row()
        creases.append(RectCrease(HORIZONTAL, f_y, Fraction(0), width, U))
        t_y = next_row()
        creases.append(RectCrease(HORIZONTAL, t_y, Fraction(0), width, U))
        for ci, slot, pos in occs:
            ry = next_row()
            x0 = clause_col(ci) if pos else clause_col(ci) + 1
            creases.append(RectCrease(HORIZONTAL, ry, x0, x0 + 1, M))
    for ci in range(ncl):
        ry = next_row()
        x0 = clause_col(ci)
        creases.append(RectCrease(HORIZONTAL, ry, x0, x0 + 1, V))
    height = y + 1

    for i in range(n + 1):
        creases.append(RectCrease(VERTICAL, Fraction(2 * i + 1), Fraction(0), height, V))
        creases.append(RectCrease(VERTICAL, Fraction(2 * i + 2), Fraction(0), height, M))

    pattern = RectPattern(width, height, tuple(sorted(
        creases, key=lambda c: (c.axis, c.coord, c.lo, c.hi, c.mv.value)
    )))
    assert len(pattern.creases) <= 4 * n + 7 * ncl + 4, "output larger than declared budget"
    return pattern


def sat_layout_config(formula: ThreeSatFormula) -> dict[str, str]:
    """Coordinate rules used by gen_3sat_rect, one named constant each."""
    n, ncl = formula.num_vars, len(formula.clauses)
    return {
        "width": str(2 * max(n + 1, ncl + 1) + 1),
        "order_line_low": "x = 2i+1, valley, i in 0..n",
        "order_line_high": "x = 2i+2, mountain, i in 0..n",
        "clause_column": "x in [2c+1, 2c+2]",
        "row_spacing": "1",
        "section_rows": "occurrence valleys, f_i, t_i, occurrence mountains",
        "negative_literal_shift": "1",
        "clause_check": "one valley per clause in the top section",
        "variables": str(n),
        "clauses": str(ncl),
    }


# -- structural validation -----------------------------------------------------


@dataclass
class ValidationReport:
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, msg: str):
        self.failures.append(msg)

    def to_dict(self) -> dict:
        return {"passed": self.passed, "failures": list(self.failures)}


def _edges_of(vertices):
    return [(vertices[i], vertices[(i + 1) % len(vertices)]) for i in range(len(vertices))]


def _segments_cross(a, b):
    """Axis-aligned closed segments sharing more than a single endpoint?"""
    (ax0, ay0), (ax1, ay1) = a
    (bx0, by0), (bx1, by1) = b
    ax0, ax1 = min(ax0, ax1), max(ax0, ax1)
    ay0, ay1 = min(ay0, ay1), max(ay0, ay1)
    bx0, bx1 = min(bx0, bx1), max(bx0, bx1)
    by0, by1 = min(by0, by1), max(by0, by1)
    if max(ax0, bx0) > min(ax1, bx1) or max(ay0, by0) > min(ay1, by1):
        return False
    xs = (max(ax0, bx0), min(ax1, bx1))
    ys = (max(ay0, by0), min(ay1, by1))
    if xs[0] == xs[1] and ys[0] == ys[1]:
        return None  # single point: legal only for consecutive edges
    return True


def _point_inside(vertices, x, y):
    """Strict interior test for a rectilinear polygon via leftward ray parity."""
    edges = _edges_of(vertices)
    hits = 0
    for (x0, y0), (x1, y1) in edges:
        if x0 == x1:  # vertical edge
            lo, hi = min(y0, y1), max(y0, y1)
            if lo <= y < hi and x0 < x:
                hits += 1
        else:
            if y0 == y and min(x0, x1) < x <= max(x0, x1):
                return False  # on a horizontal edge: not interior
    return hits % 2 == 1


def validate_polypattern(pattern: PolyPattern) -> ValidationReport:
    """Structural checks: simple orthogonal polygon, creases on the paper,
    declared part geometry (counts, step heights, branch alignment), and
    parts disjoint except where attached."""
    report = ValidationReport()
    verts = pattern.vertices
    if len(verts) < 4:
        report.fail("polygon needs at least 4 vertices")
        return report
    edges = _edges_of(verts)
    for (p, q) in edges:
        if p[0] != q[0] and p[1] != q[1]:
            report.fail(f"edge {p}-{q} is not axis-aligned")
        if p == q:
            report.fail(f"zero-length edge at {p}")
    for i in range(len(edges)):
        for j in range(i + 1, len(edges)):
            cross = _segments_cross(edges[i], edges[j])
            if cross is False:
                continue
            adjacent = j == i + 1 or (i == 0 and j == len(edges) - 1)
            if cross is True or not adjacent:
                report.fail(f"edges {edges[i]} and {edges[j]} intersect: polygon not simple")
    if report.failures:
        return report

    for c in pattern.creases:
        probes = [c.lo + (c.hi - c.lo) * Fraction(k, 4) for k in (1, 2, 3)]
        for p in probes:
            x, y = (c.coord, p) if c.axis == VERTICAL else (p, c.coord)
            if not _point_inside(verts, x, y):
                report.fail(f"crease {c.axis}={c.coord} leaves the paper near ({x}, {y})")
                break

    parts = pattern.parts
    attached = {frozenset(pair) for pair in pattern.attachments}
    names = sorted(parts)
    for i, a in enumerate(names):
        for b in names[i + 1 :]:
            ax0, ay0, ax1, ay1 = _bbox(parts[a])
            bx0, by0, bx1, by1 = _bbox(parts[b])
            if max(ax0, bx0) < min(ax1, bx1) and max(ay0, by0) < min(ay1, by1):
                report.fail(f"parts {a} and {b} overlap")
            elif max(ax0, bx0) <= min(ax1, bx1) and max(ay0, by0) <= min(ay1, by1):
                if frozenset((a, b)) not in attached:
                    report.fail(f"parts {a} and {b} touch without a declared attachment")

    cfg = pattern.config
    wrapper_name = "cactus" if "cactus" in parts else "wrapper"
    required = ["bar", "staircase", wrapper_name, "column", "cage", "arm1"]
    if cfg.get("arm2") != "omitted":
        required.append("arm2")
    for name in required:
        if name not in parts:
            report.fail(f"missing part {name}")
    if report.failures:
        return report

    sx0, sy0, sx1, sy1 = _bbox(parts["staircase"])
    stair = sorted(
        (c for c in pattern.creases if c.axis == HORIZONTAL and sy0 < c.coord < sy1 and c.lo == sx0 and c.hi == sx1),
        key=lambda c: c.coord,
    )
    want = int(cfg["staircase_crease_count"])
    if len(stair) != want:
        report.fail(f"staircase has {len(stair)} creases, declared {want}")
    lengths = [int(a) for a in cfg["numbers"].split(",")]
    cuts = [sy0] + [c.coord for c in sorted(stair, key=lambda c: c.coord)] + [sy1]
    got_lengths = [hi - lo for lo, hi in zip(cuts, cuts[1:])]
    if got_lengths != [Fraction(a) for a in lengths]:
        report.fail(f"staircase segment lengths {got_lengths} differ from {lengths}")

    wx0, wy0, wx1, wy1 = _bbox(parts[wrapper_name])
    wrap = sorted(
        (c for c in pattern.creases if c.axis == VERTICAL and wx0 < c.coord < wx1 and c.lo == wy0 and c.hi == wy1),
        key=lambda c: c.coord,
    )
    want = int(cfg["wrapper_crease_count"])
    if len(wrap) != want:
        report.fail(f"{wrapper_name} has {len(wrap)} creases, declared {want}")
    spacing = rational(cfg["column_width"])
    for a, b in zip(wrap, wrap[1:]):
        if b.coord - a.coord != spacing:
            report.fail(f"{wrapper_name} crease spacing {b.coord - a.coord} != column width {spacing}")
    cx0, _, cx1, _ = _bbox(parts["column"])
    if cx1 - cx0 != spacing:
        report.fail(f"column width {cx1 - cx0} != declared {spacing}")

    steps = int(cfg["cage_steps"])
    step_h = rational(cfg["cage_step_height"])
    gx0, gy0, gx1, gy1 = _bbox(parts["cage"])
    if rational(parts["cage"]["steps"]) != steps or rational(parts["cage"]["step_height"]) != step_h:
        report.fail("cage metadata does not match the configuration record")
    need_height = (steps - 1) * step_h + rational(parts["cage"]["slot_height"]) + 1 + 1
    if gy1 - gy0 != need_height:
        report.fail(f"cage height {gy1 - gy0} inconsistent with {steps} steps of {step_h}")

    if wrapper_name == "cactus":
        want_branches = int(cfg["branch_count"])
        branches = [name for name in parts if name.startswith("branch_")]
        if len(branches) != want_branches:
            report.fail(f"{len(branches)} branches, declared {want_branches}")
        if len(wrap) == want_branches:
            for name, crease in zip(sorted(branches, key=lambda s: int(s.split("_")[1])), wrap):
                bx0, _, bx1, _ = _bbox(parts[name])
                if not bx0 < crease.coord < bx1:
                    report.fail(f"{name} does not cross its crease line x={crease.coord}")
        if any(c.mv is not U for c in pattern.creases):
            report.fail("unassigned variant contains assigned creases")

    return report


# -- FOLD export ---------------------------------------------------------------


def _fold_frame(vertices, edge_specs):
    coords = []
    index: dict[tuple[Fraction, Fraction], int] = {}

    def vid(pt):
        if pt not in index:
            index[pt] = len(coords)
            coords.append([float(pt[0]), float(pt[1])])
        return index[pt]

    edges_vertices = []
    edges_assignment = []
    for p, q, mv in edge_specs:
        edges_vertices.append([vid(p), vid(q)])
        edges_assignment.append(mv)
    return {
        "file_spec": 1.1,
        "file_creator": "simplefold",
        "frame_classes": ["creasePattern"],
        "vertices_coords": coords,
        "edges_vertices": edges_vertices,
        "edges_assignment": edges_assignment,
    }


def poly_to_fold(pattern: PolyPattern) -> dict:
    specs = []
    for p, q in _edges_of(pattern.vertices):
        specs.append((p, q, "B"))
    for c in pattern.creases:
        if c.axis == VERTICAL:
            specs.append(((c.coord, c.lo), (c.coord, c.hi), c.mv.value))
        else:
            specs.append(((c.lo, c.coord), (c.hi, c.coord), c.mv.value))
    return _fold_frame(pattern.vertices, specs)


def rect_to_fold(pattern: RectPattern) -> dict:
    w, h = pattern.width, pattern.height
    corners = [(Fraction(0), Fraction(0)), (w, Fraction(0)), (w, h), (Fraction(0), h)]
    specs = [(corners[i], corners[(i + 1) % 4], "B") for i in range(4)]
    for c in pattern.creases:
        if c.axis == VERTICAL:
            specs.append(((c.coord, c.lo), (c.coord, c.hi), c.mv.value))
        else:
            specs.append(((c.lo, c.coord), (c.hi, c.coord), c.mv.value))
    return _fold_frame(corners, specs)
