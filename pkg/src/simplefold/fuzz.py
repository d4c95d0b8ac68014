"""Equivalence harness: every polynomial decider against the fold search.

Instances come from an exhaustive enumeration over integer crease positions
(so the equivalences are certified over the whole envelope, not sampled)
plus seeded random rational patterns.  Any disagreement is written out as a
reproducer file; enumeration runs small to large, so the first reproducer
is a minimal one.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .all_layers import decide_all_layers_mixed
from .mixed import decide_mixed
from .oracle1d import search_1d
from .pattern import Assignment, CreasePattern1D, M, U, V, make_pattern, pattern_to_dict

ALPHABET = {"assigned": (M, V), "mixed": (M, V, U)}


def enumerate_patterns(
    max_length: int = 8,
    max_creases: int = 5,
    kinds: str = "mixed",
    max_unassigned: int = 3,
):
    """Every pattern with integer creases on integer paper lengths, smallest
    lengths and crease counts first."""
    alphabet = ALPHABET[kinds]
    for length in range(1, max_length + 1):
        for k in range(0, min(max_creases, length - 1) + 1):
            for pos in itertools.combinations(range(1, length), k):
                for mvs in itertools.product(alphabet, repeat=k):
                    if sum(mv is U for mv in mvs) > max_unassigned:
                        continue
                    yield make_pattern(length, list(zip(pos, mvs)))


def random_rational_pattern(rng: random.Random, max_creases: int = 4) -> CreasePattern1D:
    length = Fraction(rng.randint(4, 12), rng.randint(1, 2))
    k = rng.randint(0, max_creases)
    positions: set[Fraction] = set()
    while len(positions) < k:
        q = Fraction(rng.randint(1, 4 * int(length)), 4)
        if 0 < q < length:
            positions.add(q)
    creases = [(q, rng.choice((M, V, U))) for q in sorted(positions)]
    return make_pattern(length, creases)


@dataclass
class Disagreement:
    pattern: CreasePattern1D
    model: str
    decider: bool
    oracle: bool

    def to_dict(self) -> dict:
        return {
            "pattern": pattern_to_dict(self.pattern),
            "model": self.model,
            "decider": self.decider,
            "oracle": self.oracle,
        }


@dataclass
class FuzzReport:
    models: tuple[str, ...]
    checked: int = 0
    inconclusive: int = 0
    disagreements: list[Disagreement] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "models": list(self.models),
            "checked": self.checked,
            "inconclusive": self.inconclusive,
            "disagreements": [d.to_dict() for d in self.disagreements],
        }


def decider_verdict(pattern: CreasePattern1D, model: str) -> bool:
    if model == "all":
        return decide_all_layers_mixed(pattern).foldable
    return decide_mixed(pattern, model).foldable


def check_pattern(pattern, models, budget: int, report: FuzzReport):
    report.checked += 1
    for model in models:
        want = decider_verdict(pattern, model)
        res = search_1d(pattern, model, max_nodes=budget)
        if res.status == "inconclusive":
            report.inconclusive += 1
            continue
        if res.foldable != want:
            report.disagreements.append(Disagreement(pattern, model, want, res.foldable))


def run_fuzz(
    models=("one", "some", "all"),
    max_creases: int = 4,
    max_length: int = 7,
    limit: int | None = None,
    seed: int = 0,
    random_instances: int = 50,
    budget: int = 200_000,
    reproducer_path: str | None = None,
) -> FuzzReport:
    """limit=None means the full exhaustive envelope; otherwise stop after
    that many enumerated instances.  Seeded rational instances follow."""
    report = FuzzReport(tuple(models))
    for i, pattern in enumerate(enumerate_patterns(max_length, max_creases)):
        if limit is not None and i >= limit:
            break
        check_pattern(pattern, models, budget, report)
        if report.disagreements:
            break
    if not report.disagreements:
        rng = random.Random(seed)
        for _ in range(random_instances):
            check_pattern(random_rational_pattern(rng, max_creases), models, budget, report)
            if report.disagreements:
                break
    if report.disagreements and reproducer_path:
        with open(reproducer_path, "w") as fh:
            json.dump(report.disagreements[0].to_dict(), fh, indent=2, sort_keys=True)
            fh.write("\n")
    return report
