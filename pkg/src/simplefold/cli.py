"""Command-line interface.

Commands: decide, assign, sequence, oracle, fuzz, gadget.  Every command
prints a single JSON document.  Exit codes: 0 foldable / generated / no
disagreements, 1 unfoldable / no valid assignment, 2 usage or parse error,
3 oracle budget exhausted (inconclusive).
"""

from __future__ import annotations

import argparse
import json
import sys

from .all_layers import decide_all_layers_mixed
from .characterize import NotFoldableError, decide_assigned, op_to_dict, synthesize_sequence
from .gadgets import (
    ThreePartitionInstance,
    ThreeSatFormula,
    gen_3partition_assigned,
    gen_3partition_unassigned,
    gen_3sat_rect,
    poly_to_fold,
    rect_to_fold,
    sat_layout_config,
)
from .mixed import assignment_to_dict, decide_mixed, find_valid_assignment
from .oracle1d import search_1d
from .oracle2d import search_rect
from .pattern import CreasePattern1D, pattern_from_dict
from .rect import RectPattern, decide_rect_one_layer, rect_from_dict, rect_to_dict
from . import fuzz as fuzz_mod

OK, UNFOLDABLE, USAGE, INCONCLUSIVE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def emit(doc: dict) -> None:
    json.dump(doc, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")


def load_pattern(path: str) -> CreasePattern1D | RectPattern:
    try:
        with open(path) as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}")
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}")
    kind = obj.get("type") if isinstance(obj, dict) else None
    try:
        if kind == "1d":
            return pattern_from_dict(obj)
        if kind == "rect":
            return rect_from_dict(obj)
    except (ValueError, TypeError, KeyError) as exc:
        raise UsageError(f"bad pattern in {path}: {exc}")
    raise UsageError(f"{path}: expected a pattern with type '1d' or 'rect'")


def cmd_decide(args) -> int:
    pattern = load_pattern(args.input)
    if isinstance(pattern, RectPattern):
        if args.model != "one":
            raise UsageError(
                "rectangular decisions are polynomial only in the one-layer model; "
                "use the oracle command for the others"
            )
        verdict = decide_rect_one_layer(pattern)
        emit(verdict.to_dict())
        return OK if verdict.foldable else UNFOLDABLE
    if args.model == "all":
        verdict = decide_all_layers_mixed(pattern)
    else:
        verdict = decide_mixed(pattern, args.model)
    emit(verdict.to_dict())
    return OK if verdict.foldable else UNFOLDABLE


def cmd_assign(args) -> int:
    pattern = load_pattern(args.input)
    if not isinstance(pattern, CreasePattern1D):
        raise UsageError("assign expects a 1d pattern")
    assignment = find_valid_assignment(pattern)
    if assignment is None:
        emit({"assignment": None})
        return UNFOLDABLE
    emit(assignment_to_dict(pattern, assignment))
    return OK


def cmd_sequence(args) -> int:
    pattern = load_pattern(args.input)
    if not isinstance(pattern, CreasePattern1D):
        raise UsageError("sequence expects a 1d pattern")
    try:
        ops = synthesize_sequence(pattern)
    except NotFoldableError as exc:
        emit({"foldable": False, "guilty": [str(exc.guilty[0]), str(exc.guilty[1])]})
        return UNFOLDABLE
    emit({"foldable": True, "sequence": [op_to_dict(op) for op in ops]})
    return OK


def cmd_oracle(args) -> int:
    pattern = load_pattern(args.input)
    if isinstance(pattern, CreasePattern1D):
        result = search_1d(pattern, args.model, max_nodes=args.budget)
    else:
        if args.model == "one":
            raise UsageError("the rectangle search handles the 'some' and 'all' models")
        result = search_rect(pattern, args.model, max_nodes=args.budget)
    emit(result.to_dict())
    if result.status == "inconclusive":
        return INCONCLUSIVE
    return OK if result.status == "foldable" else UNFOLDABLE


def cmd_fuzz(args) -> int:
    models = tuple(m.strip() for m in args.models.split(","))
    for m in models:
        if m not in ("one", "some", "all"):
            raise UsageError(f"unknown model {m!r}")
    limit = None if args.limit == "exhaustive" else int(args.limit)
    report = fuzz_mod.run_fuzz(
        models=models,
        max_creases=args.creases,
        max_length=args.length,
        limit=limit,
        seed=args.seed,
        random_instances=args.random_instances,
        budget=args.budget,
        reproducer_path=args.reproducer,
    )
    emit(report.to_dict())
    if report.disagreements:
        return UNFOLDABLE
    if report.inconclusive:
        return INCONCLUSIVE
    return OK


def _parse_clauses(text: str) -> tuple[tuple[int, int, int], ...]:
    clauses = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        lits = tuple(int(v) for v in chunk.replace(",", " ").split())
        clauses.append(lits)
    if not clauses:
        raise UsageError("no clauses given")
    return tuple(clauses)


def cmd_gadget(args) -> int:
    try:
        if args.kind == "3sat":
            clauses = _parse_clauses(args.clauses)
            num_vars = args.vars or max(abs(l) for c in clauses for l in c)
            formula = ThreeSatFormula(num_vars, clauses)
            pattern = gen_3sat_rect(formula)
            doc = rect_to_dict(pattern)
            doc["config"] = sat_layout_config(formula)
            fold = rect_to_fold(pattern)
        else:
            numbers = tuple(int(v) for v in args.numbers.replace(",", " ").split())
            inst = ThreePartitionInstance(numbers)
            if args.kind == "3p-assigned":
                poly = gen_3partition_assigned(inst, include_arm2=not args.buggy)
            else:
                poly = gen_3partition_unassigned(inst)
            doc = poly.to_dict()
            fold = poly_to_fold(poly)
    except ValueError as exc:
        raise UsageError(str(exc))
    with open(args.out + ".json", "w") as fh:
        json.dump(doc, fh, indent=2, sort_keys=True)
        fh.write("\n")
    with open(args.out + ".fold", "w") as fh:
        json.dump(fold, fh, indent=2, sort_keys=True)
        fh.write("\n")
    emit({"written": [args.out + ".json", args.out + ".fold"]})
    return OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="simplefold")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_input(p):
        p.add_argument("--input", required=True, help="pattern JSON file")

    p = sub.add_parser("decide", help="polynomial flat-foldability decision")
    p.add_argument("--model", choices=("one", "some", "all"), required=True)
    with_input(p)
    p.set_defaults(run=cmd_decide)

    p = sub.add_parser("assign", help="find a valid mountain/valley completion")
    with_input(p)
    p.set_defaults(run=cmd_assign)

    p = sub.add_parser("sequence", help="crimp/end-fold sequence for an assigned pattern")
    with_input(p)
    p.set_defaults(run=cmd_sequence)

    p = sub.add_parser("oracle", help="exhaustive fold search")
    p.add_argument("--model", choices=("one", "some", "all"), required=True)
    p.add_argument("--budget", type=int, default=200_000, help="search node budget")
    with_input(p)
    p.set_defaults(run=cmd_oracle)

    p = sub.add_parser("fuzz", help="deciders against the oracle over an envelope")
    p.add_argument("--models", default="one,some,all")
    p.add_argument("--creases", type=int, default=4)
    p.add_argument("--length", type=int, default=7)
    p.add_argument("--limit", default="exhaustive", help="'exhaustive' or an instance count")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--random-instances", type=int, default=50)
    p.add_argument("--budget", type=int, default=200_000)
    p.add_argument("--reproducer", default="fuzz-reproducer.json")
    p.set_defaults(run=cmd_fuzz)

    p = sub.add_parser("gadget", help="generate a hardness instance")
    p.add_argument("kind", choices=("3sat", "3p-assigned", "3p-cactus"))
    p.add_argument("--clauses", help="3sat: semicolon-separated clauses, e.g. '1,-2,3;2,3,-1'")
    p.add_argument("--vars", type=int, help="3sat: variable count (default: inferred)")
    p.add_argument("--numbers", help="3-partition numbers, e.g. '1,2,3'")
    p.add_argument("--buggy", action="store_true", help="omit the corrective upper arm")
    p.add_argument("--out", required=True, help="output path prefix")
    p.set_defaults(run=cmd_gadget)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    try:
        if args.command == "gadget":
            if args.kind == "3sat" and not args.clauses:
                raise UsageError("3sat needs --clauses")
            if args.kind != "3sat" and not args.numbers:
                raise UsageError(f"{args.kind} needs --numbers")
        return args.run(args)
    except UsageError as exc:
        emit({"error": str(exc)})
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
