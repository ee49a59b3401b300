#!/usr/bin/env python3
"""
Compute the 2-closure of a permutation group action.

Prints the closure order (or Sym(n) for 2-transitive groups), whether the
group is 2-closed, and an element of the closure outside the group.

Usage:
  python compute_closure.py corpus/fixtures/L3_3_on_13.json
  python compute_closure.py corpus/fixtures/extraspecial_27_on_9.json --format json
"""

import argparse
import sys
from pathlib import Path

from errors import BudgetExceeded, DegreeCapExceeded, NotASubgroup
from closure.two_closure import describe_closure, two_closure
from pipeline.analyze import build_action
from pipeline.cli_common import (
    EXIT_BUDGET,
    EXIT_INVALID_INPUT,
    EXIT_OK,
    add_budget_arguments,
    add_group_arguments,
    budgets_from_args,
    emit,
    fail,
    read_group_file,
)
from pipeline.reports import ClosureSummary


def main(argv=None):
    parser = argparse.ArgumentParser(description="Compute the 2-closure of a group action")
    add_group_arguments(parser)
    add_budget_arguments(parser)
    parser.add_argument(
        "-o", "--output",
        type=Path,
        help="Write the result here instead of stdout",
    )
    args = parser.parse_args(argv)
    budgets = budgets_from_args(args)
    gf = read_group_file(args.group_file)

    try:
        action = build_action(gf, budgets, args.one_based)
        result = two_closure(action, degree_cap=budgets.degree_cap, budget=budgets.nodes("2-closure nodes"))
    except (ValueError, NotASubgroup) as e:
        fail(f"{args.group_file}: {e}", EXIT_INVALID_INPUT)
    except (BudgetExceeded, DegreeCapExceeded) as e:
        fail(str(e), EXIT_BUDGET)

    described = describe_closure(result)
    summary = ClosureSummary(
        action=gf.name or args.group_file.stem,
        degree=action.degree,
        group_order=str(action.group.order()),
        **described,
    )
    if args.format == "json":
        emit(summary.model_dump(mode="json", exclude_none=True), args.output)
    else:
        lines = [
            f"action: {summary.action} (degree {summary.degree}, order {summary.group_order})",
            f"closure order: {summary.closure_order}",
            f"closure: {summary.closure}" if isinstance(summary.closure, str) else f"closure generators: {len(summary.closure)}",
            f"2-closed: {'yes' if summary.is_two_closed else 'no'}",
        ]
        if summary.witness_element:
            lines.append(f"witness element: {summary.witness_element}")
        emit("\n".join(lines), args.output)
    if not args.quiet:
        print(f"Closure of {summary.action}: order {summary.closure_order}", file=sys.stderr)
    sys.exit(EXIT_OK)


if __name__ == "__main__":
    main()
