#!/usr/bin/env python3
"""
Test 5: decide non-binarity of G on the cosets of M from M and |G:M| alone.

The group file describes M. omega_size and d come from its point_stabilizer
block or from the command line (command line wins).

Usage:
  python run_test5.py corpus/fixtures/PGL2_19_test5.json
  python run_test5.py corpus/small_transitive/T6_01_C6.json --omega-size 10 --d 2 --exact-condition2
"""

import argparse
import sys
import time
from pathlib import Path

from errors import BudgetExceeded, DegreeCapExceeded
from reductions.alot import Test5Config, test5_alot
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


def main(argv=None):
    parser = argparse.ArgumentParser(description="Divisibility test on the point stabilizer M")
    add_group_arguments(parser)
    add_budget_arguments(parser)
    parser.add_argument(
        "--omega-size",
        type=str,
        default=None,
        help="|G:M| as a decimal integer (arbitrary precision)",
    )
    parser.add_argument(
        "--d",
        type=int,
        default=None,
        help="Prime or prime power d >= 2 not dividing |Omega|-1",
    )
    parser.add_argument(
        "--exact-condition2",
        action="store_true",
        help="Drop actions that provably fail the composition-factor condition",
    )
    parser.add_argument(
        "--exact-condition3",
        action="store_true",
        help="Drop actions that provably fail the kernel condition",
    )
    parser.add_argument(
        "--timings",
        action="store_true",
        help="Include the run time in the report",
    )
    parser.add_argument(
        "-o", "--output",
        type=Path,
        help="Write the report here instead of stdout",
    )
    args = parser.parse_args(argv)
    gf = read_group_file(args.group_file)
    spec = gf.point_stabilizer

    omega_text = args.omega_size or (spec.omega_size if spec else None)
    d = args.d or (spec.d if spec else None)
    if omega_text is None or d is None:
        fail("omega_size and d are required (file point_stabilizer block or --omega-size/--d)", EXIT_INVALID_INPUT)
    if not omega_text.strip().isdigit():
        fail(f"omega_size must be a decimal integer, got {omega_text!r}", EXIT_INVALID_INPUT)
    if d < 2:
        fail("d must be at least 2", EXIT_INVALID_INPUT)

    try:
        M = gf.to_group(args.one_based)
    except ValueError as e:
        fail(f"{args.group_file}: {e}", EXIT_INVALID_INPUT)
    cfg = Test5Config(
        M=M,
        omega_size=int(omega_text),
        d=d,
        relax_condition2=not args.exact_condition2 and (spec.relax_condition2 if spec else True),
        relax_condition3=not args.exact_condition3 and (spec.relax_condition3 if spec else True),
    )
    if not args.quiet:
        print(f"Test 5 on {gf.name or args.group_file.stem} (|M| = {M.order()}, d = {d})...", file=sys.stderr)

    t0 = time.perf_counter()
    try:
        report = test5_alot(cfg, budgets_from_args(args))
    except (BudgetExceeded, DegreeCapExceeded) as e:
        fail(str(e), EXIT_BUDGET)
    if args.timings:
        report.time_spent_seconds = round(time.perf_counter() - t0, 2)

    if args.format == "json":
        emit(report.model_dump(mode="json", exclude_none=True), args.output)
    else:
        lines = [f"conclusion: {report.conclusion} ({report.reason})"]
        for row in report.actions:
            line = f"  degree {row.degree} (|H| = {row.subgroup_order}, |M^Lambda| = {row.image_order}): {row.verdict}"
            if row.filtered:
                line += f" by {row.filtered}"
            if row.provenance:
                line += f" [{row.provenance}]"
            lines.append(line)
        lines.extend(f"  note: {note}" for note in report.notes)
        emit("\n".join(lines), args.output)
    sys.exit(EXIT_BUDGET if report.reason.startswith("skipped") else EXIT_OK)


if __name__ == "__main__":
    main()
