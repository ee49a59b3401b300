#!/usr/bin/env python3
"""
r_ell: orbit counts on ell-tuples with distinct entries, by both methods.

Usage:
  python count_orbits.py corpus/small_transitive/T4_4_A4.json --ell-max 4
  python count_orbits.py corpus/fixtures/M11_on_11.json --ell-max 5 --method character_sum
"""

import argparse
import sys
from pathlib import Path

from errors import BudgetExceeded, DegreeCapExceeded, NotASubgroup
from binarity.orbit_counts import orbit_count_table
from pipeline.analyze import build_action
from pipeline.cli_common import (
    EXIT_BUDGET,
    EXIT_INTERNAL,
    EXIT_INVALID_INPUT,
    EXIT_OK,
    add_budget_arguments,
    add_group_arguments,
    budgets_from_args,
    emit,
    fail,
    read_group_file,
)
from pipeline.reports import OrbitCountsReport


def main(argv=None):
    parser = argparse.ArgumentParser(description="Count orbits on ell-tuples with distinct entries")
    add_group_arguments(parser)
    add_budget_arguments(parser)
    parser.add_argument(
        "--ell-max",
        type=int,
        default=4,
        help="Count r_1 .. r_ell_max (default: 4)",
    )
    parser.add_argument(
        "--method",
        choices=["character_sum", "direct_orbit", "both"],
        default="both",
        help="Counting method (default: both, and check they agree)",
    )
    parser.add_argument(
        "-o", "--output",
        type=Path,
        help="Write the result here instead of stdout",
    )
    args = parser.parse_args(argv)
    if args.ell_max < 1:
        fail("--ell-max must be at least 1", EXIT_INVALID_INPUT)
    budgets = budgets_from_args(args)
    gf = read_group_file(args.group_file)
    methods = ["character_sum", "direct_orbit"] if args.method == "both" else [args.method]

    try:
        action = build_action(gf, budgets, args.one_based)
        counts = {
            m: orbit_count_table(action, args.ell_max, method=m, cap=budgets.enumeration_cap, budget=budgets.tuples()).counts
            for m in methods
        }
    except (ValueError, NotASubgroup) as e:
        fail(f"{args.group_file}: {e}", EXIT_INVALID_INPUT)
    except (BudgetExceeded, DegreeCapExceeded) as e:
        fail(str(e), EXIT_BUDGET)

    tables = list(counts.values())
    report = OrbitCountsReport(
        action=gf.name or args.group_file.stem,
        degree=action.degree,
        counts=counts,
        agree=all(t == tables[0] for t in tables),
    )
    if args.format == "json":
        emit(report.model_dump(mode="json"), args.output)
    else:
        lines = [f"action: {report.action} (degree {report.degree})"]
        for ell in range(1, args.ell_max + 1):
            values = ", ".join(f"{m}={counts[m][ell]}" for m in methods)
            lines.append(f"  r_{ell}: {values}")
        emit("\n".join(lines), args.output)
    if not report.agree:
        print("Error: the counting methods disagree", file=sys.stderr)
        sys.exit(EXIT_INTERNAL)
    sys.exit(EXIT_OK)


if __name__ == "__main__":
    main()
