#!/usr/bin/env python3
"""
Run the binarity tests on a group file and print a verdict.

The action is the group on its points, or on the right cosets of "subgroup"
when the file has one. A file with a "point_stabilizer" block runs Test 4
(abstract form) and Test 5 for the implicit action instead.

Usage:
  python analyze_action.py corpus/small_transitive/T4_4_A4.json
  python analyze_action.py corpus/fixtures/L3_3_on_13.json --tests 2 --emit-witness witness.json
  python analyze_action.py corpus/fixtures/PGL2_19_test5.json --format json -o report.json
"""

import argparse
import sys
from pathlib import Path

from errors import BudgetExceeded, DegreeCapExceeded, NotASubgroup
from pipeline.analyze import DEFAULT_TESTS, analyze, parse_tests
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


def main(argv=None):
    parser = argparse.ArgumentParser(description="Decide whether a permutation group action is binary")
    add_group_arguments(parser)
    add_budget_arguments(parser)
    parser.add_argument(
        "--tests",
        default=",".join(DEFAULT_TESTS),
        help="Comma-separated tests to run: 1, 2, 3, 3+ (4-tuple scan), 4, 5 (default: 1,2,3,4,5)",
    )
    parser.add_argument(
        "--oracle",
        action=argparse.BooleanOptionalAction,
        default=None,
        help="Run the exhaustive arity oracle (default: only for degree <= 8 and order <= 5000)",
    )
    parser.add_argument(
        "--alpha",
        type=int,
        default=0,
        help="Point whose suborbits Test 4 uses (default: 0)",
    )
    parser.add_argument(
        "--emit-witness",
        type=Path,
        default=None,
        metavar="PATH",
        help="Write the first witness certificate found to PATH",
    )
    parser.add_argument(
        "--timings",
        action="store_true",
        help="Include per-test timings (reports are no longer byte-identical across runs)",
    )
    parser.add_argument(
        "-o", "--output",
        type=Path,
        help="Write the report here instead of stdout",
    )
    args = parser.parse_args(argv)
    verbose = not args.quiet

    try:
        tests = parse_tests(args.tests)
    except ValueError as e:
        fail(str(e), EXIT_INVALID_INPUT)
    gf = read_group_file(args.group_file)
    if verbose:
        print(f"Analyzing {args.group_file.name} (tests {','.join(tests)})...", file=sys.stderr)

    try:
        report = analyze(
            gf,
            tests=tests,
            budgets=budgets_from_args(args),
            oracle=args.oracle,
            alpha=args.alpha,
            timings=args.timings,
            one_based=args.one_based,
            source=args.group_file,
        )
    except (ValueError, NotASubgroup) as e:
        fail(f"{args.group_file}: {e}", EXIT_INVALID_INPUT)
    except (BudgetExceeded, DegreeCapExceeded) as e:
        fail(str(e), EXIT_BUDGET)
    except Exception as e:
        fail(f"internal error: {e}", EXIT_INTERNAL)

    if args.format == "json":
        emit(report.model_dump(mode="json", by_alias=True, exclude_none=True), args.output)
    else:
        emit("\n".join(report.summary_lines()), args.output)

    certificate = report.first_certificate()
    if args.emit_witness:
        if certificate is None:
            if verbose:
                print("No witness certificate to write", file=sys.stderr)
        else:
            certificate.save(args.emit_witness)
            if verbose:
                print(f"Wrote witness to {args.emit_witness}", file=sys.stderr)

    if report.budget_exceeded and report.verdict == "inconclusive":
        sys.exit(EXIT_BUDGET)
    sys.exit(EXIT_OK)


if __name__ == "__main__":
    main()
