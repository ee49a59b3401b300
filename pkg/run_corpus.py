#!/usr/bin/env python3
"""
Analyze every group file in a folder and write one table row per file.

Per-file errors are recorded in the "error" column and the run continues.

Usage:
  python run_corpus.py corpus/small_transitive
  python run_corpus.py corpus/small_transitive -o corpus/corpus_verdicts.csv
  python run_corpus.py corpus/fixtures --tests 1,2,3,4,5 --workers 4 -o verdicts.parquet
"""

import argparse
import sys
from pathlib import Path

from config import SMALL_GROUPS_DIR, WORKERS
from pipeline.analyze import DEFAULT_TESTS, parse_tests
from pipeline.cli_common import EXIT_INVALID_INPUT, EXIT_OK, add_budget_arguments, budgets_from_args, fail
from pipeline.corpus import aggregate_to_dataframe, corpus_run


def main(argv=None):
    parser = argparse.ArgumentParser(description="Run the binarity tests over a folder of group files")
    parser.add_argument(
        "folder",
        type=Path,
        nargs="?",
        default=SMALL_GROUPS_DIR,
        help=f"Folder with JSON group files (default: {SMALL_GROUPS_DIR})",
    )
    parser.add_argument(
        "-o", "--output",
        type=Path,
        help="Output file (CSV or Parquet). If omitted, print CSV to stdout.",
    )
    parser.add_argument(
        "--format",
        choices=["csv", "parquet"],
        help="Output format (inferred from -o extension if not set)",
    )
    parser.add_argument(
        "--tests",
        default=",".join(DEFAULT_TESTS),
        help="Comma-separated tests to run (default: 1,2,3,4,5)",
    )
    parser.add_argument(
        "--oracle",
        action=argparse.BooleanOptionalAction,
        default=None,
        help="Run the exhaustive arity oracle (default: only inside its regime)",
    )
    parser.add_argument(
        "--workers",
        type=int,
        default=WORKERS,
        help=f"Group files analyzed concurrently (default: {WORKERS}, env BINARITY_WORKERS)",
    )
    parser.add_argument(
        "--timeout-per-group",
        type=int,
        default=0,
        metavar="SECONDS",
        help="Record a timeout error after this many seconds per file (default: 0, disabled)",
    )
    parser.add_argument(
        "--timings",
        action="store_true",
        help="Keep the time_spent_seconds column (the table is no longer byte-identical across runs)",
    )
    parser.add_argument(
        "-q", "--quiet",
        action="store_true",
        help="Quiet mode",
    )
    add_budget_arguments(parser)
    args = parser.parse_args(argv)
    verbose = not args.quiet

    if not args.folder.is_dir():
        fail(f"Folder not found: {args.folder}", EXIT_INVALID_INPUT)
    try:
        tests = parse_tests(args.tests)
    except ValueError as e:
        fail(str(e), EXIT_INVALID_INPUT)

    def progress(i: int, total: int, path: Path) -> None:
        if verbose:
            print(f"  [{i+1}/{total}] {path.name}...", file=sys.stderr)

    rows = corpus_run(
        args.folder,
        tests=tests,
        budgets=budgets_from_args(args),
        oracle=args.oracle,
        workers=args.workers,
        timeout_seconds=args.timeout_per_group or None,
        progress=progress,
    )
    df = aggregate_to_dataframe(rows, timings=args.timings)

    if args.output:
        fmt = args.format or args.output.suffix.lstrip(".").lower()
        args.output.parent.mkdir(parents=True, exist_ok=True)
        if fmt == "parquet":
            df.to_parquet(args.output, index=False)
        else:
            df.to_csv(args.output, index=False, encoding="utf-8")
        if verbose:
            print(f"Wrote {len(df)} rows to {args.output}", file=sys.stderr)
    else:
        print(df.to_csv(index=False), end="")

    if verbose:
        errors = int(df["error"].notna().sum()) if len(df) else 0
        print(f"{len(df)} group files, {errors} errors", file=sys.stderr)
    sys.exit(EXIT_OK)


if __name__ == "__main__":
    main()
