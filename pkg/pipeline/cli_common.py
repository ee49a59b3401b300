"""Arguments, exit codes and input loading shared by the scripts."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from pydantic import ValidationError

from config import MAX_ELL
from groups.budget import Budgets
from parsers.group_file import GroupFile, load_group_file

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_INVALID_INPUT = 2
EXIT_BUDGET = 3


def add_budget_arguments(parser: argparse.ArgumentParser) -> None:
    defaults = Budgets()
    parser.add_argument(
        "--budget-nodes",
        type=int,
        default=defaults.budget_nodes,
        help=f"Search nodes per backtrack search (default: {defaults.budget_nodes}, env BINARITY_BUDGET_NODES)",
    )
    parser.add_argument(
        "--degree-cap",
        type=int,
        default=defaults.degree_cap,
        help=f"Largest coset action or closure degree (default: {defaults.degree_cap}, env BINARITY_DEGREE_CAP)",
    )
    parser.add_argument(
        "--max-ell",
        type=int,
        default=MAX_ELL,
        help=f"Largest ell tried by Test 1 (default: {MAX_ELL}, env BINARITY_MAX_ELL)",
    )


def add_group_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("group_file", type=Path, help="JSON group file")
    parser.add_argument(
        "--one-based",
        action="store_true",
        help="Points in the file are numbered from 1",
    )
    parser.add_argument(
        "--format",
        choices=["text", "json"],
        default="text",
        help="Output format (default: text)",
    )
    parser.add_argument(
        "-q", "--quiet",
        action="store_true",
        help="Quiet mode",
    )


def budgets_from_args(args: argparse.Namespace) -> Budgets:
    return Budgets(budget_nodes=args.budget_nodes, degree_cap=args.degree_cap, max_ell=args.max_ell)


def fail(message: str, code: int) -> None:
    print(f"Error: {message}", file=sys.stderr)
    sys.exit(code)


def read_group_file(path: Path) -> GroupFile:
    """Load a group file or exit with the invalid-input code."""
    if not path.exists():
        fail(f"{path} not found", EXIT_INVALID_INPUT)
    try:
        return load_group_file(path)
    except (json.JSONDecodeError, ValidationError, ValueError, OSError) as e:
        fail(f"{path}: {e}", EXIT_INVALID_INPUT)


def emit(payload: dict | str, output: Path | None = None) -> None:
    text = payload if isinstance(payload, str) else json.dumps(payload, indent=2, ensure_ascii=False)
    if output:
        output.parent.mkdir(parents=True, exist_ok=True)
        output.write_text(text + "\n", encoding="utf-8")
    else:
        print(text)
