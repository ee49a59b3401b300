#!/usr/bin/env python3
"""
Exact arity of a small action by exhaustive search.

Meant for degree <= 8 and order <= 5000; larger inputs are refused unless
--force is given. A search that runs out of its tuple budget prints a lower
bound and exits with code 3.

Usage:
  python compute_arity.py corpus/small_transitive/T4_4_A4.json
"""

import argparse
import sys
from pathlib import Path

from config import ORACLE_MAX_DEGREE, ORACLE_MAX_ORDER, TUPLE_BUDGET
from errors import DegreeCapExceeded, NotASubgroup
from groups.budget import SearchBudget
from binarity.oracle import exact_arity
from binarity.outcomes import LowerBound
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


def main(argv=None):
    parser = argparse.ArgumentParser(description="Exact arity of a small permutation group action")
    add_group_arguments(parser)
    add_budget_arguments(parser)
    parser.add_argument(
        "--tuple-budget",
        type=int,
        default=TUPLE_BUDGET,
        help=f"Candidate pairs examined before giving up (default: {TUPLE_BUDGET}, env BINARITY_TUPLE_BUDGET)",
    )
    parser.add_argument(
        "--force",
        action="store_true",
        help=f"Run outside the oracle regime (degree <= {ORACLE_MAX_DEGREE}, order <= {ORACLE_MAX_ORDER})",
    )
    parser.add_argument(
        "-o", "--output",
        type=Path,
        help="Write the result here instead of stdout",
    )
    args = parser.parse_args(argv)
    gf = read_group_file(args.group_file)
    try:
        action = build_action(gf, budgets_from_args(args), args.one_based)
    except (ValueError, NotASubgroup) as e:
        fail(f"{args.group_file}: {e}", EXIT_INVALID_INPUT)
    except DegreeCapExceeded as e:
        fail(str(e), EXIT_BUDGET)

    G = action.group
    if not args.force and (G.degree > ORACLE_MAX_DEGREE or G.order() > ORACLE_MAX_ORDER):
        fail(
            f"degree {G.degree}, order {G.order()} is outside the oracle regime; use --force",
            EXIT_INVALID_INPUT,
        )

    result = exact_arity(action, SearchBudget(args.tuple_budget, name="oracle candidates"))
    name = gf.name or args.group_file.stem
    if isinstance(result, LowerBound):
        payload = {"action": name, "arity_lower_bound": result.k, "reason": result.reason}
        text = f"{name}: arity >= {result.k} ({result.reason})"
    else:
        payload = {"action": name, "arity": result, "binary": result == 2}
        text = f"{name}: arity {result}" + (" (binary)" if result == 2 else "")
    emit(payload if args.format == "json" else text, args.output)
    sys.exit(EXIT_BUDGET if isinstance(result, LowerBound) else EXIT_OK)


if __name__ == "__main__":
    main()
