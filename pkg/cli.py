#!/usr/bin/env python3
"""
Single entry point: python cli.py <subcommand> [args...]

Subcommands: analyze, closure, arity, rell, test5, verify, corpus. Each one
forwards its arguments to the matching script.
"""

import sys

import analyze_action
import compute_arity
import compute_closure
import count_orbits
import run_corpus
import run_test5
import verify_certificate

SUBCOMMANDS = {
    "analyze": analyze_action.main,
    "closure": compute_closure.main,
    "arity": compute_arity.main,
    "rell": count_orbits.main,
    "test5": run_test5.main,
    "verify": verify_certificate.main,
    "corpus": run_corpus.main,
}


def main(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    if not argv or argv[0] in ("-h", "--help"):
        print(__doc__.strip())
        sys.exit(0 if argv else 2)
    command, rest = argv[0], argv[1:]
    if command not in SUBCOMMANDS:
        print(f"Error: unknown subcommand {command!r}; choose from {', '.join(SUBCOMMANDS)}", file=sys.stderr)
        sys.exit(2)
    SUBCOMMANDS[command](rest)


if __name__ == "__main__":
    main()
