#!/usr/bin/env python3
"""
Check a witness certificate from the file alone.

Exit code 0 when the certificate is verified, 1 when it is rejected and 2
when the file cannot be read.

Usage:
  python verify_certificate.py witness.json
"""

import argparse
import json
import sys
from pathlib import Path

from pydantic import ValidationError

from binarity.certificates import WitnessCertificate, verify_witness
from pipeline.cli_common import EXIT_INVALID_INPUT, emit, fail


def main(argv=None):
    parser = argparse.ArgumentParser(description="Verify a non-binary witness certificate")
    parser.add_argument("certificate", type=Path, help="Certificate JSON file")
    parser.add_argument(
        "--format",
        choices=["text", "json"],
        default="text",
        help="Output format (default: text)",
    )
    args = parser.parse_args(argv)

    if not args.certificate.exists():
        fail(f"{args.certificate} not found", EXIT_INVALID_INPUT)
    try:
        certificate = WitnessCertificate.load(args.certificate)
    except (json.JSONDecodeError, ValidationError, OSError) as e:
        fail(f"{args.certificate}: {e}", EXIT_INVALID_INPUT)

    result = verify_witness(certificate)
    if args.format == "json":
        emit(result.model_dump(mode="json", exclude_none=True))
    else:
        emit("Verified" if result.verified else f"Rejected: {result.reason}")
    sys.exit(0 if result.verified else 1)


if __name__ == "__main__":
    main()
