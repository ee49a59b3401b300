"""
Analyze every group file in a directory and flatten the reports into a table.

One row per group file. Per-file errors (unreadable JSON, inconsistent
orders, timeouts) become rows with an "error" column and the run continues.
"""

from __future__ import annotations

import multiprocessing
import time
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Callable, Sequence

import pandas as pd
from pydantic import ValidationError

from errors import BinarityError
from groups.budget import Budgets
from pipeline.analyze import DEFAULT_TESTS, analyze_file
from pipeline.reports import TestReport

ROW_COLUMNS = [
    "source_file",
    "action",
    "degree",
    "group_order",
    "kind",
    "verdict",
    "arity",
    "arity_lower_bound",
    "non_binary_tests",
    "provenance",
    "budget_exceeded",
    "error",
    "time_spent_seconds",
]


def report_row(report: TestReport) -> dict:
    fired = [o for o in report.outcomes if o.non_binary]
    return {
        "source_file": report.source_file,
        "action": report.action,
        "degree": report.degree,
        "group_order": report.group_order,
        "kind": report.kind,
        "verdict": report.verdict,
        "arity": report.arity,
        "arity_lower_bound": report.arity_lower_bound,
        "non_binary_tests": ",".join(o.test for o in fired),
        "provenance": fired[0].provenance if fired else None,
        "budget_exceeded": report.budget_exceeded,
        "error": None,
    }


def _analyze_row(path: Path, tests: Sequence[str], budgets: Budgets | None, oracle: bool | None) -> dict:
    """Table row for one file; recorded errors never propagate."""
    try:
        return report_row(analyze_file(path, tests=tests, budgets=budgets, oracle=oracle))
    except (ValueError, ValidationError, OSError, BinarityError) as e:
        return {"source_file": path.name, "error": str(e)}
    except Exception as e:
        return {"source_file": path.name, "error": f"internal error: {type(e).__name__}: {e}"}


def _send_row(conn, path: Path, tests: Sequence[str], budgets: Budgets | None, oracle: bool | None) -> None:
    conn.send(_analyze_row(path, tests, budgets, oracle))
    conn.close()


def _process_context():
    # fork keeps the parent's imports; spawn elsewhere
    methods = multiprocessing.get_all_start_methods()
    return multiprocessing.get_context("fork" if "fork" in methods else "spawn")


def _analyze_with_timeout(
    path: Path, tests: Sequence[str], budgets: Budgets | None, oracle: bool | None, timeout_seconds: int
) -> dict:
    """Run the analysis in a child process and terminate it after timeout_seconds."""
    ctx = _process_context()
    receiver, sender = ctx.Pipe(duplex=False)
    worker = ctx.Process(target=_send_row, args=(sender, path, tests, budgets, oracle), daemon=True)
    worker.start()
    sender.close()
    try:
        if receiver.poll(timeout_seconds):
            try:
                return receiver.recv()
            except EOFError:
                return {"source_file": path.name, "error": f"worker exited with code {worker.exitcode}"}
        return {"source_file": path.name, "error": f"timeout after {timeout_seconds}s"}
    finally:
        if worker.is_alive():
            worker.terminate()
        worker.join()
        receiver.close()


def process_group_file(
    path: Path,
    tests: Sequence[str] = DEFAULT_TESTS,
    budgets: Budgets | None = None,
    oracle: bool | None = None,
    timeout_seconds: int | None = None,
) -> dict:
    """One table row; errors and timeouts are recorded, never raised."""
    t0 = time.perf_counter()
    if timeout_seconds and timeout_seconds > 0:
        row = _analyze_with_timeout(path, tests, budgets, oracle, timeout_seconds)
    else:
        row = _analyze_row(path, tests, budgets, oracle)
    row["time_spent_seconds"] = round(time.perf_counter() - t0, 2)
    return row


def corpus_run(
    folder: Path,
    tests: Sequence[str] = DEFAULT_TESTS,
    budgets: Budgets | None = None,
    oracle: bool | None = None,
    workers: int = 1,
    timeout_seconds: int | None = None,
    progress: Callable[[int, int, Path], None] | None = None,
) -> list[dict]:
    files = sorted(folder.glob("*.json"))

    def run(item: tuple[int, Path]) -> dict:
        i, path = item
        if progress:
            progress(i, len(files), path)
        return process_group_file(path, tests, budgets, oracle, timeout_seconds)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as ex:
            rows = list(ex.map(run, enumerate(files)))
    else:
        rows = [run(item) for item in enumerate(files)]
    return sorted(rows, key=lambda r: r["source_file"])


def aggregate_to_dataframe(rows: list[dict], timings: bool = True) -> pd.DataFrame:
    """Flatten rows into the corpus table, columns in a fixed order."""
    df = pd.DataFrame(rows, columns=ROW_COLUMNS)
    if not timings:
        df = df.drop(columns=["time_spent_seconds"])
    return df
