"""Test battery orchestration, reports and corpus tables."""

from pipeline.analyze import DEFAULT_TESTS, analyze, analyze_file, build_action, parse_tests
from pipeline.corpus import aggregate_to_dataframe, corpus_run, process_group_file, report_row
from pipeline.reports import ClosureSummary, OrbitCountsReport, TestReport, Verdict

__all__ = [
    "DEFAULT_TESTS",
    "ClosureSummary",
    "OrbitCountsReport",
    "TestReport",
    "Verdict",
    "aggregate_to_dataframe",
    "analyze",
    "analyze_file",
    "build_action",
    "corpus_run",
    "parse_tests",
    "process_group_file",
    "report_row",
]
