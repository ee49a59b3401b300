"""
Run the binarity tests on one group file.

Explicit and coset actions get the direct tests in the order given, Test 4 on
the suborbits of a point, and the exhaustive oracle when the action is small
enough. A group file with a point_stabilizer block describes M = G_alpha of an
action too large to build: only the abstract Test 4 and Test 5 run.
"""

from __future__ import annotations

import time
from pathlib import Path
from typing import Sequence

from config import ORACLE_MAX_DEGREE, ORACLE_MAX_ORDER
from errors import BudgetExceeded, DegreeCapExceeded
from groups.budget import Budgets
from groups.perm_group import PermGroup
from actions.action_space import ActionSpace, coset_action
from binarity.battery import TestOutcome, run_direct_test
from binarity.oracle import exact_arity
from binarity.outcomes import Inconclusive, LowerBound
from parsers.group_file import GroupFile, load_group_file
from reductions.alot import Test5Config, test5_alot
from reductions.suborbits import SuborbitResult, suborbit_reduction, suborbit_reduction_abstract
from pipeline.reports import TestReport

DEFAULT_TESTS = ("1", "2", "3", "4", "5")


def parse_tests(text: str) -> tuple[str, ...]:
    tests = tuple(t.strip() for t in text.split(",") if t.strip())
    unknown = [t for t in tests if t not in ("1", "2", "3", "3+", "4", "5")]
    if unknown:
        raise ValueError(f"unknown tests: {', '.join(unknown)}")
    return tests


def build_action(gf: GroupFile, budgets: Budgets, one_based: bool = False) -> ActionSpace:
    G = gf.to_group(one_based)
    if gf.subgroup:
        H = PermGroup(gf.subgroup_permutations(one_based), degree=G.degree)
        return coset_action(G, H, degree_cap=budgets.degree_cap, name=gf.name)
    return ActionSpace.explicit(G, name=gf.name)


def _suborbit_outcome(result: SuborbitResult | Inconclusive) -> TestOutcome:
    if isinstance(result, Inconclusive):
        return TestOutcome(test="4", status="inconclusive", reason=result.reason)
    return TestOutcome(
        test="4",
        status="non_binary",
        provenance=result.provenance,
        certificate=result.certificate,
        evidence=result.evidence,
        details={"alpha": result.alpha, "suborbit_size": len(result.suborbit), "inner_test": result.inner_test},
    )


def _timed(fn, timings: bool) -> TestOutcome:
    start = time.perf_counter()
    outcome = fn()
    if timings:
        outcome.time_spent_seconds = round(time.perf_counter() - start, 2)
    return outcome


def _guard(test: str, fn) -> TestOutcome:
    try:
        return fn()
    except (BudgetExceeded, DegreeCapExceeded) as e:
        return TestOutcome(test=test, status="skipped", reason=str(e))


def _analyze_explicit(
    action: ActionSpace,
    tests: Sequence[str],
    budgets: Budgets,
    oracle: bool | None,
    alpha: int,
    timings: bool,
) -> tuple[list[TestOutcome], int | LowerBound | None]:
    outcomes = []
    for test in tests:
        if test in ("1", "2", "3", "3+"):
            outcomes.append(_timed(lambda: run_direct_test(action, test, budgets), timings))
        elif test == "4":
            if not action.group.is_transitive():
                outcomes.append(TestOutcome(test="4", status="not_applicable", reason="action is not transitive"))
                continue
            outcomes.append(
                _timed(lambda: _guard("4", lambda: _suborbit_outcome(suborbit_reduction(action, alpha, budgets))), timings)
            )
        elif test == "5":
            outcomes.append(
                TestOutcome(test="5", status="not_applicable", reason="needs a point_stabilizer block with omega_size and d")
            )

    G = action.group
    in_regime = G.degree <= ORACLE_MAX_DEGREE and G.order() <= ORACLE_MAX_ORDER
    arity = None
    if oracle or (oracle is None and in_regime):
        arity = exact_arity(action, budgets.tuples("oracle candidates"))
    return outcomes, arity


def _analyze_implicit(gf: GroupFile, M: PermGroup, tests, budgets: Budgets, timings: bool) -> list[TestOutcome]:
    spec = gf.point_stabilizer
    outcomes = []
    if "4" in tests:
        for gens in spec.intersections:
            H = PermGroup(GroupFile(degree=M.degree, generators=gens).permutations(), degree=M.degree)
            outcomes.append(
                _timed(lambda: _guard("4", lambda: _suborbit_outcome(suborbit_reduction_abstract(M, H, budgets))), timings)
            )
    if "5" in tests:
        if spec.omega is None or spec.d is None:
            outcomes.append(TestOutcome(test="5", status="not_applicable", reason="omega_size and d are required"))
        else:
            cfg = Test5Config(
                M=M,
                omega_size=spec.omega,
                d=spec.d,
                relax_condition2=spec.relax_condition2,
                relax_condition3=spec.relax_condition3,
            )

            def run5() -> TestOutcome:
                report = test5_alot(cfg, budgets)
                status = "non_binary" if report.conclusion == "non_binary" else "inconclusive"
                return TestOutcome(
                    test="5",
                    status=status,
                    reason=report.reason,
                    provenance=f"Test 5 (d={spec.d})" if status == "non_binary" else None,
                    details=report.model_dump(exclude={"time_spent_seconds"}),
                )

            outcomes.append(_timed(lambda: _guard("5", run5), timings))
    return outcomes


def analyze(
    gf: GroupFile,
    tests: Sequence[str] = DEFAULT_TESTS,
    budgets: Budgets | None = None,
    oracle: bool | None = None,
    alpha: int = 0,
    timings: bool = False,
    one_based: bool = False,
    source: Path | None = None,
) -> TestReport:
    budgets = budgets or Budgets()
    start = time.perf_counter()
    name = gf.name or (source.stem if source else "group")
    arity = None
    if gf.point_stabilizer is not None:
        M = gf.to_group(one_based)
        outcomes = _analyze_implicit(gf, M, tests, budgets, timings)
        report = TestReport(action=name, degree=M.degree, group_order=str(M.order()), kind="implicit", outcomes=outcomes)
    else:
        action = build_action(gf, budgets, one_based)
        outcomes, arity = _analyze_explicit(action, tests, budgets, oracle, alpha, timings)
        report = TestReport(
            action=name,
            degree=action.degree,
            group_order=str(action.group.order()),
            kind="cosets" if action.kind == "cosets" else "explicit",
            outcomes=outcomes,
        )
    if source is not None:
        report.source_file = source.name

    if isinstance(arity, LowerBound):
        report.arity_lower_bound = arity.k
        report.budget_exceeded = True
    elif arity is not None:
        report.arity = arity
    report.budget_exceeded = report.budget_exceeded or any(o.status == "skipped" for o in outcomes)

    if any(o.non_binary for o in outcomes):
        if report.arity == 2:
            raise ArithmeticError(f"{name}: a test reports non-binary but the oracle finds arity 2")
        report.verdict = "non-binary"
    elif report.arity == 2:
        report.verdict = "binary"
    elif report.arity is not None:
        report.outcomes.append(
            TestOutcome(
                test="oracle",
                status="non_binary",
                provenance="exhaustive arity oracle",
                details={"arity": report.arity},
            )
        )
        report.verdict = "non-binary"
    if timings:
        report.time_spent_seconds = round(time.perf_counter() - start, 2)
    return report


def analyze_file(path: Path, **kwargs) -> TestReport:
    return analyze(load_group_file(path), source=path, **kwargs)
