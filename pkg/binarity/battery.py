"""
The direct tests as one battery.

Each test produces a TestOutcome. Budget and cap overruns become "skipped"
outcomes so a battery always finishes; a "non_binary" outcome carries either
a certificate that verify_witness accepts or character evidence.
"""

from __future__ import annotations

import time
from typing import Literal, Optional, Sequence

from pydantic import BaseModel, Field

from errors import BudgetExceeded, DegreeCapExceeded
from groups.budget import Budgets
from binarity.certificates import WitnessCertificate, verify_witness
from binarity.orbit_counts import test1_character_bound
from binarity.outcomes import CharacterEvidence, Inconclusive
from binarity.subtuples import tuple_scan, witness_from_closure

OutcomeStatus = Literal["non_binary", "inconclusive", "skipped", "not_applicable"]

DIRECT_TESTS = ("1", "2", "3")
# order used inside Test 4 and Test 5: cheapest first
SUB_BATTERY = ("1", "3", "2")


class TestOutcome(BaseModel):
    __test__ = False

    test: str = Field(description="Test label: 1, 2, 3, 3+, 4, 5, M2 or added")
    status: OutcomeStatus
    reason: Optional[str] = None
    provenance: Optional[str] = None
    certificate: Optional[WitnessCertificate] = None
    evidence: Optional[CharacterEvidence] = None
    details: Optional[dict] = Field(default=None, description="Test-specific extras (suborbit, per-action rows)")
    time_spent_seconds: Optional[float] = None

    @property
    def non_binary(self) -> bool:
        return self.status == "non_binary"


def _from_result(test: str, result, provenance: str) -> TestOutcome:
    if isinstance(result, WitnessCertificate):
        verification = verify_witness(result)
        if not verification.verified:
            raise ArithmeticError(f"Test {test} produced a certificate that fails verification: {verification.reason}")
        return TestOutcome(test=test, status="non_binary", provenance=result.provenance or provenance, certificate=result)
    if isinstance(result, CharacterEvidence):
        return TestOutcome(test=test, status="non_binary", provenance=provenance, evidence=result)
    if isinstance(result, Inconclusive):
        return TestOutcome(test=test, status="inconclusive", reason=result.reason)
    return TestOutcome(test=test, status="not_applicable", reason=getattr(result, "reason", None))


def run_direct_test(action, test: str, budgets: Budgets | None = None) -> TestOutcome:
    """Run Test 1, 2, 3 or 3+ (the 4-tuple scan) on an action."""
    budgets = budgets or Budgets()
    try:
        if test == "1":
            result = test1_character_bound(
                action, budgets.max_ell, cap=budgets.enumeration_cap, budget=budgets.tuples("orbit counts")
            )
            provenance = "Test 1 (orbit count bound)"
        elif test == "2":
            result = witness_from_closure(
                action,
                budget=budgets.nodes("2-closure nodes"),
                closure_cap=budgets.closure_cap,
                degree_cap=budgets.degree_cap,
            )
            provenance = "Test 2 (2-closure)"
        elif test == "3":
            result = tuple_scan(action, 3, budget=budgets.nodes("triple scan"), provenance="Test 3 (triple scan)")
            provenance = "Test 3 (triple scan)"
        elif test == "3+":
            result = tuple_scan(action, 4, budget=budgets.nodes("4-tuple scan"), provenance="Test 3 (4-tuple scan)")
            provenance = "Test 3 (4-tuple scan)"
        else:
            raise ValueError(f"unknown direct test {test!r}")
    except (BudgetExceeded, DegreeCapExceeded) as e:
        return TestOutcome(test=test, status="skipped", reason=str(e))
    return _from_result(test, result, provenance)


def run_battery(
    action,
    tests: Sequence[str] = SUB_BATTERY,
    budgets: Budgets | None = None,
    stop_at_first: bool = True,
    timings: bool = False,
) -> list[TestOutcome]:
    outcomes = []
    for test in tests:
        start = time.perf_counter()
        outcome = run_direct_test(action, test, budgets)
        if timings:
            outcome.time_spent_seconds = round(time.perf_counter() - start, 2)
        outcomes.append(outcome)
        if stop_at_first and outcome.non_binary:
            break
    return outcomes


def first_non_binary(outcomes: Sequence[TestOutcome]) -> TestOutcome | None:
    return next((o for o in outcomes if o.non_binary), None)
