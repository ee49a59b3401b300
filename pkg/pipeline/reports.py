"""Report models written by the scripts."""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field

from binarity.battery import TestOutcome
from binarity.certificates import WitnessCertificate

Verdict = Literal["non-binary", "binary", "inconclusive"]


class TestReport(BaseModel):
    __test__ = False

    action: str = Field(description="Group name or source file stem")
    source_file: Optional[str] = None
    degree: int = Field(description="Degree of the action analyzed (of M for implicit actions)")
    group_order: str = Field(description="Order of the acting group, as a decimal string")
    kind: Literal["explicit", "cosets", "implicit"] = "explicit"
    outcomes: list[TestOutcome] = Field(default_factory=list)
    verdict: Verdict = "inconclusive"
    arity: Optional[int] = Field(default=None, description="Exact arity from the oracle")
    arity_lower_bound: Optional[int] = Field(default=None, description="Oracle lower bound when its budget ran out")
    budget_exceeded: bool = False
    time_spent_seconds: Optional[float] = None

    def first_certificate(self) -> WitnessCertificate | None:
        return next((o.certificate for o in self.outcomes if o.certificate is not None), None)

    def summary_lines(self) -> list[str]:
        lines = [f"action: {self.action} (degree {self.degree}, order {self.group_order}, {self.kind})"]
        for o in self.outcomes:
            line = f"  Test {o.test}: {o.status}"
            if o.provenance:
                line += f" [{o.provenance}]"
            if o.evidence is not None:
                e = o.evidence
                line += f" r_{e.ell}={e.r_ell} > r_2^{e.ell * (e.ell - 1) // 2}={e.bound}"
            if o.reason:
                line += f" ({o.reason})"
            if o.time_spent_seconds is not None:
                line += f" {o.time_spent_seconds}s"
            lines.append(line)
        if self.arity is not None:
            lines.append(f"  oracle arity: {self.arity}")
        elif self.arity_lower_bound is not None:
            lines.append(f"  oracle arity: >= {self.arity_lower_bound}")
        lines.append(f"verdict: {self.verdict}")
        return lines


class ClosureSummary(BaseModel):
    action: str
    degree: int
    group_order: str
    closure_order: str
    closure: list[str] | str = Field(description="Generators of the 2-closure, or Sym(n)")
    is_two_closed: bool
    witness_element: Optional[str] = None


class OrbitCountsReport(BaseModel):
    action: str
    degree: int
    counts: dict[str, dict[int, int]] = Field(description="method -> ell -> r_ell")
    agree: bool
