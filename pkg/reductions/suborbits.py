"""
Test 4: run the battery on the point stabilizer's action on a suborbit.

If G_alpha is not binary on a G_alpha-orbit Lambda, then G is not binary: a
witness (I, J) for G_alpha^Lambda becomes ((alpha, I), (alpha, J)) for G.
The work depends on |G_alpha| and |Lambda| only, never on |Omega|.
"""

from __future__ import annotations

from typing import Optional

from pydantic import BaseModel, Field

from errors import BudgetExceeded, DegreeCapExceeded
from groups.budget import Budgets
from groups.perm_group import PermGroup
from actions.action_space import coset_action, induced_action
from binarity.battery import SUB_BATTERY, TestOutcome, first_non_binary, run_battery
from binarity.certificates import WitnessCertificate, lift_suborbit_certificate, verify_witness
from binarity.outcomes import CharacterEvidence, Inconclusive


class SuborbitResult(BaseModel):
    alpha: Optional[int] = Field(default=None, description="Fixed point; None for the abstract form")
    suborbit: list[int] = Field(description="Points of Lambda (or the coset degree in the abstract form)")
    inner_test: str = Field(description="Battery test that fired on the smaller action")
    certificate: Optional[WitnessCertificate] = Field(default=None, description="Witness for G itself")
    evidence: Optional[CharacterEvidence] = Field(default=None, description="Orbit count evidence for the smaller action")
    provenance: str


def _suborbits(G: PermGroup, alpha: int) -> list[list[int]]:
    stab = G.point_stabilizer(alpha)
    orbits = stab.orbits(p for p in range(G.degree) if p != alpha)
    return sorted(orbits, key=lambda orb: (len(orb), orb[0]))


def suborbit_reduction(
    action,
    alpha: int = 0,
    budgets: Budgets | None = None,
    tests=SUB_BATTERY,
) -> SuborbitResult | Inconclusive:
    G = action.group
    if not G.is_transitive():
        raise ValueError("Test 4 needs a transitive action")
    budgets = budgets or Budgets()
    stab = G.point_stabilizer(alpha)
    skipped = []
    for lam in _suborbits(G, alpha):
        if len(lam) < 3:
            continue
        try:
            inner = induced_action(stab, lam, budget=budgets.nodes("setwise stabilizer"))
        except (BudgetExceeded, DegreeCapExceeded) as e:
            skipped.append(str(e))
            continue
        hit = first_non_binary(run_battery(inner, tests, budgets))
        if hit is None:
            continue
        provenance = f"Test 4 via suborbit of size {len(lam)}"
        if hit.certificate is not None:
            lifted = lift_suborbit_certificate(hit.certificate, inner, alpha, G, provenance=provenance)
            if lifted is None or not verify_witness(lifted).verified:
                raise ArithmeticError("suborbit witness did not lift to a witness for G")
            return SuborbitResult(alpha=alpha, suborbit=lam, inner_test=hit.test, certificate=lifted, provenance=provenance)
        return SuborbitResult(alpha=alpha, suborbit=lam, inner_test=hit.test, evidence=hit.evidence, provenance=provenance)
    reason = "every suborbit action is inconclusive"
    if skipped:
        reason += f" ({len(skipped)} skipped: {skipped[0]})"
    return Inconclusive(reason=reason)


def suborbit_reduction_abstract(
    M: PermGroup,
    H: PermGroup,
    budgets: Budgets | None = None,
    tests=SUB_BATTERY,
) -> SuborbitResult | Inconclusive:
    """Battery on M acting on the cosets of H = M ∩ M^g, without building G's action."""
    budgets = budgets or Budgets()
    try:
        inner = coset_action(M, H, degree_cap=budgets.degree_cap)
    except DegreeCapExceeded as e:
        return Inconclusive(reason=str(e))
    outcomes: list[TestOutcome] = run_battery(inner, tests, budgets)
    hit = first_non_binary(outcomes)
    if hit is None:
        return Inconclusive(reason=f"battery inconclusive on the degree-{inner.degree} coset action")
    provenance = f"Test 4 via the degree-{inner.degree} coset action of M"
    if hit.certificate is not None and not verify_witness(hit.certificate).verified:
        raise ArithmeticError(f"witness for the degree-{inner.degree} coset action does not verify")
    return SuborbitResult(
        suborbit=list(range(inner.degree)),
        inner_test=hit.test,
        certificate=hit.certificate,
        evidence=hit.evidence,
        provenance=provenance,
    )
