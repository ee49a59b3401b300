"""
Test 5: the divisibility criterion on the point stabilizer M.

Only |Omega| = |G:M|, d and M itself are needed. If d does not divide
|Omega| - 1 and every transitive action of M of degree > 1 not divisible by d
that passes the filters is non-binary, the primitive action of G on the cosets
of M is non-binary.

The filters are the composition-factor condition (2) and the kernel condition
(3). Both default to relaxed (every candidate action is tested). In exact mode
an action is dropped only when the condition provably fails.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, NamedTuple, Optional

from pydantic import BaseModel, Field
from sympy import factorint
from sympy.combinatorics import Permutation as SympyPermutation
from sympy.combinatorics import PermutationGroup as SympyPermutationGroup
from sympy.combinatorics.homomorphisms import is_isomorphic

from errors import BudgetExceeded, DegreeCapExceeded
from groups.budget import Budgets
from groups.perm_group import PermGroup, conjugacy_classes, derived_subgroup, is_abelian, normal_closure
from actions.action_space import coset_action
from binarity.battery import SUB_BATTERY, first_non_binary, run_battery
from reductions.overgroups import prime_power_overgroups, sylow_overgroups

# largest groups handed to the normal-subgroup search and the isomorphism test
NORMAL_SEARCH_CAP = 10**4


@dataclass
class Test5Config:
    __test__ = False

    M: PermGroup
    omega_size: int
    d: int
    relax_condition2: bool = True
    relax_condition3: bool = True


class CompositionFactor(NamedTuple):
    order: int
    cyclic: bool


class Test5Action(BaseModel):
    degree: int
    subgroup_order: int
    image_order: int = Field(description="|M^Lambda|")
    filtered: Optional[str] = Field(default=None, description="Condition that excluded the action")
    verdict: Literal["non_binary", "inconclusive", "filtered"]
    provenance: Optional[str] = None


class Test5Report(BaseModel):
    __test__ = False

    conclusion: Literal["non_binary", "inconclusive"]
    reason: str
    omega_size: str
    d: int
    actions: list[Test5Action] = Field(default_factory=list)
    notes: list[str] = Field(default_factory=list, description="Filters that could not be applied")
    time_spent_seconds: Optional[float] = None


def to_sympy(G: PermGroup) -> SympyPermutationGroup:
    gens = [SympyPermutation(g.as_list()) for g in G.generators] or [SympyPermutation(list(range(G.degree)))]
    return SympyPermutationGroup(gens)


def condition2_fails(factors: list[CompositionFactor], image_order: int) -> bool:
    """A factor whose order does not divide |M^Lambda| cannot be a section of it."""
    return any(image_order % f.order for f in factors)


def _fingerprint(G: PermGroup, cap: int) -> tuple:
    orders: dict[int, int] = {}
    for g in G.elements(cap):
        orders[g.order()] = orders.get(g.order(), 0) + 1
    return G.order(), is_abelian(G), tuple(sorted(orders.items()))


def normal_subgroups(H: PermGroup, cap: int = NORMAL_SEARCH_CAP, divides: int | None = None) -> list[PermGroup]:
    """Normal subgroups of H as joins of normal closures of classes.

    With `divides`, only subgroups whose order divides it are built.
    """
    def admit(N: PermGroup) -> bool:
        return divides is None or divides % N.order() == 0

    closures: list[PermGroup] = []
    for cls in conjugacy_classes(H, cap):
        N = normal_closure(H, [cls[0]])
        if admit(N) and not any(N.same_as(K) for K in closures):
            closures.append(N)
    lattice = list(closures)
    for N in lattice:
        for C in closures:
            J = PermGroup(N.generators + C.generators, degree=H.degree)
            if admit(J) and not any(J.same_as(K) for K in lattice):
                lattice.append(J)
    return lattice


def normal_subgroups_of_order(H: PermGroup, order: int, cap: int = NORMAL_SEARCH_CAP) -> list[PermGroup]:
    return [N for N in normal_subgroups(H, cap, divides=order) if N.order() == order]


def composition_factors(M: PermGroup, cap: int = NORMAL_SEARCH_CAP) -> list[CompositionFactor]:
    """Orders of the composition factors, top to bottom; a prime order means cyclic.

    Abelian layers of the derived series split into their prime factors. A
    perfect term P is cut at a largest proper normal subgroup N, so P/N is
    simple. Raises BudgetExceeded when a perfect term has more than cap elements.
    """
    factors: list[CompositionFactor] = []
    G = M
    while G.order() > 1:
        D = derived_subgroup(G)
        if D.order() < G.order():
            for p, e in sorted(factorint(G.order() // D.order()).items()):
                factors.extend([CompositionFactor(order=p, cyclic=True)] * e)
        else:
            proper = [N for N in normal_subgroups(G, cap) if N.order() < G.order()]
            D = max(proper, key=lambda N: N.order(), default=PermGroup.trivial(G.degree))
            factors.append(CompositionFactor(order=G.order() // D.order(), cyclic=False))
        G = D
    return factors


def condition3_fails(kernel: PermGroup, H: PermGroup, cap: int = NORMAL_SEARCH_CAP) -> bool:
    """True only when no normal subgroup of H other than the kernel is isomorphic to it."""
    if kernel.is_trivial() or kernel.order() == 1:
        return False
    if H.order() > cap:
        return False
    target = _fingerprint(kernel, cap)
    for N in normal_subgroups_of_order(H, kernel.order(), cap):
        if N.same_as(kernel):
            continue
        if _fingerprint(N, cap) != target:
            continue
        if is_isomorphic(to_sympy(N), to_sympy(kernel)):
            return False
    return True


def candidate_subgroups(M: PermGroup, d: int, budgets: Budgets) -> list[PermGroup]:
    (p, a), = factorint(d).items()
    nodes = budgets.nodes("overgroup closure")
    if a == 1:
        groups = sylow_overgroups(M, p, budget=nodes, cap=budgets.enumeration_cap)
    else:
        groups = prime_power_overgroups(M, p, a, budget=nodes, cap=budgets.enumeration_cap)
    return [H for H in groups if H.order() < M.order() and (M.order() // H.order()) % d]


def test5_alot(cfg: Test5Config, budgets: Budgets | None = None, tests=SUB_BATTERY) -> Test5Report:
    budgets = budgets or Budgets()
    M, d = cfg.M, cfg.d
    if d < 2:
        raise ValueError("d must be at least 2")

    notes: list[str] = []

    def report(conclusion, reason, actions=()):
        return Test5Report(
            conclusion=conclusion,
            reason=reason,
            omega_size=str(cfg.omega_size),
            d=d,
            actions=list(actions),
            notes=notes,
        )

    if (cfg.omega_size - 1) % d == 0:
        return report("inconclusive", f"d={d} divides |Omega|-1")
    if M.is_trivial():
        return report("inconclusive", "M is trivial")
    if len(factorint(d)) != 1:
        return report("inconclusive", f"d={d} is not a prime power")

    try:
        candidates = candidate_subgroups(M, d, budgets)
    except (BudgetExceeded, DegreeCapExceeded) as e:
        return report("inconclusive", f"skipped: {e}")
    factors = None
    if not cfg.relax_condition2:
        try:
            factors = composition_factors(M, min(NORMAL_SEARCH_CAP, budgets.enumeration_cap))
        except BudgetExceeded as e:
            notes.append(f"condition (2) not applied: {e}")

    rows: list[Test5Action] = []
    for H in candidates:
        try:
            action = coset_action(M, H, degree_cap=budgets.degree_cap)
        except DegreeCapExceeded as e:
            return report("inconclusive", f"skipped: {e}", rows)
        image_order = action.group.order()
        row = dict(degree=action.degree, subgroup_order=H.order(), image_order=image_order)
        if factors is not None and condition2_fails(factors, image_order):
            rows.append(Test5Action(**row, filtered="condition (2)", verdict="filtered"))
            continue
        if not cfg.relax_condition3:
            try:
                fails = condition3_fails(action.kernel(budgets.enumeration_cap), H)
            except BudgetExceeded:
                fails = False
            if fails:
                rows.append(Test5Action(**row, filtered="condition (3)", verdict="filtered"))
                continue
        hit = first_non_binary(run_battery(action, tests, budgets))
        if hit is None:
            rows.append(Test5Action(**row, verdict="inconclusive"))
        else:
            rows.append(Test5Action(**row, verdict="non_binary", provenance=hit.provenance))

    surviving = [r for r in rows if r.verdict != "filtered"]
    if any(r.verdict == "inconclusive" for r in surviving):
        degrees = sorted(r.degree for r in surviving if r.verdict == "inconclusive")
        return report("inconclusive", f"actions of degree {degrees} are not shown non-binary", rows)
    if not surviving:
        return report("non_binary", "no action of M passes the filters, so G is not binary", rows)
    return report("non_binary", f"every action of degree not divisible by d={d} is non-binary, so G is not binary", rows)


test5_alot.__test__ = False
