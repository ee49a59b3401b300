"""
Exhaustive arity oracle for small actions.

The arity is the largest n for which some pair of injective n-tuples is
(n-1)-subtuple complete without being conjugate, and 2 when there is none.
Up to conjugation I is an orbit representative and J agrees with I except in
the last entry, so only those pairs are examined.
"""

from __future__ import annotations

from config import TUPLE_BUDGET
from errors import BudgetExceeded
from groups.budget import SearchBudget
from groups.perm_group import PermGroup, tuple_canonical_form
from binarity.outcomes import LowerBound
from binarity.subtuples import injective_tuple_representatives


def minimal_witness(
    G: PermGroup, length: int, budget: SearchBudget
) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """First (length-1)-subtuple complete, non-conjugate pair of injective tuples."""
    for prefix, stab in injective_tuple_representatives(G, length - 1, budget):
        rest = [p for p in range(G.degree) if p not in prefix]
        for orb in stab.orbits(rest):
            x = orb[0]
            I = prefix + (x,)
            for y in rest:
                if y in orb:
                    continue
                budget.spend()
                J = prefix + (y,)
                if all(
                    tuple_canonical_form(G, I[:k] + I[k + 1 :]) == tuple_canonical_form(G, J[:k] + J[k + 1 :])
                    for k in range(length - 1)
                ):
                    return I, J
    return None


def exact_arity(action, budget: SearchBudget | None = None) -> int | LowerBound:
    G = action.group
    budget = budget or SearchBudget(TUPLE_BUDGET, name="oracle candidates")
    arity = 2
    try:
        for length in range(3, G.degree):
            if minimal_witness(G, length, budget) is not None:
                arity = length
    except BudgetExceeded as e:
        return LowerBound(k=arity, reason=str(e))
    return arity
