"""Node counters that turn runaway searches into BudgetExceeded."""

from __future__ import annotations

from pydantic import BaseModel, Field

from config import (
    BUDGET_NODES,
    CLOSURE_CAP,
    DEGREE_CAP,
    ENUMERATION_CAP,
    MAX_ELL,
    TUPLE_BUDGET,
)
from errors import BudgetExceeded


class SearchBudget:
    def __init__(self, limit: int | None = None, name: str = "search nodes"):
        self.limit = BUDGET_NODES if limit is None else limit
        self.name = name
        self.used = 0

    def spend(self, amount: int = 1) -> None:
        self.used += amount
        if self.used > self.limit:
            raise BudgetExceeded(self.name, self.limit, self.used)

    def __repr__(self) -> str:
        return f"SearchBudget({self.name}: {self.used}/{self.limit})"


def ensure_budget(budget: SearchBudget | None, name: str = "search nodes") -> SearchBudget:
    return budget if budget is not None else SearchBudget(name=name)


class Budgets(BaseModel):
    """Caps and budgets for one run; defaults come from config / the environment."""

    budget_nodes: int = Field(default=BUDGET_NODES, ge=1, description="Backtrack search nodes per search")
    degree_cap: int = Field(default=DEGREE_CAP, ge=1, description="Largest coset action or closure degree")
    closure_cap: int = Field(default=CLOSURE_CAP, ge=1, description="Largest degree for the 2-closure search")
    enumeration_cap: int = Field(default=ENUMERATION_CAP, ge=1, description="Largest group enumerated element by element")
    tuple_budget: int = Field(default=TUPLE_BUDGET, ge=1, description="Tuple visits for orbit counts and the oracle")
    max_ell: int = Field(default=MAX_ELL, ge=3, description="Largest ell tried by Test 1")

    def nodes(self, name: str = "search nodes") -> SearchBudget:
        return SearchBudget(self.budget_nodes, name=name)

    def tuples(self, name: str = "tuple visits") -> SearchBudget:
        return SearchBudget(self.tuple_budget, name=name)
