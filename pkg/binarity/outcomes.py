"""Result values returned by the tests and witness lemmas."""

from typing import Literal, Optional

from pydantic import BaseModel, Field


class Inconclusive(BaseModel):
    kind: Literal["inconclusive"] = "inconclusive"
    reason: str = Field(description="Why the test could not conclude")


class NotApplicable(BaseModel):
    kind: Literal["not_applicable"] = "not_applicable"
    reason: str = Field(description="First hypothesis that failed")


class CharacterEvidence(BaseModel):
    """r_ell exceeds the bound a binary action must satisfy."""

    kind: Literal["character_bound"] = "character_bound"
    ell: int
    r_ell: int
    r_2: int
    bound: int


class LowerBound(BaseModel):
    kind: Literal["lower_bound"] = "lower_bound"
    k: int = Field(description="The arity is at least k")
    reason: str = ""


class Verification(BaseModel):
    verified: bool
    reason: Optional[str] = None

    @classmethod
    def ok(cls) -> "Verification":
        return cls(verified=True)

    @classmethod
    def rejected(cls, reason: str) -> "Verification":
        return cls(verified=False, reason=reason)
