"""
Fixed-point counts of elements and subgroups.

For an action of G on the cosets of M with |Omega| points:

    fix(g)    = |Omega| * |M ∩ g^G| / |g^G|
              = sum over M-classes g_i fusing into g^G of |C_G(g)| / |C_M(g_i)|
    |Fix(V)|  = |Omega| * |{V^x : V^x <= M}| / |V^G|

All arithmetic is exact; inputs that do not divide raise NonIntegralFormula.
"""

from __future__ import annotations

from typing import Literal, Sequence

from pydantic import BaseModel, Field

from errors import NonIntegralFormula, NotAMember
from perms.permutation import Permutation, format_permutation

FixSource = Literal["direct_count", "class_formula"]


class FixData(BaseModel):
    element: str = Field(description="Cycle notation or a class label")
    fix_count: int = Field(ge=0)
    source: FixSource


def _positive(**values: int) -> None:
    for name, value in values.items():
        if value <= 0:
            raise ValueError(f"{name} must be positive, got {value}")


def _exact(numerator: int, denominator: int) -> int:
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise NonIntegralFormula(f"{numerator}/{denominator} is not an integer")
    return quotient


def fix_count_direct(action, g: Permutation) -> FixData:
    """Count fixed points of g; parent elements of a coset or induced action are mapped first."""
    if g.degree != action.degree:
        g = action.image_of(g)
    if g not in action.group:
        raise NotAMember(f"{format_permutation(g)} is not in the acting group")
    count = sum(1 for i, j in enumerate(g.images) if i == j)
    return FixData(element=format_permutation(g), fix_count=count, source="direct_count")


def fix_count_formula(omega_size: int, class_in_M: int, class_in_G: int) -> int:
    _positive(omega_size=omega_size, class_in_G=class_in_G)
    if class_in_M < 0:
        raise ValueError(f"class_in_M must be nonnegative, got {class_in_M}")
    return _exact(omega_size * class_in_M, class_in_G)


def fix_count_centralizer(centralizer_in_G: int, centralizers_in_M: Sequence[int]) -> int:
    _positive(centralizer_in_G=centralizer_in_G)
    total = 0
    for c in centralizers_in_M:
        _positive(centralizer_in_M=c)
        total += _exact(centralizer_in_G, c)
    return total


def fix_count_subgroup(omega_size: int, conjugates_in_M: int, class_size: int) -> int:
    """|Fix(V)| from the number of G-conjugates of V inside M and |V^G|."""
    return fix_count_formula(omega_size, conjugates_in_M, class_size)


def added_inequality_holds(fix_g: int, fix_v: int) -> bool:
    return fix_v < fix_g


def class_fix_data(label: str, omega_size: int, class_in_M: int, class_in_G: int) -> FixData:
    return FixData(
        element=label,
        fix_count=fix_count_formula(omega_size, class_in_M, class_in_G),
        source="class_formula",
    )
