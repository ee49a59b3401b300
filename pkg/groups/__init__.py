"""Permutation groups: stabilizer chains, orbits, stabilizers and backtrack searches."""

from groups.backtrack import (
    centralizer,
    conjugating_element,
    normalizer,
    setwise_stabilizer,
    subgroup_search,
)
from groups.budget import Budgets, SearchBudget
from groups.perm_group import (
    PermGroup,
    StabilizerChain,
    commutator,
    conjugacy_classes,
    derived_subgroup,
    element_order,
    group_order,
    is_abelian,
    is_member,
    is_normal,
    normal_closure,
    orbit_of,
    point_stabilizer,
    pointwise_stabilizer,
    schreier_sims,
    subgroup,
    transporter,
    tuple_canonical_form,
)

__all__ = [
    "Budgets",
    "PermGroup",
    "SearchBudget",
    "StabilizerChain",
    "centralizer",
    "commutator",
    "conjugacy_classes",
    "conjugating_element",
    "derived_subgroup",
    "element_order",
    "group_order",
    "is_abelian",
    "is_member",
    "is_normal",
    "normal_closure",
    "normalizer",
    "orbit_of",
    "point_stabilizer",
    "pointwise_stabilizer",
    "schreier_sims",
    "setwise_stabilizer",
    "subgroup",
    "subgroup_search",
    "transporter",
    "tuple_canonical_form",
]
