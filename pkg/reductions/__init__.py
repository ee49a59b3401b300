"""Fixed-point formulas, witness lemmas, suborbit reduction (Test 4) and the divisibility test (Test 5)."""

from reductions.alot import (
    CompositionFactor,
    Test5Action,
    Test5Config,
    Test5Report,
    composition_factors,
    condition2_fails,
    condition3_fails,
    normal_subgroups,
    normal_subgroups_of_order,
    test5_alot,
)
from reductions.fixed_points import (
    FixData,
    added_inequality_holds,
    class_fix_data,
    fix_count_centralizer,
    fix_count_direct,
    fix_count_formula,
    fix_count_subgroup,
)
from reductions.lemmas import lemma_added_witness, lemma_m2_witness, m2_points, witness_on
from reductions.overgroups import (
    overgroups_of,
    p_subgroups_of_order,
    prime_power_overgroups,
    sylow_overgroups,
    sylow_subgroup,
)
from reductions.suborbits import SuborbitResult, suborbit_reduction, suborbit_reduction_abstract

__all__ = [
    "CompositionFactor",
    "FixData",
    "SuborbitResult",
    "Test5Action",
    "Test5Config",
    "Test5Report",
    "added_inequality_holds",
    "class_fix_data",
    "composition_factors",
    "condition2_fails",
    "condition3_fails",
    "fix_count_centralizer",
    "fix_count_direct",
    "fix_count_formula",
    "fix_count_subgroup",
    "lemma_added_witness",
    "lemma_m2_witness",
    "m2_points",
    "normal_subgroups",
    "normal_subgroups_of_order",
    "overgroups_of",
    "p_subgroups_of_order",
    "prime_power_overgroups",
    "suborbit_reduction",
    "suborbit_reduction_abstract",
    "sylow_overgroups",
    "sylow_subgroup",
    "test5_alot",
    "witness_on",
]
