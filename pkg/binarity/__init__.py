"""Direct binarity tests, witness certificates and the exhaustive arity oracle."""

from binarity.battery import SUB_BATTERY, TestOutcome, first_non_binary, run_battery, run_direct_test
from binarity.certificates import (
    WitnessCertificate,
    build_certificate,
    certificate_from_permutation,
    lift_induced_certificate,
    lift_suborbit_certificate,
    verify_witness,
)
from binarity.oracle import exact_arity, minimal_witness
from binarity.orbit_counts import OrbitCounts, fixed_point_histogram, orbit_count_table, r_ell, test1_character_bound
from binarity.outcomes import CharacterEvidence, Inconclusive, LowerBound, NotApplicable, Verification
from binarity.subtuples import (
    SubtupleCompleteness,
    injective_tuple_representatives,
    is_subtuple_complete,
    test3_scan,
    tuple_scan,
    witness_from_closure,
)

__all__ = [
    "SUB_BATTERY",
    "CharacterEvidence",
    "Inconclusive",
    "LowerBound",
    "NotApplicable",
    "OrbitCounts",
    "SubtupleCompleteness",
    "TestOutcome",
    "Verification",
    "WitnessCertificate",
    "build_certificate",
    "certificate_from_permutation",
    "exact_arity",
    "first_non_binary",
    "fixed_point_histogram",
    "injective_tuple_representatives",
    "is_subtuple_complete",
    "lift_induced_certificate",
    "lift_suborbit_certificate",
    "minimal_witness",
    "orbit_count_table",
    "r_ell",
    "run_battery",
    "run_direct_test",
    "test1_character_bound",
    "test3_scan",
    "tuple_scan",
    "verify_witness",
]
