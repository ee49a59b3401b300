"""Orbital colorings and 2-closures."""

from closure.orbitals import OrbitalPartition, UnionFind, orbital_partition
from closure.two_closure import (
    ClosureResult,
    SymbolicFullSymmetric,
    colored_automorphism_group,
    describe_closure,
    is_two_transitive,
    two_closure,
)

__all__ = [
    "ClosureResult",
    "OrbitalPartition",
    "SymbolicFullSymmetric",
    "UnionFind",
    "colored_automorphism_group",
    "describe_closure",
    "is_two_transitive",
    "orbital_partition",
    "two_closure",
]
