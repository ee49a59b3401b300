"""
Subtuple completeness and the witness searches built on it.

tuple_scan looks for pairs I = P + (x,), J = P + (x',) where P runs over orbit
representatives of injective prefixes, x over orbit representatives of the
prefix stabilizer, and x' over the intersection of the orbits of x under the
stabilizers of the single prefix points. Such a pair is 2-subtuple complete;
it is a witness exactly when x' is outside the orbit of x under the prefix
stabilizer. With prefixes of length 2 this is the classical triple scan.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Sequence

from groups.budget import SearchBudget, ensure_budget
from groups.perm_group import PermGroup, transporter
from perms.permutation import Permutation
from binarity.certificates import WitnessCertificate, build_certificate, certificate_from_permutation
from binarity.outcomes import Inconclusive
from closure.two_closure import two_closure


@dataclass
class SubtupleCompleteness:
    complete: bool
    transporters: dict[tuple[int, ...], Permutation] = field(default_factory=dict)
    failing: tuple[int, ...] | None = None


def is_subtuple_complete(action, I: Sequence[int], J: Sequence[int], r: int) -> SubtupleCompleteness:
    """Every r-subset of indices admits a transporter; the table is keyed by index tuples."""
    if len(I) != len(J):
        raise ValueError(f"tuple length mismatch: {len(I)} vs {len(J)}")
    if not 1 <= r <= len(I):
        raise ValueError(f"need 1 <= r <= {len(I)}, got r={r}")
    G = action.group
    table: dict[tuple[int, ...], Permutation] = {}
    for idx in combinations(range(len(I)), r):
        t = transporter(G, [I[k] for k in idx], [J[k] for k in idx])
        if t is None:
            return SubtupleCompleteness(complete=False, transporters=table, failing=idx)
        table[idx] = t
    return SubtupleCompleteness(complete=True, transporters=table)


def injective_tuple_representatives(
    G: PermGroup, length: int, budget: SearchBudget
) -> Iterator[tuple[tuple[int, ...], PermGroup]]:
    """Orbit representatives of injective tuples, with their pointwise stabilizers."""

    def walk(prefix: tuple[int, ...], group: PermGroup) -> Iterator[tuple[tuple[int, ...], PermGroup]]:
        if len(prefix) == length:
            yield prefix, group
            return
        points = [p for p in range(G.degree) if p not in prefix]
        for orb in group.orbits(points):
            budget.spend()
            yield from walk(prefix + (orb[0],), group.point_stabilizer(orb[0]))

    if length == 0:
        yield (), G
        return
    for orb in G.orbits():
        budget.spend()
        yield from walk((orb[0],), G.point_stabilizer(orb[0]))


def tuple_scan(
    action, length: int = 3, budget: SearchBudget | None = None, provenance: str | None = None
) -> WitnessCertificate | Inconclusive:
    """First witness of the given length in deterministic scan order."""
    if length < 3:
        raise ValueError("witnesses have length at least 3")
    G = action.group
    budget = ensure_budget(budget)
    provenance = provenance or f"{length}-tuple scan"
    for prefix, stab in injective_tuple_representatives(G, length - 1, budget):
        single = [G.point_stabilizer(p) for p in prefix]
        points = [p for p in range(G.degree) if p not in prefix]
        for orb in stab.orbits(points):
            x = orb[0]
            conjugate = set(orb)
            candidates = set(single[0].orbit(x))
            for S in single[1:]:
                candidates &= set(S.orbit(x))
            for y in sorted(candidates):
                budget.spend()
                if y in conjugate:
                    continue
                cert = build_certificate(G, prefix + (x,), prefix + (y,), provenance=provenance)
                if cert is not None:
                    return cert
    if length == 3:
        reason = "2-subtuple completeness implies 3-subtuple completeness"
    else:
        reason = f"no witness among {length}-tuples differing in the last entry"
    return Inconclusive(reason=reason)


def test3_scan(action, budget: SearchBudget | None = None) -> WitnessCertificate | Inconclusive:
    return tuple_scan(action, 3, budget=budget, provenance="Test 3 (triple scan)")


def witness_from_closure(action, budget: SearchBudget | None = None, **caps) -> WitnessCertificate | Inconclusive:
    """Strong witness (0..n-1, sigma) from an element of the 2-closure outside G."""
    result = two_closure(action, budget=budget, **caps)
    if result.is_two_closed or result.witness_element is None:
        return Inconclusive(reason="the action is 2-closed")
    cert = certificate_from_permutation(action, result.witness_element, provenance="Test 2 (2-closure)")
    if cert is None:
        raise ArithmeticError("2-closure element failed a pair transporter")
    return cert


test3_scan.__test__ = False
