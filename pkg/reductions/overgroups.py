"""
Subgroups above a p-subgroup.

The transitive actions of M of degree prime to p are the actions on the
cosets of subgroups containing a Sylow p-subgroup P. overgroups_of walks up
from P: the minimal overgroups of H are among <H, x> with x running over
representatives of the double cosets HxH, i.e. the orbits of H on its own
cosets.
"""

from __future__ import annotations

from sympy import factorint

from config import ENUMERATION_CAP
from groups.backtrack import normalizer
from groups.budget import SearchBudget, ensure_budget
from groups.perm_group import PermGroup
from actions.action_space import coset_action
from perms.permutation import Permutation, conjugate


def p_part(n: int, p: int) -> int:
    part = 1
    while n % p == 0:
        n //= p
        part *= p
    return part


def _is_p_element(g: Permutation, p: int) -> bool:
    return set(factorint(g.order())) <= {p}


def _normalizes(x: Permutation, P: PermGroup) -> bool:
    return all(conjugate(s, x) in P for s in P.generators)


def sylow_subgroup(M: PermGroup, p: int, cap: int | None = None) -> PermGroup:
    """A Sylow p-subgroup, grown one normalizing p-element at a time."""
    target = p_part(M.order(), p)
    P = PermGroup.trivial(M.degree)
    if target == 1:
        return P
    elements = M.elements(ENUMERATION_CAP if cap is None else cap)
    p_elements = [g for g in elements if not g.is_identity() and _is_p_element(g, p)]
    while P.order() < target:
        for x in p_elements:
            if x not in P and _normalizes(x, P):
                P = PermGroup(P.generators + [x], degree=M.degree)
                break
        else:
            raise ArithmeticError(f"no p-element extends a p-subgroup of order {P.order()}")
    return P


def _already(found: list[PermGroup], K: PermGroup) -> bool:
    return any(F.order() == K.order() and K.is_subgroup_of(F) for F in found)


def overgroups_of(M: PermGroup, P: PermGroup, budget: SearchBudget | None = None) -> list[PermGroup]:
    """Every subgroup H with P <= H <= M (not up to conjugacy), by ascending order."""
    budget = ensure_budget(budget, "overgroup closure")
    found = [P]
    queue = [P]
    for H in queue:
        if H.order() == M.order():
            continue
        action = coset_action(M, H)
        stab = action.group.point_stabilizer(0)
        for orb in stab.orbits(range(1, action.degree)):
            budget.spend()
            x = action.representatives[orb[0]]
            K = PermGroup(H.generators + [x], degree=M.degree)
            if not _already(found, K):
                found.append(K)
                queue.append(K)
    return sorted(found, key=lambda H: H.order())


def are_conjugate_under(N: PermGroup, A: PermGroup, B: PermGroup, cap: int | None = None) -> bool:
    if A.order() != B.order():
        return False
    return any(all(conjugate(a, n) in B for a in A.generators) for n in N.elements(cap))


def dedupe_by_conjugacy(N: PermGroup, groups: list[PermGroup], cap: int | None = None) -> list[PermGroup]:
    kept: list[PermGroup] = []
    for H in groups:
        if not any(are_conjugate_under(N, K, H, cap) for K in kept):
            kept.append(H)
    return kept


def sylow_overgroups(
    M: PermGroup, p: int, budget: SearchBudget | None = None, cap: int | None = None
) -> list[PermGroup]:
    """Overgroups of a Sylow p-subgroup P, one per M-conjugacy class.

    Two overgroups of P conjugate in M are already conjugate in N_M(P).
    """
    P = sylow_subgroup(M, p, cap)
    groups = overgroups_of(M, P, budget)
    return dedupe_by_conjugacy(normalizer(M, P, budget=budget), groups, cap)


def p_subgroups_of_order(P: PermGroup, order: int, cap: int | None = None) -> list[PermGroup]:
    """All subgroups of the p-group P with the given order."""
    elements = list(P.elements(cap))
    layer = {frozenset([P.identity]): PermGroup.trivial(P.degree)}
    seen = set(layer)
    result = [g for g in layer.values() if g.order() == order]
    while layer:
        nxt = {}
        for S in layer.values():
            if S.order() >= order:
                continue
            for x in elements:
                if x in S:
                    continue
                K = PermGroup(S.generators + [x], degree=P.degree)
                if K.order() > order:
                    continue
                key = frozenset(K.elements(cap))
                if key not in seen:
                    seen.add(key)
                    nxt[key] = K
                    if K.order() == order:
                        result.append(K)
        layer = nxt
    return result


def prime_power_overgroups(
    M: PermGroup, p: int, a: int, budget: SearchBudget | None = None, cap: int | None = None
) -> list[PermGroup]:
    """Subgroups H up to M-conjugacy with |M:H| not divisible by p^a."""
    sylow = sylow_subgroup(M, p, cap)
    order = max(1, sylow.order() // p ** (a - 1))
    groups: list[PermGroup] = []
    for Q in p_subgroups_of_order(sylow, order, cap):
        for H in overgroups_of(M, Q, budget):
            if not _already(groups, H):
                groups.append(H)
    groups.sort(key=lambda H: H.order())
    return dedupe_by_conjugacy(M, groups, cap)
