"""
2-closure: the automorphism group of the complete digraph colored by orbitals.

2-transitive groups are answered symbolically (the closure is Sym(n)).
Otherwise a base for the automorphism group is chosen by individualizing the
point with the smallest domain until every domain is a singleton, and the
group is found by a deepest-level-first search with orbit pruning, seeded with
the strong generators of G itself.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from config import CLOSURE_CAP, DEGREE_CAP
from errors import DegreeCapExceeded
from groups.backtrack import fixing_generators, generator_orbit
from groups.budget import SearchBudget, ensure_budget
from groups.perm_group import PermGroup
from perms.permutation import Permutation, format_permutation
from closure.orbitals import OrbitalPartition, orbital_partition


@dataclass(frozen=True)
class SymbolicFullSymmetric:
    degree: int

    def order(self) -> int:
        return math.factorial(self.degree)

    def __str__(self) -> str:
        return f"Sym({self.degree})"


@dataclass
class ClosureResult:
    closure: PermGroup | SymbolicFullSymmetric
    is_two_closed: bool
    witness_element: Permutation | None = None
    partition: OrbitalPartition | None = None

    def order(self) -> int:
        return self.closure.order()


def is_two_transitive(G: PermGroup) -> bool:
    if G.degree == 1:
        return True
    if not G.is_transitive():
        return False
    return len(G.point_stabilizer(0).orbit(1)) == G.degree - 1


def _least_transposition_outside(G: PermGroup) -> Permutation | None:
    n = G.degree
    for i in range(n):
        for j in range(i + 1, n):
            t = Permutation.from_cycles([(i, j)], n)
            if t not in G:
                return t
    return None


# -----------------------------------------------------------------------------
# Colored-digraph automorphisms
# -----------------------------------------------------------------------------

Domains = list[frozenset[int]]


class _AutomorphismSearch:
    def __init__(self, partition: OrbitalPartition, budget: SearchBudget):
        self.partition = partition
        self.n = partition.degree
        self.colors = partition.colors
        self.budget = budget
        n = self.n
        diag = [self.colors[z * n + z] for z in range(n)]
        by_diag: dict[int, set[int]] = {}
        for z, c in enumerate(diag):
            by_diag.setdefault(c, set()).add(z)
        self.initial: Domains = [frozenset(by_diag[diag[z]]) for z in range(n)]

    def refine(self, domains: Domains, x: int, y: int) -> Domains | None:
        """Forward check after assigning x -> y; None when some domain empties."""
        n, col = self.n, self.colors
        out = []
        for z in range(n):
            czx = col[z * n + x]
            cxz = col[x * n + z]
            dz = frozenset(w for w in domains[z] if col[w * n + y] == czx and col[y * n + w] == cxz)
            if not dz:
                return None
            out.append(dz)
        return out

    def choose_base(self) -> list[int]:
        base = []
        domains = self.initial
        while True:
            open_points = [(len(d), z) for z, d in enumerate(domains) if len(d) > 1]
            if not open_points:
                return base
            _, z = min(open_points)
            base.append(z)
            domains = self.refine(domains, z, z)

    def preserves_colors(self, images: list[int]) -> bool:
        n, col = self.n, self.colors
        for u in range(n):
            iu = images[u] * n
            row = u * n
            for v in range(n):
                if col[row + v] != col[iu + images[v]]:
                    return False
        return True

    def extend(self, domains: Domains, base: list[int], level: int) -> Permutation | None:
        if level == len(base):
            if any(len(d) != 1 for d in domains):
                return None
            images = [next(iter(d)) for d in domains]
            if len(set(images)) != self.n or not self.preserves_colors(images):
                return None
            return Permutation(images)
        b = base[level]
        for c in sorted(domains[b]):
            self.budget.spend()
            refined = self.refine(domains, b, c)
            if refined is None:
                continue
            found = self.extend(refined, base, level + 1)
            if found is not None:
                return found
        return None


def colored_automorphism_group(
    G: PermGroup, partition: OrbitalPartition, budget: SearchBudget | None = None
) -> tuple[PermGroup, list[Permutation]]:
    """Aut of the orbital coloring, plus the generators found beyond G's own."""
    search = _AutomorphismSearch(partition, ensure_budget(budget))
    base = search.choose_base()
    found: list[Permutation] = list(G.chain_with_base(base).strong_generators) if base else []
    discovered: list[Permutation] = []

    for i in range(len(base) - 1, -1, -1):
        fixed = base[:i]
        domains = search.initial
        for b in fixed:
            domains = search.refine(domains, b, b)
        reached = generator_orbit(base[i], fixing_generators(found, fixed))
        failed: set[int] = set()
        for c in sorted(domains[base[i]]):
            if c in reached or c in failed:
                continue
            search.budget.spend()
            refined = search.refine(domains, base[i], c)
            sigma = search.extend(refined, base, i + 1) if refined is not None else None
            if sigma is not None:
                found.append(sigma)
                discovered.append(sigma)
                reached = generator_orbit(base[i], fixing_generators(found, fixed))
            else:
                failed |= generator_orbit(c, fixing_generators(found, base[: i + 1]))
    return PermGroup(found, degree=G.degree), discovered


def two_closure(
    action,
    closure_cap: int | None = None,
    degree_cap: int | None = None,
    budget: SearchBudget | None = None,
) -> ClosureResult:
    G = action.group
    n = G.degree
    degree_cap = DEGREE_CAP if degree_cap is None else degree_cap
    closure_cap = CLOSURE_CAP if closure_cap is None else closure_cap
    if n > degree_cap:
        raise DegreeCapExceeded("2-closure", n, degree_cap)

    if is_two_transitive(G):
        witness = _least_transposition_outside(G) if n > 1 else None
        return ClosureResult(SymbolicFullSymmetric(n), witness is None, witness)

    if n > closure_cap:
        raise DegreeCapExceeded("2-closure search", n, closure_cap)
    partition = orbital_partition(action, cap=closure_cap)
    closure, discovered = colored_automorphism_group(G, partition, budget)
    closed = closure.order() == G.order()
    witness = None
    if not closed:
        witness = next(s for s in discovered if s not in G)
    return ClosureResult(closure, closed, witness, partition)


def describe_closure(result: ClosureResult) -> dict:
    closure = result.closure
    if isinstance(closure, SymbolicFullSymmetric):
        generators = str(closure)
    else:
        generators = [format_permutation(g) for g in closure.generators]
    return {
        "closure": generators,
        "closure_order": str(result.order()),
        "is_two_closed": result.is_two_closed,
        "witness_element": format_permutation(result.witness_element) if result.witness_element else None,
    }
