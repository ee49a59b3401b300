"""
Backtrack searches over a stabilizer chain: subgroups defined by a property
(setwise stabilizers, normalizers) and single elements (conjugating elements).

Every search spends one budget unit per node and raises BudgetExceeded once
the budget runs out.
"""

from __future__ import annotations

from typing import Callable, Iterable, Sequence

from errors import PermutationError
from groups.budget import SearchBudget, ensure_budget
from groups.perm_group import PermGroup, StabilizerChain
from perms.permutation import Permutation, compose, conjugate

PrefixTest = Callable[[tuple[int, ...]], bool]
LeafTest = Callable[[Permutation], bool]


def generator_orbit(point: int, generators: Sequence[Permutation]) -> set[int]:
    seen = {point}
    queue = [point]
    for p in queue:
        for s in generators:
            q = s.images[p]
            if q not in seen:
                seen.add(q)
                queue.append(q)
    return seen


def fixing_generators(generators: Iterable[Permutation], points: Sequence[int]) -> list[Permutation]:
    return [g for g in generators if all(g.images[b] == b for b in points)]


def _descend(
    chain: StabilizerChain,
    level: int,
    depth: int,
    partial: Permutation,
    images: tuple[int, ...],
    prefix_ok: PrefixTest,
    leaf_ok: LeafTest,
    budget: SearchBudget,
) -> Permutation | None:
    """Depth-first over levels level..depth-1; partial is u_{level-1}...u_start."""
    if level == depth:
        return partial if leaf_ok(partial) else None
    transversal = chain.transversals[level]
    candidates = sorted(transversal, key=lambda c: partial.images[c])
    for c in candidates:
        budget.spend()
        image = partial.images[c]
        extended = images + (image,)
        if not prefix_ok(extended):
            continue
        found = _descend(
            chain, level + 1, depth, compose(transversal[c], partial), extended, prefix_ok, leaf_ok, budget
        )
        if found is not None:
            return found
    return None


def subgroup_search(
    G: PermGroup,
    base_prefix: Sequence[int],
    depth: int | None,
    prefix_ok: PrefixTest,
    leaf_ok: LeafTest,
    seeds: Iterable[Permutation] = (),
    budget: SearchBudget | None = None,
) -> PermGroup:
    """Subgroup K of G cut out by a subgroup property.

    prefix_ok sees the base images chosen so far and must hold for every
    element of K; leaf_ok decides membership of a representative at the
    search depth. Seeds must lie in K and generate the depth-th chain group.
    Levels are processed deepest first and candidates already in the orbit of
    the subgroup found so far are skipped.
    """
    budget = ensure_budget(budget)
    chain = G.chain_with_base(base_prefix)
    base = chain.base
    depth = len(base) if depth is None else depth
    found: list[Permutation] = [g for g in seeds if not g.is_identity()]
    if depth < len(base):
        found += [g for g in chain.levels[depth] if g not in found]

    for i in range(depth - 1, -1, -1):
        fixed = base[:i]
        reached = generator_orbit(base[i], fixing_generators(found, fixed))
        failed: set[int] = set()
        transversal = chain.transversals[i]
        for c in sorted(transversal):
            if c in reached or c in failed:
                continue
            budget.spend()
            images = tuple(fixed) + (c,)
            g = None
            if prefix_ok(images):
                g = _descend(chain, i + 1, depth, transversal[c], images, prefix_ok, leaf_ok, budget)
            if g is not None:
                found.append(g)
                reached = generator_orbit(base[i], fixing_generators(found, fixed))
            else:
                failed |= generator_orbit(c, fixing_generators(found, base[: i + 1]))
    return PermGroup(found, degree=G.degree)


def setwise_stabilizer(G: PermGroup, points: Iterable[int], budget: SearchBudget | None = None) -> PermGroup:
    """G_Lambda: elements mapping the point set onto itself."""
    lam = sorted(set(points))
    for p in lam:
        if p < 0 or p >= G.degree:
            raise PermutationError(f"point {p} out of range for degree {G.degree}")
    lam_set = set(lam)
    if all(all(g.images[p] in lam_set for p in lam) for g in G.generators):
        return G

    return subgroup_search(
        G,
        base_prefix=lam,
        depth=len(lam),
        prefix_ok=lambda images: images[-1] in lam_set,
        leaf_ok=lambda g: True,
        budget=budget,
    )


def normalizer(G: PermGroup, H: PermGroup, budget: SearchBudget | None = None) -> PermGroup:
    """N_G(H) by a full-depth search pruned with H-orbit sizes."""
    orbit_id: dict[int, int] = {}
    orbit_size: dict[int, int] = {}
    for k, orb in enumerate(H.orbits()):
        for p in orb:
            orbit_id[p] = k
            orbit_size[p] = len(orb)
    base = G.chain.base

    def prefix_ok(images: tuple[int, ...]) -> bool:
        level = len(images) - 1
        b, img = base_for(level), images[-1]
        if orbit_size[b] != orbit_size[img]:
            return False
        for j in range(level):
            same_source = orbit_id[base_for(j)] == orbit_id[b]
            same_target = orbit_id[images[j]] == orbit_id[img]
            if same_source != same_target:
                return False
        return True

    def base_for(level: int) -> int:
        return base[level]

    def leaf_ok(g: Permutation) -> bool:
        return all(conjugate(h, g) in H for h in H.generators)

    seeds = [h for h in H.generators if h in G]
    return subgroup_search(G, (), None, prefix_ok, leaf_ok, seeds=seeds, budget=budget)


def conjugating_element(
    G: PermGroup, g: Permutation, h: Permutation, budget: SearchBudget | None = None
) -> Permutation | None:
    """Some x in G with x^-1 g x = h, or None."""
    if g.cycle_type() != h.cycle_type():
        return None
    if g == h:
        return G.identity
    budget = ensure_budget(budget)

    prefix: list[int] = []
    for cycle in g.cycles():
        prefix.extend(cycle)
    prefix += g.fixed_points()
    chain = G.chain_with_base(prefix)
    base = chain.base

    g_len = {p: len(c) for c in g.cycles() for p in c}
    h_len = {p: len(c) for c in h.cycles() for p in c}

    def prefix_ok(images: tuple[int, ...]) -> bool:
        level = len(images) - 1
        b, img = base[level], images[-1]
        if g_len.get(b, 1) != h_len.get(img, 1):
            return False
        if level > 0 and g.images[base[level - 1]] == b:
            return h.images[images[level - 1]] == img
        return True

    def leaf_ok(x: Permutation) -> bool:
        return conjugate(g, x) == h

    return _descend(chain, 0, len(base), G.identity, (), prefix_ok, leaf_ok, budget)


def centralizer(G: PermGroup, g: Permutation, budget: SearchBudget | None = None) -> PermGroup:
    """C_G(g) as the subgroup of elements conjugating g to itself."""
    prefix: list[int] = []
    for cycle in g.cycles():
        prefix.extend(cycle)
    prefix += g.fixed_points()
    chain = G.chain_with_base(prefix)
    base = chain.base
    g_len = {p: len(c) for c in g.cycles() for p in c}

    def prefix_ok(images: tuple[int, ...]) -> bool:
        level = len(images) - 1
        b, img = base[level], images[-1]
        if g_len.get(b, 1) != g_len.get(img, 1):
            return False
        if level > 0 and g.images[base[level - 1]] == b:
            return g.images[images[level - 1]] == img
        return True

    seeds = [g] if g in G else []
    return subgroup_search(
        G, prefix, None, prefix_ok, lambda x: conjugate(g, x) == g, seeds=seeds, budget=budget
    )
