"""
Permutation groups given by generators, backed by a deterministic
Schreier-Sims stabilizer chain.

Base points are chosen as the smallest point moved by a generator that fixes
all earlier base points, so chains (and everything derived from them) are
reproducible bit for bit.
"""

from __future__ import annotations

import math
from typing import Iterable, Iterator, Sequence

from config import ENUMERATION_CAP
from errors import BinarityError, BudgetExceeded, DegreeMismatch, PermutationError
from perms.permutation import Permutation, compose, inverse


def _first_moved(g: Permutation) -> int:
    for i, j in enumerate(g.images):
        if i != j:
            return i
    raise ValueError("identity moves no point")


def _fixes_all(g: Permutation, points: Sequence[int]) -> bool:
    images = g.images
    return all(images[b] == b for b in points)


def orbit_transversal(point: int, generators: Sequence[Permutation], degree: int) -> dict[int, Permutation]:
    """BFS from point, generators in the given order; value u has point^u = key."""
    transversal = {point: Permutation.identity(degree)}
    queue = [point]
    for p in queue:
        up = transversal[p]
        for s in generators:
            q = s.images[p]
            if q not in transversal:
                transversal[q] = compose(up, s)
                queue.append(q)
    return transversal


# -----------------------------------------------------------------------------
# Stabilizer chain
# -----------------------------------------------------------------------------


class StabilizerChain:
    """Base, per-level strong generators and transversals.

    Level i generators generate the pointwise stabilizer of base[:i].
    """

    def __init__(
        self,
        degree: int,
        base: list[int],
        levels: list[list[Permutation]],
        transversals: list[dict[int, Permutation]],
    ):
        self.degree = degree
        self.base = base
        self.levels = levels
        self.transversals = transversals
        self._inverses: list[dict[int, Permutation]] = [{} for _ in base]

    def __len__(self) -> int:
        return len(self.base)

    @property
    def strong_generators(self) -> list[Permutation]:
        seen: set[Permutation] = set()
        out = []
        for level in self.levels:
            for g in level:
                if g not in seen:
                    seen.add(g)
                    out.append(g)
        return out

    def order(self) -> int:
        return math.prod(len(t) for t in self.transversals)

    def inverse_representative(self, level: int, point: int) -> Permutation:
        cache = self._inverses[level]
        u = cache.get(point)
        if u is None:
            u = cache[point] = inverse(self.transversals[level][point])
        return u

    def strip(self, g: Permutation, start: int = 0) -> tuple[Permutation, int]:
        """Sift g from level start; returns the residue and the level reached."""
        for level in range(start, len(self.base)):
            b = g.images[self.base[level]]
            if b not in self.transversals[level]:
                return g, level
            g = compose(g, self.inverse_representative(level, b))
        return g, len(self.base)

    def contains(self, g: Permutation) -> bool:
        if g.degree != self.degree:
            raise DegreeMismatch(g.degree, self.degree)
        residue, level = self.strip(g)
        return level == len(self.base) and residue.is_identity()

    def tail(self, start: int) -> StabilizerChain:
        return StabilizerChain(
            self.degree,
            self.base[start:],
            self.levels[start:],
            self.transversals[start:],
        )

    def elements(self) -> Iterator[Permutation]:
        """Every element exactly once, as products u_{k-1}...u_0."""
        identity = Permutation.identity(self.degree)

        def walk(level: int, prefix: Permutation) -> Iterator[Permutation]:
            if level < 0:
                yield prefix
                return
            for u in self.transversals[level].values():
                yield from walk(level - 1, compose(prefix, u))

        yield from walk(len(self.base) - 1, identity)


def schreier_sims(
    generators: Sequence[Permutation],
    degree: int,
    base_prefix: Sequence[int] = (),
    known_order: int | None = None,
) -> StabilizerChain:
    """Deterministic incremental Schreier-Sims.

    base_prefix forces the first base points. When known_order is given the
    construction stops as soon as the transversal sizes multiply to it.
    """
    gens = [g for g in generators if not g.is_identity()]
    base = list(base_prefix)
    for g in gens:
        if _fixes_all(g, base):
            base.append(_first_moved(g))
    levels = [[g for g in gens if _fixes_all(g, base[:i])] for i in range(len(base))]
    transversals = [orbit_transversal(base[i], levels[i], degree) for i in range(len(base))]
    chain = StabilizerChain(degree, base, levels, transversals)

    def done() -> bool:
        return known_order is not None and chain.order() == known_order

    if done():
        return chain

    i = len(base) - 1
    while i >= 0:
        jumped = False
        transversal = chain.transversals[i]
        for b in list(transversal):
            u_b = transversal[b]
            for s in list(chain.levels[i]):
                schreier = compose(compose(u_b, s), chain.inverse_representative(i, s.images[b]))
                if schreier.is_identity():
                    continue
                h, j = chain.strip(schreier, i + 1)
                if j < len(chain.base) or not h.is_identity():
                    if j == len(chain.base):
                        chain.base.append(_first_moved(h))
                        chain.levels.append([])
                        chain.transversals.append({})
                        chain._inverses.append({})
                    for level in range(i + 1, j + 1):
                        chain.levels[level].append(h)
                        chain.transversals[level] = orbit_transversal(
                            chain.base[level], chain.levels[level], degree
                        )
                        chain._inverses[level] = {}
                    if done():
                        return chain
                    i = j
                    jumped = True
                    break
            if jumped:
                break
        if not jumped:
            i -= 1
    return chain


# -----------------------------------------------------------------------------
# Groups
# -----------------------------------------------------------------------------


class PermGroup:
    """A permutation group of fixed degree given by generators."""

    def __init__(
        self,
        generators: Iterable[Permutation],
        degree: int | None = None,
        order: int | None = None,
        name: str | None = None,
        chain: StabilizerChain | None = None,
    ):
        gens: list[Permutation] = []
        seen: set[Permutation] = set()
        for g in generators:
            if degree is None:
                degree = g.degree
            elif g.degree != degree:
                raise DegreeMismatch(g.degree, degree)
            if not g.is_identity() and g not in seen:
                seen.add(g)
                gens.append(g)
        if degree is None:
            raise PermutationError("degree is required for a group without generators")
        self.degree = degree
        self.generators = gens
        self.name = name
        self._known_order = order
        self._chain = chain
        self._chains_by_prefix: dict[tuple[int, ...], StabilizerChain] = {}
        self._stabilizers: dict[int, PermGroup] = {}
        self._transversals: dict[int, dict[int, Permutation]] = {}

    def __repr__(self) -> str:
        label = self.name or "PermGroup"
        return f"<{label} degree={self.degree} gens={len(self.generators)}>"

    @classmethod
    def trivial(cls, degree: int) -> PermGroup:
        return cls([], degree=degree, order=1)

    @property
    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    @property
    def chain(self) -> StabilizerChain:
        if self._chain is None:
            self._chain = schreier_sims(self.generators, self.degree, known_order=self._known_order)
        return self._chain

    def chain_with_base(self, prefix: Sequence[int]) -> StabilizerChain:
        """A chain whose base starts with prefix (rebuilt with the known order)."""
        prefix = tuple(prefix)
        if tuple(self.chain.base[: len(prefix)]) == prefix:
            return self.chain
        cached = self._chains_by_prefix.get(prefix)
        if cached is None:
            cached = schreier_sims(self.generators, self.degree, prefix, known_order=self.order())
            self._chains_by_prefix[prefix] = cached
        return cached

    def order(self) -> int:
        return self.chain.order()

    def is_trivial(self) -> bool:
        return not self.generators

    def __contains__(self, g: Permutation) -> bool:
        return self.chain.contains(g)

    def contains(self, g: Permutation) -> bool:
        return self.chain.contains(g)

    # --- orbits --------------------------------------------------------------

    def orbit_transversal(self, point: int) -> dict[int, Permutation]:
        self._check_point(point)
        transversal = self._transversals.get(point)
        if transversal is None:
            chain = self.chain
            if chain.base and chain.base[0] == point:
                transversal = chain.transversals[0]
            else:
                transversal = orbit_transversal(point, self.generators, self.degree)
            self._transversals[point] = transversal
        return transversal

    def orbit(self, point: int) -> list[int]:
        """BFS order from point, generators in the given order."""
        self._check_point(point)
        seen = {point}
        queue = [point]
        for p in queue:
            for s in self.generators:
                q = s.images[p]
                if q not in seen:
                    seen.add(q)
                    queue.append(q)
        return queue

    def orbits(self, points: Iterable[int] | None = None) -> list[list[int]]:
        """Orbits meeting points, each sorted, ordered by smallest point."""
        remaining = sorted(set(range(self.degree) if points is None else points))
        done: set[int] = set()
        out = []
        for p in remaining:
            if p in done:
                continue
            orb = self.orbit(p)
            done.update(orb)
            out.append(sorted(orb))
        return out

    def is_transitive(self) -> bool:
        return len(self.orbit(0)) == self.degree

    # --- stabilizers ---------------------------------------------------------

    def point_stabilizer(self, point: int) -> PermGroup:
        self._check_point(point)
        stab = self._stabilizers.get(point)
        if stab is None:
            chain = self.chain_with_base((point,))
            tail = chain.tail(1)
            stab = PermGroup(
                chain.levels[1] if len(chain) > 1 else [],
                degree=self.degree,
                order=tail.order(),
                chain=tail,
            )
            self._stabilizers[point] = stab
        return stab

    def pointwise_stabilizer(self, points: Iterable[int]) -> PermGroup:
        group = self
        for p in sorted(set(points)):
            group = group.point_stabilizer(p)
        return group

    # --- enumeration ---------------------------------------------------------

    def elements(self, cap: int | None = None) -> Iterator[Permutation]:
        cap = ENUMERATION_CAP if cap is None else cap
        order = self.order()
        if order > cap:
            raise BudgetExceeded("element enumeration", cap, order)
        return self.chain.elements()

    def is_subgroup_of(self, other: PermGroup) -> bool:
        return all(g in other for g in self.generators)

    def same_as(self, other: PermGroup) -> bool:
        return self.order() == other.order() and self.is_subgroup_of(other)

    def _check_point(self, point: int) -> None:
        if point < 0 or point >= self.degree:
            raise PermutationError(f"point {point} out of range for degree {self.degree}")


# -----------------------------------------------------------------------------
# Operations
# -----------------------------------------------------------------------------


def group_order(G: PermGroup) -> int:
    return G.order()


def is_member(G: PermGroup, p: Permutation) -> bool:
    return G.contains(p)


def orbit_of(G: PermGroup, omega: int) -> list[int]:
    return G.orbit(omega)


def point_stabilizer(G: PermGroup, omega: int) -> PermGroup:
    return G.point_stabilizer(omega)


def pointwise_stabilizer(G: PermGroup, points: Iterable[int]) -> PermGroup:
    return G.pointwise_stabilizer(points)


def _transport(G: PermGroup, I: tuple[int, ...], J: tuple[int, ...]) -> Permutation | None:
    transversal = G.orbit_transversal(I[0])
    t0 = transversal.get(J[0])
    if t0 is None:
        return None
    if len(I) == 1:
        return t0
    back = inverse(t0).images
    rest = tuple(back[j] for j in J[1:])
    h = _transport(G.point_stabilizer(I[0]), I[1:], rest)
    return None if h is None else compose(h, t0)


def transporter(G: PermGroup, I: Sequence[int], J: Sequence[int]) -> Permutation | None:
    """Some g in G with I^g = J, or None when the tuples are not conjugate."""
    if len(I) != len(J):
        raise ValueError(f"tuple length mismatch: {len(I)} vs {len(J)}")
    for p in (*I, *J):
        G._check_point(p)
    for a in range(len(I)):
        for b in range(a + 1, len(I)):
            if (I[a] == I[b]) != (J[a] == J[b]):
                return None
    first = [k for k in range(len(I)) if I[k] not in I[:k]]
    I0 = tuple(I[k] for k in first)
    J0 = tuple(J[k] for k in first)
    if not I0:
        return G.identity
    g = _transport(G, I0, J0)
    if g is None:
        return None
    if any(g.images[i] != j for i, j in zip(I, J)):
        raise BinarityError(f"transporter check failed for {tuple(I)} -> {tuple(J)}")
    return g


def tuple_canonical_form(G: PermGroup, T: Sequence[int]) -> tuple[int, ...]:
    """Least-rep image of an injective tuple; equal exactly on G-orbits."""
    out = []
    group = G
    current = tuple(T)
    while current:
        transversal = group.orbit_transversal(current[0])
        rep = min(transversal)
        # u moves current[0] onto the least point of its orbit
        u = transversal[rep].images
        current = tuple(u[x] for x in current)
        out.append(rep)
        group = group.point_stabilizer(rep)
        current = current[1:]
    return tuple(out)


def element_order(g: Permutation) -> int:
    return g.order()


def subgroup(G: PermGroup, generators: Iterable[Permutation], order: int | None = None) -> PermGroup:
    return PermGroup(list(generators), degree=G.degree, order=order)


def normal_closure(G: PermGroup, generators: Iterable[Permutation]) -> PermGroup:
    """Smallest normal subgroup of G containing generators."""
    gens = [g for g in generators if not g.is_identity()]
    N = PermGroup(gens, degree=G.degree)
    changed = True
    while changed:
        changed = False
        for n in list(N.generators):
            for x in G.generators:
                c = compose(compose(inverse(x), n), x)
                if c not in N:
                    N = PermGroup(N.generators + [c], degree=G.degree)
                    changed = True
    return N


def commutator(a: Permutation, b: Permutation) -> Permutation:
    return compose(compose(inverse(a), inverse(b)), compose(a, b))


def derived_subgroup(G: PermGroup) -> PermGroup:
    gens = G.generators
    comms = [commutator(a, b) for i, a in enumerate(gens) for b in gens[i + 1 :]]
    return normal_closure(G, comms)


def is_normal(N: PermGroup, G: PermGroup) -> bool:
    return all(compose(compose(inverse(x), n), x) in N for n in N.generators for x in G.generators)


def is_abelian(G: PermGroup) -> bool:
    gens = G.generators
    return all(compose(a, b) == compose(b, a) for i, a in enumerate(gens) for b in gens[i + 1 :])


def conjugacy_classes(G: PermGroup, cap: int | None = None) -> list[list[Permutation]]:
    """Classes by closing each element under conjugation by generators."""
    classified: set[Permutation] = set()
    classes = []
    for g in G.elements(cap):
        if g in classified:
            continue
        cls = [g]
        classified.add(g)
        for c in cls:
            for x in G.generators:
                d = compose(compose(inverse(x), c), x)
                if d not in classified:
                    classified.add(d)
                    cls.append(d)
        classes.append(cls)
    return classes
