"""
Actions built from old ones: the action of G on the right cosets of H, and
the group G^Lambda induced on an invariant subset.

Coset points are numbered breadth first from H (point 0), multiplying by the
parent generators in their given order. A coset Hg is identified by the
lexicographically least image of a base of G under the elements of Hg.
"""

from __future__ import annotations

from typing import Iterable, Literal, Sequence

from config import DEGREE_CAP, ENUMERATION_CAP
from errors import DegreeCapExceeded, NotAMember, NotASubgroup, PermutationError
from groups.backtrack import setwise_stabilizer
from groups.budget import SearchBudget
from groups.perm_group import PermGroup
from parsers.group_file import GroupFile
from perms.permutation import Permutation, compose, format_permutation

ActionKind = Literal["explicit", "cosets", "induced"]


class ActionSpace:
    """A permutation action realized on {0, ..., degree-1}.

    `group` is the realized permutation group; `parent` is the group acting
    (for coset and induced actions) and `image_of` maps parent elements to
    realized permutations.
    """

    def __init__(
        self,
        kind: ActionKind,
        group: PermGroup,
        parent: PermGroup | None = None,
        subgroup: PermGroup | None = None,
        points: Sequence[int] | None = None,
        representatives: Sequence[Permutation] | None = None,
        labels: dict[int, str] | None = None,
        name: str | None = None,
        coset_key=None,
    ):
        self.kind = kind
        self.group = group
        self.parent = parent if parent is not None else group
        self.subgroup = subgroup
        self.points = list(points) if points is not None else None
        self.representatives = list(representatives) if representatives is not None else None
        self.labels = labels or {}
        self.name = name or group.name
        self._coset_key = coset_key
        self._coset_index: dict[tuple[int, ...], int] | None = None

    @classmethod
    def explicit(cls, G: PermGroup, name: str | None = None) -> ActionSpace:
        return cls("explicit", G, name=name or G.name)

    def __repr__(self) -> str:
        return f"<ActionSpace {self.kind} {self.name or ''} degree={self.degree}>"

    @property
    def degree(self) -> int:
        return self.group.degree

    @property
    def index(self) -> int | None:
        return self.degree if self.kind == "cosets" else None

    def image_of(self, x: Permutation) -> Permutation:
        """The permutation of the realized points induced by a parent element."""
        if self.kind == "explicit":
            return x
        if self.kind == "induced":
            pos = {p: i for i, p in enumerate(self.points)}
            try:
                return Permutation([pos[x.images[p]] for p in self.points])
            except KeyError:
                raise NotAMember(f"{format_permutation(x)} does not preserve the induced point set")
        if self._coset_index is None:
            self._coset_index = {self._coset_key(r): i for i, r in enumerate(self.representatives)}
        return Permutation(
            [self._coset_index[self._coset_key(compose(r, x))] for r in self.representatives]
        )

    def kernel(self, cap: int | None = None) -> PermGroup:
        """Parent elements acting trivially (the core of H for coset actions)."""
        if self.kind == "explicit":
            return PermGroup.trivial(self.degree)
        if self.kind == "induced":
            return self.parent.pointwise_stabilizer(self.points)
        kernel = PermGroup.trivial(self.parent.degree)
        for h in self.subgroup.elements(ENUMERATION_CAP if cap is None else cap):
            if h not in kernel and self.image_of(h).is_identity():
                kernel = PermGroup(kernel.generators + [h], degree=self.parent.degree)
        return kernel

    def to_group_file(self) -> GroupFile:
        return GroupFile.from_group(
            self.group,
            name=self.name,
            labels={str(k): v for k, v in self.labels.items()} or None,
            index=self.index,
        )


def _coset_key_function(G: PermGroup, H: PermGroup):
    base = list(G.chain.base)
    h_chain = H.chain_with_base(base)

    def key(g: Permutation) -> tuple[int, ...]:
        c = g
        for level in range(len(h_chain)):
            transversal = h_chain.transversals[level]
            images = c.images
            best = min(transversal, key=lambda x: images[x])
            c = compose(transversal[best], c)
        return tuple(c.images[b] for b in base)

    return key


def coset_action(
    G: PermGroup, H: PermGroup, degree_cap: int | None = None, name: str | None = None
) -> ActionSpace:
    """G acting on right cosets Hg by right multiplication; point 0 is H."""
    cap = DEGREE_CAP if degree_cap is None else degree_cap
    if H.degree != G.degree or not H.is_subgroup_of(G):
        raise NotASubgroup("subgroup generators are not all in the group")
    index = G.order() // H.order()
    if index > cap:
        raise DegreeCapExceeded("coset action", index, cap)

    key = _coset_key_function(G, H)
    identity = G.identity
    representatives = [identity]
    lookup = {key(identity): 0}
    images: list[list[int]] = [[] for _ in G.generators]
    for p in range(index):
        r = representatives[p]
        for k, s in enumerate(G.generators):
            rs = compose(r, s)
            ks = key(rs)
            q = lookup.get(ks)
            if q is None:
                q = lookup[ks] = len(representatives)
                representatives.append(rs)
            images[k].append(q)
        if len(representatives) > index:
            raise PermutationError("coset enumeration overran the index")

    realized = PermGroup(
        [Permutation(im) for im in images] if index > 1 else [],
        degree=index,
        name=name or (f"{G.name}/H" if G.name else None),
    )
    labels = {i: ("H" if i == 0 else f"H{format_permutation(r)}") for i, r in enumerate(representatives)}
    action = ActionSpace(
        "cosets",
        realized,
        parent=G,
        subgroup=H,
        representatives=representatives,
        labels=labels,
        name=realized.name,
        coset_key=key,
    )
    action._coset_index = lookup
    return action


def induced_action(
    G: PermGroup, points: Iterable[int], budget: SearchBudget | None = None, name: str | None = None
) -> ActionSpace:
    """G^Lambda = G_Lambda / G_(Lambda), relabelled ascending onto {0, ..., |Lambda|-1}."""
    lam = sorted(set(points))
    if not lam:
        raise PermutationError("induced action needs a nonempty point set")
    for p in lam:
        if p < 0 or p >= G.degree:
            raise PermutationError(f"point {p} out of range for degree {G.degree}")
    stabilizer = setwise_stabilizer(G, lam, budget=budget)
    pos = {p: i for i, p in enumerate(lam)}
    gens = [Permutation([pos[g.images[p]] for p in lam]) for g in stabilizer.generators]
    realized = PermGroup(gens, degree=len(lam), name=name)
    return ActionSpace(
        "induced",
        realized,
        parent=G,
        subgroup=stabilizer,
        points=lam,
        labels={i: str(p) for i, p in enumerate(lam)},
        name=name,
    )
