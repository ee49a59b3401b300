"""Orbitals: orbits of a group on ordered pairs, as a coloring of Omega x Omega."""

from __future__ import annotations

from dataclasses import dataclass

from config import CLOSURE_CAP
from errors import DegreeCapExceeded


class UnionFind:
    """Union by rank with path compression over 0..size-1."""

    def __init__(self, size: int):
        self.parent = list(range(size))
        self.rank = [0] * size

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> None:
        x, y = self.find(x), self.find(y)
        if x == y:
            return
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x


@dataclass(frozen=True)
class OrbitalPartition:
    degree: int
    colors: tuple[int, ...]  # colors[u * degree + v]
    num_colors: int
    diagonal_colors: frozenset[int]

    def color(self, u: int, v: int) -> int:
        return self.colors[u * self.degree + v]

    @property
    def off_diagonal_colors(self) -> int:
        return self.num_colors - len(self.diagonal_colors)

    def representatives(self) -> list[tuple[int, int]]:
        """First pair of each color in lexicographic order."""
        seen: dict[int, tuple[int, int]] = {}
        n = self.degree
        for idx, c in enumerate(self.colors):
            if c not in seen:
                seen[c] = divmod(idx, n)
        return [seen[c] for c in range(self.num_colors)]


def orbital_partition(action, cap: int | None = None) -> OrbitalPartition:
    """Colors are numbered by first appearance scanning (u, v) lexicographically."""
    G = action.group
    n = G.degree
    cap = CLOSURE_CAP if cap is None else cap
    if n > cap:
        raise DegreeCapExceeded("orbital partition", n, cap)
    uf = UnionFind(n * n)
    for g in G.generators:
        im = g.images
        for u in range(n):
            row = u * n
            iu = im[u] * n
            for v in range(n):
                uf.union(row + v, iu + im[v])
    color_of_root: dict[int, int] = {}
    colors = []
    for idx in range(n * n):
        root = uf.find(idx)
        c = color_of_root.get(root)
        if c is None:
            c = color_of_root[root] = len(color_of_root)
        colors.append(c)
    diagonal = frozenset(colors[u * n + u] for u in range(n))
    return OrbitalPartition(n, tuple(colors), len(color_of_root), diagonal)
