"""
Permutations of {0, ..., n-1} stored as image tables.

Conventions: right action, left-to-right composition. act(w, compose(g, h))
equals act(act(w, g), h), so compose(g, h) applies g first.

Usage:
  g = parse_permutation("(0 1 2)(3 4)", 5)
  h = parse_permutation("[1,0,2,3,4]", 5)
  format_permutation(compose(g, h))
"""

from __future__ import annotations

import math
import re
from typing import Iterable, Sequence

from errors import DegreeMismatch, PermutationError

ELEMENT_SEP_RE = r" *[, ] *"
CYCLE_RE = rf"\(( *\d+({ELEMENT_SEP_RE}\d+)* *)?\) *"
IMAGE_LIST_RE = r"^\[ *(\d+( *, *\d+)*)? *,? *\]$"


class Permutation:
    """Immutable bijection of {0, ..., degree-1}."""

    __slots__ = ("images", "_hash")

    def __init__(self, images: Iterable[int]):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise PermutationError(f"not a bijection of 0..{len(images) - 1}: {list(images)}")
        if not images:
            raise PermutationError("permutation degree must be positive")
        object.__setattr__(self, "images", images)
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _trusted(cls, images: tuple[int, ...]) -> Permutation:
        # Skips validation; callers guarantee a bijection.
        p = object.__new__(cls)
        object.__setattr__(p, "images", images)
        object.__setattr__(p, "_hash", None)
        return p

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        if degree < 1:
            raise PermutationError("permutation degree must be positive")
        return cls._trusted(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> Permutation:
        images = list(range(degree))
        seen: set[int] = set()
        for cycle in cycles:
            for point in cycle:
                if point < 0 or point >= degree:
                    raise PermutationError(f"point {point} out of range for degree {degree}")
                if point in seen:
                    raise PermutationError(f"point {point} repeated in cycles")
                seen.add(point)
            for i, point in enumerate(cycle):
                images[point] = cycle[(i + 1) % len(cycle)]
        return cls._trusted(tuple(images))

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return act(point, self)

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __invert__(self) -> Permutation:
        return inverse(self)

    def __pow__(self, exponent: int) -> Permutation:
        result = Permutation.identity(self.degree)
        base = self if exponent >= 0 else inverse(self)
        for _ in range(abs(exponent)):
            result = compose(result, base)
        return result

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(self, "_hash", hash(self.images))
        return self._hash

    def __lt__(self, other: Permutation) -> bool:
        return self.images < other.images

    def __repr__(self) -> str:
        return f"Permutation({format_permutation(self)}, degree={self.degree})"

    def __str__(self) -> str:
        return format_permutation(self)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest point, ascending."""
        seen = set()
        out = []
        for i in range(self.degree):
            if i in seen or self.images[i] == i:
                continue
            cycle = [i]
            seen.add(i)
            j = self.images[i]
            while j != i:
                seen.add(j)
                cycle.append(j)
                j = self.images[j]
            out.append(tuple(cycle))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        lengths = [len(c) for c in self.cycles()]
        lengths += [1] * (self.degree - sum(lengths))
        return tuple(sorted(lengths, reverse=True))

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles())) if not self.is_identity() else 1

    def support(self) -> list[int]:
        return [i for i, j in enumerate(self.images) if i != j]

    def fixed_points(self) -> list[int]:
        return [i for i, j in enumerate(self.images) if i == j]

    def as_list(self) -> list[int]:
        return list(self.images)


def check_degree(g: Permutation, h: Permutation) -> None:
    if g.degree != h.degree:
        raise DegreeMismatch(g.degree, h.degree)


def compose(g: Permutation, h: Permutation) -> Permutation:
    """Apply g first, then h."""
    check_degree(g, h)
    hi = h.images
    return Permutation._trusted(tuple(hi[i] for i in g.images))


def act(omega: int, g: Permutation) -> int:
    if omega < 0 or omega >= g.degree:
        raise PermutationError(f"point {omega} out of range for degree {g.degree}")
    return g.images[omega]


def inverse(g: Permutation) -> Permutation:
    out = [0] * g.degree
    for i, j in enumerate(g.images):
        out[j] = i
    return Permutation._trusted(tuple(out))


def conjugate(g: Permutation, x: Permutation) -> Permutation:
    """g^x = x^-1 g x."""
    return compose(compose(inverse(x), g), x)


def commutes(g: Permutation, h: Permutation) -> bool:
    return compose(g, h) == compose(h, g)


def format_permutation(g: Permutation) -> str:
    """Canonical cycle form; the identity prints as "()"."""
    cycles = g.cycles()
    if not cycles:
        return "()"
    return "".join("(%s)" % " ".join(map(str, c)) for c in cycles)


def parse_permutation(text: str, degree: int, one_based: bool = False) -> Permutation:
    """Parse cycle notation "(0 1 2)(3 4)" or an image list "[1,2,0,4,3]"."""
    if degree < 1:
        raise PermutationError("permutation degree must be positive")
    stripped = re.sub(r"\s+", " ", text).strip()
    shift = 1 if one_based else 0
    if stripped.startswith("["):
        if not re.match(IMAGE_LIST_RE, stripped):
            raise PermutationError(f"could not parse image list {text!r}")
        body = stripped[1:-1].strip().rstrip(",")
        images = [int(x) - shift for x in re.split(r" *, *", body)] if body else []
        if len(images) != degree:
            raise PermutationError(f"image list of length {len(images)} for degree {degree}")
        return Permutation(images)

    cycles = []
    for match in re.finditer(CYCLE_RE + r"|.", stripped):
        token = match.group().strip()
        if len(token) <= 1 and token != "":
            raise PermutationError(f"could not parse permutation {text!r}")
        body = token[1:-1].strip()
        if not body:
            continue
        cycles.append([int(x) - shift for x in re.split(ELEMENT_SEP_RE, body)])
    return Permutation.from_cycles(cycles, degree)


def permutation_from_json(value: str | Sequence[int], degree: int, one_based: bool = False) -> Permutation:
    """Group and certificate files store elements as cycle strings or image lists."""
    if isinstance(value, str):
        return parse_permutation(value, degree, one_based=one_based)
    images = [int(x) - (1 if one_based else 0) for x in value]
    if len(images) != degree:
        raise PermutationError(f"image list of length {len(images)} for degree {degree}")
    return Permutation(images)
