"""Small groups and brute-force references shared by the tests."""

from itertools import permutations
from pathlib import Path

from config import FIXTURES_DIR, SMALL_GROUPS_DIR
from actions.action_space import ActionSpace
from groups.perm_group import PermGroup
from parsers.group_file import load_group_file
from perms.permutation import Permutation, compose, parse_permutation


def perm(text: str, degree: int) -> Permutation:
    return parse_permutation(text, degree)


def group(degree: int, *generators: str, name: str | None = None) -> PermGroup:
    return PermGroup([perm(g, degree) for g in generators], degree=degree, name=name)


def explicit(degree: int, *generators: str) -> ActionSpace:
    return ActionSpace.explicit(group(degree, *generators))


def cyclic(n: int) -> PermGroup:
    return group(n, "(%s)" % " ".join(map(str, range(n))), name=f"C{n}")


def symmetric(n: int) -> PermGroup:
    return group(n, "(%s)" % " ".join(map(str, range(n))), "(0 1)", name=f"S{n}")


def a4() -> PermGroup:
    return group(4, "(0 1 2)", "(1 2 3)", name="A4")


def d8() -> PermGroup:
    return group(4, "(0 1 2 3)", "(0 2)", name="D8")


def fixture_group(stem: str) -> PermGroup:
    return load_group_file(FIXTURES_DIR / f"{stem}.json").to_group()


def corpus_files(max_degree: int | None = None, max_order: int | None = None) -> list[Path]:
    out = []
    for path in sorted(SMALL_GROUPS_DIR.glob("*.json")):
        gf = load_group_file(path)
        if max_degree is not None and gf.degree > max_degree:
            continue
        if max_order is not None and gf.order is not None and gf.order > max_order:
            continue
        out.append(path)
    return out


def closure_of_generators(G: PermGroup) -> set[Permutation]:
    """Every element, by closing the generators under products."""
    elements = {G.identity}
    frontier = [G.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for s in G.generators:
                y = compose(x, s)
                if y not in elements:
                    elements.add(y)
                    nxt.append(y)
        frontier = nxt
    return elements


def all_permutations(degree: int):
    for images in permutations(range(degree)):
        yield Permutation(images)


def corpus_group(stem: str) -> PermGroup:
    return load_group_file(SMALL_GROUPS_DIR / f"{stem}.json").to_group()
