import math

import pytest
from sympy.combinatorics import Permutation as SympyPermutation
from sympy.combinatorics import PermutationGroup

from errors import BudgetExceeded, PermutationError
from groups.perm_group import (
    PermGroup,
    conjugacy_classes,
    derived_subgroup,
    is_abelian,
    is_member,
    is_normal,
    normal_closure,
    transporter,
    tuple_canonical_form,
)
from parsers.group_file import load_group_file
from perms.permutation import Permutation
from helpers import a4, all_permutations, closure_of_generators, corpus_files, cyclic, d8, group, perm, symmetric


@pytest.mark.parametrize("path", corpus_files(), ids=lambda p: p.stem)
def test_corpus_orders_match_sympy(path):
    gf = load_group_file(path)
    G = gf.to_group()
    reference = PermutationGroup([SympyPermutation(list(g.images)) for g in G.generators] or [SympyPermutation(gf.degree - 1)])
    assert G.order() == reference.order() == gf.order


@pytest.mark.parametrize("path", corpus_files(max_degree=6), ids=lambda p: p.stem)
def test_membership_matches_brute_force(path):
    G = load_group_file(path).to_group()
    elements = closure_of_generators(G)
    assert len(elements) == G.order()
    for p in all_permutations(G.degree):
        assert (p in G) == (p in elements)


def test_orders_of_named_groups():
    assert symmetric(5).order() == 120
    assert a4().order() == 12
    assert d8().order() == 8
    assert cyclic(7).order() == 7
    assert PermGroup.trivial(5).order() == 1


def test_identity_and_duplicate_generators_are_dropped():
    g = perm("(0 1)", 3)
    G = PermGroup([Permutation.identity(3), g, g], degree=3)
    assert G.generators == [g]
    assert G.order() == 2


def test_group_without_generators_needs_degree():
    with pytest.raises(PermutationError):
        PermGroup([])


def test_orbit_is_bfs_order():
    assert cyclic(6).orbit(0) == [0, 1, 2, 3, 4, 5]
    assert d8().orbit(1) == [1, 2, 3, 0]


def test_orbits_of_intransitive_group():
    G = group(6, "(0 1)", "(2 3 4)")
    assert G.orbits() == [[0, 1], [2, 3, 4], [5]]
    assert G.orbits([3]) == [[2, 3, 4]]
    assert not G.is_transitive()
    assert symmetric(4).is_transitive()


def test_orbit_rejects_out_of_range_point():
    with pytest.raises(PermutationError):
        cyclic(4).orbit(4)


def test_stabilizers():
    S4 = symmetric(4)
    stab = S4.point_stabilizer(0)
    assert stab.order() == 6
    assert all(g.images[0] == 0 for g in stab.elements())
    assert S4.pointwise_stabilizer([0, 1]).order() == 2
    assert S4.pointwise_stabilizer([0, 1, 2]).order() == 1


def test_orbit_stabilizer_theorem():
    for G in (symmetric(5), a4(), d8(), group(6, "(0 1 2)(3 4 5)", "(0 3)(1 5)(2 4)")):
        for p in range(G.degree):
            assert len(G.orbit(p)) * G.point_stabilizer(p).order() == G.order()


def test_membership():
    A4 = a4()
    assert is_member(A4, perm("(0 1)(2 3)", 4))
    assert perm("(0 1)", 4) not in A4
    assert A4.contains(perm("(0 2 1)", 4))


def test_elements_respects_cap():
    S4 = symmetric(4)
    assert len(set(S4.elements())) == 24
    with pytest.raises(BudgetExceeded):
        list(S4.elements(cap=10))


def test_subgroup_relations():
    V4 = group(4, "(0 1)(2 3)", "(0 2)(1 3)")
    assert V4.is_subgroup_of(a4())
    assert not d8().is_subgroup_of(a4())
    assert group(4, "(0 1 2)", "(0 1)(2 3)").same_as(a4())


def test_transporter_finds_element():
    S4 = symmetric(4)
    g = transporter(S4, (0, 1), (2, 3))
    assert g is not None
    assert (g.images[0], g.images[1]) == (2, 3)


def test_transporter_returns_none_for_distinct_orbits():
    assert transporter(a4(), (0, 1, 2), (0, 1, 3)) is None
    assert transporter(group(4, "(0 1)", "(2 3)"), (0,), (2,)) is None


def test_transporter_with_repeated_entries():
    S4 = symmetric(4)
    assert transporter(S4, (0, 0), (1, 1)) is not None
    assert transporter(S4, (0, 0), (1, 2)) is None
    assert transporter(S4, (), ()) == S4.identity


def test_transporter_length_mismatch():
    with pytest.raises(ValueError):
        transporter(symmetric(3), (0, 1), (0,))


def test_transporter_agrees_with_brute_force():
    G = group(6, "(2 3)(4 5)", "(0 5 2)(1 4 3)")
    elements = list(G.elements())
    for I in [(0, 1, 2), (0, 2, 4), (1, 0, 5)]:
        for J in [(0, 1, 3), (2, 4, 0), (3, 2, 1)]:
            expected = any(tuple(g.images[i] for i in I) == J for g in elements)
            assert (transporter(G, I, J) is not None) == expected


def test_tuple_canonical_form_separates_orbits():
    A4 = a4()
    assert tuple_canonical_form(A4, (0, 1, 2)) != tuple_canonical_form(A4, (0, 1, 3))
    g = perm("(0 2)(1 3)", 4)
    image = tuple(g.images[x] for x in (0, 1, 2))
    assert tuple_canonical_form(A4, image) == tuple_canonical_form(A4, (0, 1, 2))


def test_tuple_canonical_form_counts_orbits():
    D8 = d8()
    forms = {tuple_canonical_form(D8, (a, b)) for a in range(4) for b in range(4) if a != b}
    # adjacent or opposite corners of the square
    assert len(forms) == 2


def test_conjugacy_classes_of_s4():
    sizes = sorted(len(c) for c in conjugacy_classes(symmetric(4)))
    assert sizes == [1, 3, 6, 6, 8]
    assert sum(sizes) == 24


def test_derived_subgroups():
    assert derived_subgroup(symmetric(4)).order() == 12
    assert derived_subgroup(a4()).order() == 4
    assert derived_subgroup(cyclic(5)).order() == 1


def test_normality_and_abelian():
    V4 = group(4, "(0 1)(2 3)", "(0 2)(1 3)")
    S4 = symmetric(4)
    assert is_normal(V4, S4)
    assert not is_normal(d8(), S4)
    assert is_abelian(V4)
    assert not is_abelian(a4())


def test_normal_closure_of_transposition_is_whole_symmetric_group():
    S5 = symmetric(5)
    assert normal_closure(S5, [perm("(0 1)", 5)]).order() == math.factorial(5)
    assert normal_closure(S5, [perm("(0 1 2)", 5)]).order() == 60
