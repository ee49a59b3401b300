"""End-to-end reproductions: corpus sweeps and the fixture groups."""

import math

import pytest

from config import FIXTURES_DIR
from errors import NonIntegralFormula
from actions.action_space import ActionSpace, coset_action
from binarity.certificates import verify_witness
from binarity.orbit_counts import orbit_count_table, test1_character_bound
from binarity.subtuples import witness_from_closure
from closure.orbitals import orbital_partition
from closure.two_closure import SymbolicFullSymmetric, two_closure
from groups.backtrack import normalizer
from groups.perm_group import PermGroup
from parsers.group_file import load_group_file
from perms.permutation import compose
from pipeline.analyze import analyze_file
from reductions.alot import Test5Config, test5_alot
from reductions.fixed_points import fix_count_centralizer
from reductions.lemmas import lemma_m2_witness
from helpers import a4, all_permutations, corpus_files, cyclic, fixture_group, perm


@pytest.mark.slow
@pytest.mark.parametrize("path", corpus_files(max_degree=7, max_order=5000), ids=lambda p: p.stem)
def test_oracle_soundness_sweep(path):
    report = analyze_file(path, oracle=True)
    assert report.arity is not None
    if report.arity == 2:
        assert not any(o.non_binary for o in report.outcomes)
        assert report.verdict == "binary"
    else:
        assert report.verdict == "non-binary"
    for outcome in report.outcomes:
        if outcome.certificate is not None:
            assert verify_witness(outcome.certificate).verified


@pytest.mark.parametrize("path", corpus_files(max_degree=10), ids=lambda p: p.stem)
def test_orbit_count_methods_agree_on_corpus(path):
    action = ActionSpace.explicit(load_group_file(path).to_group())
    ell_max = min(4, action.degree)
    a = orbit_count_table(action, ell_max, method="character_sum")
    b = orbit_count_table(action, ell_max, method="direct_orbit")
    assert all(a[ell] == b[ell] for ell in range(2, ell_max + 1))


def test_a4_orbit_counts_and_test1():
    action = ActionSpace.explicit(a4())
    table = orbit_count_table(action, 3)
    assert (table[2], table[3]) == (1, 2)
    evidence = test1_character_bound(action, 6)
    assert (evidence.ell, evidence.bound) == (3, 1)


def test_m11_degree_11():
    evidence = test1_character_bound(ActionSpace.explicit(fixture_group("M11_on_11")), 6)
    assert (evidence.ell, evidence.r_ell, evidence.r_2, evidence.bound) == (5, 7, 1, 1)


@pytest.mark.slow
def test_m11_degree_12():
    M11 = fixture_group("M11_on_11")
    c = M11.generators[0]
    L = next(
        H
        for H in (PermGroup([c, b], degree=11) for b in M11.elements() if b.order() == 2)
        if H.order() == 660
    )
    action = coset_action(M11, L)
    assert action.degree == 12
    evidence = test1_character_bound(action, 6)
    assert evidence.ell == 4
    assert evidence.r_2 == 1
    assert evidence.r_ell > evidence.bound


@pytest.mark.slow
@pytest.mark.parametrize("path", corpus_files(max_degree=8), ids=lambda p: p.stem)
def test_closure_ground_truth(path):
    action = ActionSpace.explicit(load_group_file(path).to_group())
    partition = orbital_partition(action)
    n = action.degree
    expected = 0
    for sigma in all_permutations(n):
        im = sigma.images
        if all(partition.color(u, v) == partition.color(im[u], im[v]) for u in range(n) for v in range(n)):
            expected += 1
    assert two_closure(action).order() == expected


def test_closure_anchors():
    assert two_closure(ActionSpace.explicit(cyclic(5))).is_two_closed
    assert two_closure(ActionSpace.explicit(a4())).order() == 24


def test_l3_3_on_13_is_not_two_closed():
    G = fixture_group("L3_3_on_13")
    V = PermGroup([perm("(1 3 4)(7 9 12)(8 10 11)", 13), G.generators[2]], degree=13)
    assert V.order() == 9
    K = normalizer(G, V)
    assert K.order() == 432
    action = coset_action(G, K)
    assert action.degree == 13
    result = two_closure(action)
    assert not result.is_two_closed
    cert = witness_from_closure(action)
    assert cert.kind == "strong"
    assert verify_witness(cert).verified


def test_frobenius_32_closure_is_symmetric():
    result = two_closure(ActionSpace.explicit(fixture_group("Frobenius_32_31")))
    assert isinstance(result.closure, SymbolicFullSymmetric)
    assert result.order() == math.factorial(32)


def test_extraspecial_closure_order():
    G = fixture_group("extraspecial_27_on_9")
    assert G.order() == 27
    assert two_closure(ActionSpace.explicit(G)).order() == 81


@pytest.mark.slow
def test_co3_suborbit_fixture():
    report = analyze_file(FIXTURES_DIR / "A4xS5_on_45.json", tests=("3",))
    assert report.degree == 45
    assert report.verdict == "non-binary"
    assert verify_witness(report.first_certificate()).verified

    report = analyze_file(FIXTURES_DIR / "A4xS5_over_2x2xD4.json", tests=("4",))
    assert report.verdict == "non-binary"
    cert = report.outcomes[0].certificate
    assert cert is not None
    assert cert.group.degree == 45
    assert verify_witness(cert).verified


@pytest.mark.slow
def test_pgl2_19_divisibility():
    gf = load_group_file(FIXTURES_DIR / "PGL2_19_test5.json")
    spec = gf.point_stabilizer
    assert spec.omega % 2 == 0
    assert len(spec.omega_size) == 51
    report = test5_alot(Test5Config(M=gf.to_group(), omega_size=spec.omega, d=spec.d))
    assert report.conclusion == "non_binary"
    assert sorted(a.degree for a in report.actions) == [171, 285, 855]
    assert all(a.verdict == "non_binary" for a in report.actions)


@pytest.mark.slow
def test_m2_lemma_end_to_end():
    gf = load_group_file(FIXTURES_DIR / "A6_on_180.json")
    G = gf.to_group()
    action = coset_action(G, PermGroup(gf.subgroup_permutations(), degree=G.degree))
    g, h = perm("(0 1)(2 3)", 6), perm("(0 2)(1 3)", 6)
    cert = lemma_m2_witness(action, 0, 2, g, h)
    assert verify_witness(cert).verified
    lam = cert.left
    assert len(lam) == 6
    rg, rh = action.image_of(g), action.image_of(h)
    rgh = compose(rg, rh)
    # each of g, h, gh fixes its own pair and swaps the other two pairs
    for x in (rg, rh, rgh):
        blocks = [lam[0:2], lam[2:4], lam[4:6]]
        fixed = [all(x.images[a] == a for a in block) for block in blocks]
        swapped = [x.images[block[0]] == block[1] for block in blocks]
        assert fixed.count(True) == 1
        assert swapped.count(True) == 2
    assert all(rg.images[a] == a for a in lam[0:2])
    assert all(rh.images[a] == a for a in lam[2:4])
    assert all(rgh.images[a] == a for a in lam[4:6])


def test_fixed_point_arithmetic():
    assert fix_count_centralizer(44352000, [28800]) == 1540
    assert fix_count_centralizer(1365154560000000, [12600]) == 108345600000
    assert fix_count_centralizer(302400000, [50400]) == 6000
    with pytest.raises(NonIntegralFormula):
        fix_count_centralizer(28800, [19200])
