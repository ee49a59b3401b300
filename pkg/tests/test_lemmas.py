import pytest

from config import FIXTURES_DIR
from actions.action_space import ActionSpace, coset_action
from binarity.certificates import verify_witness
from binarity.outcomes import NotApplicable
from groups.perm_group import PermGroup
from parsers.group_file import load_group_file
from perms.permutation import Permutation
from reductions import lemmas
from reductions.lemmas import lemma_added_witness, lemma_m2_witness, witness_on
from helpers import a4, corpus_group, perm


@pytest.fixture
def a4_on_6():
    return ActionSpace.explicit(corpus_group("T6_04_A4"))


def test_added_witness(a4_on_6):
    g, h = perm("(2 3)(4 5)", 6), perm("(0 1)(2 3)", 6)
    cert = lemma_added_witness(a4_on_6, g, h, 2)
    assert cert.kind == "strong"
    assert cert.left == [0, 1, 2, 3, 4, 5]
    assert cert.right == [0, 1, 3, 2, 4, 5]
    assert cert.provenance == "Lemma added (p=2)"
    assert verify_witness(cert).verified


@pytest.mark.parametrize(
    "p, h, reason",
    [
        (3, "(0 1)(2 3)", "g and h must have order 3"),
        (4, "(0 1)(2 3)", "4 is not prime"),
        (2, "(2 3)(4 5)", "<g, h> is not elementary abelian of order p^2"),
        (2, "(0 1)", "g or h is not in G"),
    ],
)
def test_added_witness_hypotheses(a4_on_6, p, h, reason):
    result = lemma_added_witness(a4_on_6, perm("(2 3)(4 5)", 6), perm(h, 6), p)
    assert result == NotApplicable(reason=reason)


@pytest.mark.slow
def test_m2_witness_on_a6_cosets():
    gf = load_group_file(FIXTURES_DIR / "A6_on_180.json")
    G = gf.to_group()
    action = coset_action(G, PermGroup(gf.subgroup_permutations(), degree=G.degree))
    cert = lemma_m2_witness(action, 0, 2, perm("(0 1)(2 3)", 6), perm("(0 2)(1 3)", 6))
    assert not isinstance(cert, NotApplicable), cert
    assert len(cert.left) == 6
    assert cert.left[0] == 0
    assert cert.provenance == "Lemma M2 (p=2)"
    assert verify_witness(cert).verified


def test_m2_witness_hypotheses():
    action = ActionSpace.explicit(a4())
    g, h = perm("(0 1)(2 3)", 4), perm("(0 2)(1 3)", 4)
    assert lemma_m2_witness(action, 0, 2, g, h).reason == "p=2 does not divide |G_alpha|=3"
    assert lemma_m2_witness(action, 0, 9, g, h).reason == "9 is not prime"
    assert lemma_m2_witness(action, 0, 3, g, h).reason == "p=3 does not divide |Omega|=4"


def test_m2_witness_rejects_intransitive_group():
    action = ActionSpace.explicit(PermGroup([perm("(0 1)(2 3)", 4)], degree=4))
    result = lemma_m2_witness(action, 0, 2, perm("(0 1)(2 3)", 4), perm("(0 1)(2 3)", 4))
    assert result.reason == "G is not transitive"


def test_witness_on_returns_global_transporter():
    G = PermGroup([perm("(0 1)", 2)])
    result = witness_on(G, [0, 1], {0: 1, 1: 0}, provenance="swap")
    assert isinstance(result, Permutation)
    assert result == perm("(0 1)", 2)


def test_witness_on_names_the_missing_pair():
    G = PermGroup([], degree=2)
    result = witness_on(G, [0, 1], {0: 1, 1: 0}, provenance="swap")
    assert result == NotApplicable(reason="some pair of Lambda cannot be carried to its image under tau by G")


def test_added_witness_contradiction_is_an_error(a4_on_6, monkeypatch):
    monkeypatch.setattr(lemmas, "witness_on", lambda *args, **kwargs: perm("(0 1)(2 3)", 6))
    with pytest.raises(ArithmeticError, match="induces tau_1"):
        lemma_added_witness(a4_on_6, perm("(2 3)(4 5)", 6), perm("(0 1)(2 3)", 6), 2)
