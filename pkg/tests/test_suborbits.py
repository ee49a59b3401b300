import pytest

from config import FIXTURES_DIR
from actions.action_space import ActionSpace
from binarity.certificates import verify_witness
from binarity.outcomes import Inconclusive
from groups.budget import Budgets
from groups.perm_group import PermGroup
from parsers.group_file import GroupFile, load_group_file
from reductions.suborbits import suborbit_reduction, suborbit_reduction_abstract
from helpers import a4, corpus_group, group


def test_suborbit_of_a5_carries_a4():
    action = ActionSpace.explicit(corpus_group("T5_4_A5"))
    result = suborbit_reduction(action, alpha=0)
    assert result.alpha == 0
    assert result.suborbit == [1, 2, 3, 4]
    assert result.inner_test == "1"
    assert result.evidence.ell == 3
    assert result.provenance == "Test 4 via suborbit of size 4"


def test_suborbit_certificate_is_lifted():
    action = ActionSpace.explicit(corpus_group("T5_4_A5"))
    result = suborbit_reduction(action, alpha=0, tests=("3",))
    cert = result.certificate
    assert cert.left == [0, 1, 2, 3]
    assert cert.right == [0, 1, 2, 4]
    assert verify_witness(cert).verified


def test_suborbit_inconclusive():
    result = suborbit_reduction(ActionSpace.explicit(a4()))
    assert isinstance(result, Inconclusive)
    assert result.reason == "every suborbit action is inconclusive"


def test_small_suborbits_are_skipped():
    # D8 point stabilizer has suborbits of sizes 1 and 2 only
    result = suborbit_reduction(ActionSpace.explicit(group(4, "(0 1 2 3)", "(0 2)")))
    assert isinstance(result, Inconclusive)


def test_suborbit_needs_transitive_action():
    with pytest.raises(ValueError):
        suborbit_reduction(ActionSpace.explicit(group(4, "(0 1)")))


def test_abstract_form_on_point_stabilizer():
    A4 = a4()
    result = suborbit_reduction_abstract(A4, A4.point_stabilizer(0))
    assert result.alpha is None
    assert result.suborbit == [0, 1, 2, 3]
    assert result.inner_test == "1"
    assert result.provenance == "Test 4 via the degree-4 coset action of M"


def test_abstract_form_degree_cap():
    A4 = a4()
    result = suborbit_reduction_abstract(A4, PermGroup.trivial(4), Budgets(degree_cap=5))
    assert isinstance(result, Inconclusive)
    assert "exceeds cap 5" in result.reason


@pytest.mark.slow
def test_abstract_form_on_a4_x_s5():
    gf = load_group_file(FIXTURES_DIR / "A4xS5_over_2x2xD4.json")
    M = gf.to_group()
    gens = gf.point_stabilizer.intersections[0]
    H = PermGroup(GroupFile(degree=M.degree, generators=gens).permutations(), degree=M.degree)
    result = suborbit_reduction_abstract(M, H)
    assert result.inner_test == "3"
    assert len(result.suborbit) == 45
    assert verify_witness(result.certificate).verified
