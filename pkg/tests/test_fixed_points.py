import pytest

from errors import NonIntegralFormula, NotAMember
from actions.action_space import ActionSpace, coset_action
from groups.perm_group import PermGroup, conjugacy_classes
from parsers.group_file import load_group_file
from config import FIXTURES_DIR
from reductions.fixed_points import (
    added_inequality_holds,
    class_fix_data,
    fix_count_centralizer,
    fix_count_direct,
    fix_count_formula,
    fix_count_subgroup,
)
from helpers import a4, corpus_files, perm


@pytest.fixture(scope="module")
def a6_on_180():
    gf = load_group_file(FIXTURES_DIR / "A6_on_180.json")
    G = gf.to_group()
    return coset_action(G, PermGroup(gf.subgroup_permutations(), degree=G.degree))


def test_direct_count_on_explicit_action():
    data = fix_count_direct(ActionSpace.explicit(a4()), perm("(0 1 2)", 4))
    assert data.fix_count == 1
    assert data.source == "direct_count"
    assert data.element == "(0 1 2)"


def test_direct_count_on_coset_action(a6_on_180):
    assert fix_count_direct(a6_on_180, perm("(0 1)(2 3)", 6)).fix_count == 4
    assert fix_count_direct(a6_on_180, perm("(0 1 2)", 6)).fix_count == 0


def test_direct_count_matches_formula(a6_on_180):
    # 45 involutions in A6, one of them in the point stabilizer
    direct = fix_count_direct(a6_on_180, perm("(0 2)(1 3)", 6)).fix_count
    assert direct == fix_count_formula(180, 1, 45) == 4


def test_direct_count_rejects_outsider():
    with pytest.raises(NotAMember):
        fix_count_direct(ActionSpace.explicit(a4()), perm("(0 1)", 4))


def test_class_formula():
    assert fix_count_formula(180, 1, 45) == 4
    assert fix_count_formula(180, 0, 40) == 0
    assert class_fix_data("2A", 180, 1, 45).fix_count == 4
    assert class_fix_data("2A", 180, 1, 45).source == "class_formula"


def test_centralizer_formula():
    assert fix_count_centralizer(44352000, [28800]) == 1540
    assert fix_count_centralizer(1365154560000000, [12600]) == 108345600000
    assert fix_count_centralizer(302400000, [50400]) == 6000
    assert fix_count_centralizer(24, [8, 4]) == 9


def test_centralizer_formula_must_divide():
    with pytest.raises(NonIntegralFormula):
        fix_count_centralizer(28800, [19200])


def test_formula_inputs_must_be_positive():
    with pytest.raises(ValueError):
        fix_count_formula(0, 1, 1)
    with pytest.raises(ValueError):
        fix_count_formula(10, -1, 1)
    with pytest.raises(ValueError):
        fix_count_centralizer(10, [0])
    with pytest.raises(NonIntegralFormula):
        fix_count_formula(10, 1, 3)


def test_subgroup_fix_count():
    assert fix_count_subgroup(180, 3, 15) == 36


def test_added_inequality():
    assert added_inequality_holds(4, 1)
    assert not added_inequality_holds(2, 2)


def _formula_matches_direct(action, H: PermGroup) -> None:
    for cls in conjugacy_classes(action.parent):
        g = cls[0]
        class_in_M = sum(1 for x in cls if x in H)
        assert fix_count_direct(action, g).fix_count == fix_count_formula(action.degree, class_in_M, len(cls))


def test_formula_matches_direct_count_on_every_class(a6_on_180):
    _formula_matches_direct(a6_on_180, a6_on_180.subgroup)


@pytest.mark.parametrize("path", corpus_files(max_order=720), ids=lambda p: p.stem)
def test_formula_matches_direct_count_on_point_stabilizers(path):
    G = load_group_file(path).to_group()
    _formula_matches_direct(ActionSpace.explicit(G), G.point_stabilizer(0))
