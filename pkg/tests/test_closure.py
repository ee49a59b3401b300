import math

import pytest

from config import FIXTURES_DIR
from errors import DegreeCapExceeded
from actions.action_space import ActionSpace, coset_action
from closure.orbitals import UnionFind, orbital_partition
from closure.two_closure import SymbolicFullSymmetric, describe_closure, is_two_transitive, two_closure
from groups.perm_group import PermGroup
from parsers.group_file import load_group_file
from perms.permutation import Permutation
from helpers import a4, all_permutations, corpus_files, cyclic, d8, explicit, fixture_group, group, perm, symmetric


def _preserves(partition, sigma: Permutation) -> bool:
    n = partition.degree
    im = sigma.images
    return all(partition.color(u, v) == partition.color(im[u], im[v]) for u in range(n) for v in range(n))


def test_union_find():
    uf = UnionFind(5)
    uf.union(0, 1)
    uf.union(3, 4)
    uf.union(1, 4)
    assert uf.find(0) == uf.find(3)
    assert uf.find(2) != uf.find(0)


def test_orbital_partition_of_cyclic_group():
    partition = orbital_partition(ActionSpace.explicit(cyclic(5)))
    assert partition.num_colors == 5
    assert len(partition.diagonal_colors) == 1
    assert partition.off_diagonal_colors == 4
    assert partition.representatives() == [(0, 0), (0, 1), (0, 2), (0, 3), (0, 4)]
    assert partition.color(1, 3) == partition.color(0, 2)


def test_orbital_partition_of_intransitive_group():
    partition = orbital_partition(explicit(4, "(0 1)"))
    # fixed points 2 and 3 each get their own diagonal color
    assert len(partition.diagonal_colors) == 3


def test_orbital_partition_cap():
    with pytest.raises(DegreeCapExceeded):
        orbital_partition(ActionSpace.explicit(cyclic(6)), cap=5)


def test_two_transitivity():
    assert is_two_transitive(symmetric(4))
    assert is_two_transitive(a4())
    assert not is_two_transitive(d8())
    assert not is_two_transitive(group(4, "(0 1)"))


def test_closure_of_a4_is_symmetric():
    result = two_closure(ActionSpace.explicit(a4()))
    assert isinstance(result.closure, SymbolicFullSymmetric)
    assert str(result.closure) == "Sym(4)"
    assert result.order() == 24
    assert not result.is_two_closed
    assert result.witness_element == perm("(0 1)", 4)


def test_two_closed_groups():
    for G in (symmetric(4), cyclic(5), group(4, "(0 1)(2 3)", "(0 2)(1 3)"), d8()):
        result = two_closure(ActionSpace.explicit(G))
        assert result.is_two_closed, G
        assert result.witness_element is None
        assert result.order() == G.order()


def test_closure_of_extraspecial_group():
    G = fixture_group("extraspecial_27_on_9")
    result = two_closure(ActionSpace.explicit(G))
    assert not result.is_two_closed
    assert result.order() == 81
    assert result.witness_element not in G
    assert _preserves(result.partition, result.witness_element)


def test_closure_of_frobenius_group_is_symbolic():
    G = fixture_group("Frobenius_32_31")
    result = two_closure(ActionSpace.explicit(G))
    assert isinstance(result.closure, SymbolicFullSymmetric)
    assert result.order() == math.factorial(32)
    assert result.witness_element is not None
    assert result.witness_element not in G


@pytest.mark.parametrize("path", corpus_files(max_degree=6), ids=lambda p: p.stem)
def test_closure_matches_brute_force(path):
    action = ActionSpace.explicit(load_group_file(path).to_group())
    partition = orbital_partition(action)
    expected = sum(1 for p in all_permutations(action.degree) if _preserves(partition, p))
    result = two_closure(action)
    assert result.order() == expected
    assert result.is_two_closed == (expected == action.group.order())
    if result.witness_element is not None:
        assert result.witness_element not in action.group
        assert _preserves(partition, result.witness_element)


def test_closure_of_coset_action():
    # S4 on the 3 cosets of D8 is the full symmetric group S3
    result = two_closure(coset_action(symmetric(4), d8()))
    assert result.is_two_closed
    assert result.order() == 6


def test_closure_caps():
    action = ActionSpace.explicit(cyclic(5))
    with pytest.raises(DegreeCapExceeded):
        two_closure(action, closure_cap=3)
    with pytest.raises(DegreeCapExceeded):
        two_closure(action, degree_cap=3)


def test_trivial_degree_one():
    result = two_closure(ActionSpace.explicit(PermGroup.trivial(1)))
    assert result.is_two_closed
    assert result.order() == 1


def test_describe_closure():
    summary = describe_closure(two_closure(ActionSpace.explicit(a4())))
    assert summary == {
        "closure": "Sym(4)",
        "closure_order": "24",
        "is_two_closed": False,
        "witness_element": "(0 1)",
    }
    summary = describe_closure(two_closure(ActionSpace.explicit(cyclic(5))))
    assert summary["closure"] == ["(0 1 2 3 4)"]
    assert summary["witness_element"] is None


@pytest.mark.parametrize(
    "group_",
    [load_group_file(p).to_group() for p in corpus_files(max_degree=100)]
    + [fixture_group(stem) for stem in ("A4_on_6", "extraspecial_27_on_9", "L3_3_on_13", "M11_on_11")],
    ids=lambda G: G.name,
)
def test_closure_is_idempotent(group_):
    result = two_closure(ActionSpace.explicit(group_))
    if isinstance(result.closure, SymbolicFullSymmetric):
        return
    again = two_closure(ActionSpace.explicit(result.closure))
    assert again.is_two_closed
    assert again.order() == result.order()
