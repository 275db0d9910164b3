"""Tests for posets.py."""

import pytest

from dempoly.errors.exceptions import (
    NonReducedWordError,
    ParameterError,
)
from dempoly.rootsys.cartan import LieType
from dempoly.rootsys.posets import (
    inversion_set,
    is_decreasing,
    is_dyck_sequence,
    root_at,
    root_geq,
)
from dempoly.rootsys.roots import (
    root_by_label,
    root_from_label,
)
from dempoly.rootsys.words import (
    ReflectionWord,
    reflection_word,
)

A3 = LieType("A", 3)
C3 = LieType("C", 3)
D4 = LieType("D", 4)
CHAIN_C3 = ["a[1,1]", "a[1,2]", "a[1,3]", "a[1,-2]", "a[1,-1]"]
CHAIN_B3 = ["a[1,1]", "a[1,2]", "a[1,3]", "a[1,-3]", "a[1,-2]"]
DIAMOND_D4 = [
    "a[1,1]", "a[1,2]", "a[1,3]", "a[1,-4]", "a[1,-3]", "a[1,-2]",
]
DIAMOND_D4_COVERS = ((0, 1), (1, 2), (1, 3), (2, 4), (3, 4), (4, 5))


def _roots(lie_type, labels):
    return [root_from_label(lie_type, label) for label in labels]


def test_inversion_set_type_c_chain():
    """Test the chain of the C3 word."""
    res = inversion_set(reflection_word(C3, 1))
    assert res.labels == CHAIN_C3
    assert res.is_chain()
    assert res.covers == ((0, 1), (1, 2), (2, 3), (3, 4))


def test_inversion_set_type_b_chain():
    """Test the chain of the B3 word."""
    res = inversion_set(reflection_word(LieType("B", 3), 1))
    assert res.labels == CHAIN_B3
    assert res.is_chain()


def test_inversion_set_type_d_diamond():
    """Test the diamond of the hatted D4 word."""
    res = inversion_set(reflection_word(D4, 1))
    assert res.labels == DIAMOND_D4
    assert not res.is_chain()
    assert res.covers == DIAMOND_D4_COVERS


def test_inversion_set_type_a():
    """Test the hook of the A3 word."""
    res = inversion_set(reflection_word(A3, 1))
    assert set(res.labels) == {
        "a[1,1]", "a[1,2]", "a[1,3]", "a[2,3]", "a[3,3]",
    }


@pytest.mark.parametrize("start", [1, 2, 3, 4])
def test_inversion_set_type_a_hooks(start):
    """Test the hook shape for every start in A4."""
    n = 4
    res = inversion_set(reflection_word(LieType("A", n), start))
    expected = {f"a[{start},{j}]" for j in range(start, n + 1)}
    expected |= {f"a[{p},{n}]" for p in range(start + 1, n + 1)}
    assert set(res.labels) == expected


def test_inversion_set_rank_one():
    """Test the single simple reflection of A1."""
    res = inversion_set(reflection_word(LieType("A", 1), 1))
    assert res.labels == ["a[1,1]"]
    assert res.covers == ()


def test_inversion_set_not_reduced():
    """Test that non-reduced words are rejected."""
    word = ReflectionWord(lie_type=LieType("A", 2), start=1, letters=(1, 1))
    with pytest.raises(NonReducedWordError):
        inversion_set(word)


def test_poset_index():
    """Test coordinate positions."""
    res = inversion_set(reflection_word(C3, 1))
    root = root_by_label(C3, 1, 2, barred=True)
    assert res.index(root) == 3
    assert res.positions()[root] == 3
    assert root in res
    with pytest.raises(ParameterError):
        res.index(root_by_label(C3, 2, 2))


def test_root_geq_type_d_incomparable():
    """Test the incomparable pair of the type D diamond."""
    a = root_by_label(D4, 1, 3)
    b = root_by_label(D4, 1, 4, barred=True)
    assert not root_geq(D4, a, b)
    assert not root_geq(D4, b, a)
    assert root_geq(D4, root_by_label(D4, 1, 2), b)


def test_root_at():
    """Test lookup by row and column position."""
    assert root_at(C3, 1, 5).label == "a[1,-2]"
    assert root_at(C3, 1, 4).label == "a[1,3]"
    assert root_at(A3, 2, 1) is None


def test_is_decreasing():
    """Test strictly decreasing sequences."""
    poset = inversion_set(reflection_word(A3, 1))
    assert is_decreasing(poset, _roots(A3, ["a[1,1]", "a[1,3]", "a[3,3]"]))
    assert not is_decreasing(poset, _roots(A3, ["a[1,3]", "a[1,1]"]))
    assert not is_decreasing(poset, _roots(A3, ["a[1,2]", "a[1,2]"]))


def test_is_dyck_sequence():
    """Test the rectangle condition on the A3 hook."""
    poset = inversion_set(reflection_word(A3, 1))
    assert is_dyck_sequence(poset, _roots(A3, ["a[1,1]", "a[2,3]"]))
    assert is_dyck_sequence(
        poset, _roots(A3, ["a[1,1]", "a[1,2]", "a[1,3]", "a[3,3]"])
    )
    assert not is_dyck_sequence(poset, _roots(A3, ["a[1,2]", "a[2,3]"]))
    assert not is_dyck_sequence(poset, _roots(A3, ["a[2,2]"]))
