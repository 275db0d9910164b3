"""Tests for characters.py."""

from hypothesis import (
    given,
    settings,
    strategies as st,
)
import pytest

from dempoly.demchar.characters import (
    character_to_dict,
    demazure_character,
    demazure_op,
    dimension,
    monomial,
)
from dempoly.errors.exceptions import (
    IndexRangeError,
    NonReducedWordError,
    NotDominantError,
)
from dempoly.rootsys.cartan import LieType
from dempoly.rootsys.words import (
    ReflectionWord,
    reflection_word,
)

A1 = LieType("A", 1)
A2 = LieType("A", 2)
SMALL_TYPES = [A2, LieType("B", 2), LieType("C", 3), LieType("D", 4)]


def _characters(rank):
    weights = st.lists(
        st.integers(min_value=-3, max_value=3), min_size=rank, max_size=rank
    ).map(tuple)
    return st.dictionaries(
        weights,
        st.integers(min_value=-3, max_value=3).filter(bool),
        max_size=5,
    )


def test_monomial():
    """Test single weights."""
    assert monomial([1, 0]) == {(1, 0): 1}


@pytest.mark.parametrize("weight,expected", [
    ((2,), {(2,): 1, (0,): 1, (-2,): 1}),
    ((0,), {(0,): 1}),
    ((-1,), {}),
    ((-3,), {(-1,): -1, (1,): -1}),
])
def test_demazure_op_rank_one(weight, expected):
    """Test the four cases of the Demazure operator."""
    assert demazure_op(A1, 1, monomial(weight)) == expected


def test_demazure_op_cancellation():
    """Test that cancelling terms are removed."""
    character = {(-3,): 1, (1,): 1, (4,): 1}
    assert demazure_op(A1, 1, character) == {
        (4,): 1, (2,): 1, (0,): 1, (-2,): 1, (-4,): 1,
    }


def test_demazure_op_index():
    """Test an index outside the Dynkin diagram."""
    with pytest.raises(IndexRangeError):
        demazure_op(A2, 3, monomial((1, 0)))


@settings(max_examples=200)
@given(st.sampled_from(SMALL_TYPES), st.data())
def test_demazure_op_idempotent(lie_type, data):
    """Test D_i D_i = D_i on sparse characters."""
    i = data.draw(st.integers(min_value=1, max_value=lie_type.rank))
    character = data.draw(_characters(lie_type.rank))
    once = demazure_op(lie_type, i, character)
    assert demazure_op(lie_type, i, once) == once


def test_demazure_character_full_module():
    """Test that the longest word of sl3 gives the whole module."""
    word = reflection_word(A2, 1)
    res = demazure_character(word, (1, 0))
    assert res == {(1, 0): 1, (-1, 1): 1, (0, -1): 1}
    assert dimension(demazure_character(word, (1, 1))) == 8


@pytest.mark.parametrize("family,rank,weight,dim", [
    ("A", 3, (0, 1, 0), 5),
    ("B", 2, (1, 0), 5),
    ("B", 2, (0, 1), 3),
    ("C", 2, (1, 0), 4),
    ("C", 2, (0, 1), 4),
])
def test_demazure_character_dimension(family, rank, weight, dim):
    """Test dimensions of Demazure modules of reflection words."""
    word = reflection_word(LieType(family, rank), 1)
    assert dimension(demazure_character(word, weight)) == dim


def test_demazure_character_zero_weight():
    """Test the trivial module."""
    word = reflection_word(LieType("C", 3), 1)
    assert demazure_character(word, (0, 0, 0)) == {(0, 0, 0): 1}


def test_demazure_character_invalid():
    """Test non-dominant weights and non-reduced words."""
    with pytest.raises(NotDominantError):
        demazure_character(reflection_word(A2, 1), (1, -1))
    word = ReflectionWord(lie_type=A2, start=1, letters=(1, 1))
    with pytest.raises(NonReducedWordError):
        demazure_character(word, (1, 0))


def test_character_to_dict():
    """Test the report form of a character."""
    word = reflection_word(A1, 1)
    res = character_to_dict(demazure_character(word, (1,)), word, (1,))
    assert res == {
        "lambda": [1],
        "word": [1],
        "dim": 2,
        "terms": [
            {"weight": [-1], "mult": 1},
            {"weight": [1], "mult": 1},
        ],
    }
