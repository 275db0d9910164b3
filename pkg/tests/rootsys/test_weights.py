"""Tests for weights.py."""

from hypothesis import (
    given,
    strategies as st,
)
import pytest

from dempoly.errors.exceptions import (
    InvalidInputError,
    NotDominantError,
    ParameterError,
)
from dempoly.rootsys.cartan import LieType
from dempoly.rootsys.posets import inversion_set
from dempoly.rootsys.weights import (
    add_weights,
    apply_inverse_word,
    apply_word_to_weight,
    as_weight,
    check_dominant,
    dominant_weights,
    fundamental_weight,
    reflect_weight,
    root_weight,
    scale_weight,
    weight_of_point,
)
from dempoly.rootsys.words import reflection_word

A2 = LieType("A", 2)
A3 = LieType("A", 3)
C2 = LieType("C", 2)
WORDS = [
    reflection_word(LieType("A", 3), 1),
    reflection_word(LieType("B", 3), 1),
    reflection_word(LieType("C", 3), 2),
    reflection_word(LieType("D", 4), 1),
]


def test_as_weight():
    """Test weights given as strings and sequences."""
    assert as_weight(A3, "0,1,0") == (0, 1, 0)
    assert as_weight(A3, [1, 0, 2]) == (1, 0, 2)


@pytest.mark.parametrize("value", ["0,1", [1, 0], "0,x,1", ["a", 0, 0]])
def test_as_weight_invalid(value):
    """Test unparsable weights and wrong lengths."""
    with pytest.raises(InvalidInputError):
        as_weight(A3, value)


def test_check_dominant():
    """Test the dominance check."""
    assert check_dominant([0, 2]) == (0, 2)
    with pytest.raises(NotDominantError):
        check_dominant((1, -1))


def test_fundamental_weight():
    """Test fundamental weights."""
    assert fundamental_weight(LieType("C", 3), 2) == (0, 1, 0)


def test_weight_arithmetic():
    """Test sums and multiples of weights."""
    assert add_weights((1, 0), (0, 1), (1, 1)) == (2, 2)
    assert scale_weight(3, (1, 2)) == (3, 6)


def test_dominant_weights():
    """Test enumeration of dominant weights by coordinate sum."""
    assert list(dominant_weights(2, 1)) == [(0, 0), (1, 0), (0, 1)]
    assert len(list(dominant_weights(3, 2))) == 10
    assert list(dominant_weights(2, 0)) == [(0, 0)]


def test_root_weight():
    """Test conversion from root to weight coordinates."""
    assert root_weight(A3, (1, 1, 1)) == (1, 0, 1)
    assert root_weight(C2, (2, 1)) == (2, 0)


def test_reflect_weight():
    """Test the simple reflection action on weights."""
    assert reflect_weight(A2, 1, (1, 0)) == (-1, 1)
    assert reflect_weight(A2, 2, (1, 0)) == (1, 0)


@given(st.sampled_from(WORDS), st.data())
def test_inverse_word_undoes_word(word, data):
    """Test that w^-1 undoes w on weights."""
    mu = data.draw(st.lists(
        st.integers(min_value=-3, max_value=3),
        min_size=word.lie_type.rank,
        max_size=word.lie_type.rank,
    ))
    image = apply_word_to_weight(word.lie_type, word.letters, mu)
    assert apply_inverse_word(word.lie_type, word.letters, image) \
        == tuple(mu)


def test_weight_of_point_zero():
    """Test that the empty monomial has the highest weight."""
    poset = inversion_set(reflection_word(A3, 1))
    assert weight_of_point((0,) * 5, (0, 1, 0), poset) == (0, 1, 0)


def test_weight_of_point_type_a():
    """Test f[1,3] applied to the highest weight vector of omega_2."""
    poset = inversion_set(reflection_word(A3, 1))
    point = [0] * 5
    point[poset.labels.index("a[1,3]")] = 1
    assert weight_of_point(point, (0, 1, 0), poset) == (-1, 1, -1)


def test_weight_of_point_type_c():
    """Test f[1,-1] applied to the highest weight vector of omega_1."""
    poset = inversion_set(reflection_word(C2, 1))
    point = [0] * len(poset)
    point[poset.labels.index("a[1,-1]")] = 1
    assert weight_of_point(point, (1, 0), poset) == (-1, 0)


def test_weight_of_point_length_mismatch():
    """Test points and weights of the wrong length."""
    poset = inversion_set(reflection_word(C2, 1))
    with pytest.raises(ParameterError):
        weight_of_point((0, 0), (1, 0), poset)
    with pytest.raises(ParameterError):
        weight_of_point((0, 0, 0), (1, 0, 0), poset)
