"""Tests for degree.py."""

import pytest

from dempoly.pathgen.degree import (
    max_pbw_degree,
    type_a_degree,
)
from dempoly.rootsys.cartan import LieType
from dempoly.rootsys.weights import add_weights
from dempoly.rootsys.words import reflection_word

A3 = LieType("A", 3)
C2 = LieType("C", 2)


@pytest.mark.parametrize("start,end,weight,expected", [
    (1, 3, (1, 1, 1), 4),
    (1, 3, (0, 1, 0), 2),
    (2, 2, (0, 3, 0), 3),
    (1, 2, (2, 0, 5), 2),
])
def test_type_a_degree(start, end, weight, expected):
    """Test the closed form of type A hooks."""
    assert type_a_degree(start, end, weight) == expected


def test_max_pbw_degree_type_a():
    """Test that enumeration agrees with the closed form."""
    word = reflection_word(A3, 1)
    assert max_pbw_degree(word, (0, 1, 0)) == 2
    assert max_pbw_degree(word, (1, 0, 1)) == 2
    assert max_pbw_degree(reflection_word(A3, 2), (0, 2, 1)) == 3


def test_max_pbw_degree_type_c():
    """Test the maximal degree of S(omega_2) in C2."""
    assert max_pbw_degree(reflection_word(C2, 1), (0, 1)) == 2


def test_max_pbw_degree_zero_weight():
    """Test that only the empty monomial survives at weight zero."""
    assert max_pbw_degree(reflection_word(C2, 1), (0, 0)) == 0


@pytest.mark.parametrize("family,rank,weight,other", [
    ("A", 3, (1, 0, 0), (0, 1, 1)),
    ("C", 2, (1, 0), (0, 1)),
    ("C", 3, (0, 1, 0), (0, 0, 1)),
    ("B", 2, (1, 0), (0, 1)),
])
def test_max_pbw_degree_additive(family, rank, weight, other):
    """Test additivity of the maximal degree in the weight."""
    word = reflection_word(LieType(family, rank), 1)
    total = max_pbw_degree(word, add_weights(weight, other))
    assert total == max_pbw_degree(word, weight) \
        + max_pbw_degree(word, other)
