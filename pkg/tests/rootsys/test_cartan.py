"""Tests for cartan.py."""

import numpy as np
import pytest

from dempoly.errors.exceptions import (
    IndexRangeError,
    InvalidInputError,
    RankDomainError,
)
from dempoly.rootsys.cartan import (
    Family,
    LieType,
    as_lie_type,
    cartan_matrix,
    simple_root_weight,
)

A2 = LieType("A", 2)
B2 = LieType("B", 2)
C2 = LieType("C", 2)
D4 = LieType("D", 4)


def test_lie_type_from_string():
    """Test that families are accepted as strings of either case."""
    res = LieType("c", 3)
    assert res.family is Family.C
    assert str(res) == "C3"
    assert res == LieType(Family.C, 3)


@pytest.mark.parametrize("family,rank", [
    ("A", 0),
    ("B", 1),
    ("C", 1),
    ("D", 3),
])
def test_lie_type_rank_too_small(family, rank):
    """Test ranks below the smallest rank of the family."""
    with pytest.raises(RankDomainError):
        LieType(family, rank)


def test_lie_type_unknown_family():
    """Test exceptional families."""
    with pytest.raises(InvalidInputError):
        LieType("E", 6)


def test_lie_type_parse():
    """Test parsing of names such as B4."""
    assert LieType.parse(" b4 ") == LieType("B", 4)
    assert as_lie_type("D5") == LieType("D", 5)
    assert as_lie_type(A2) is A2
    with pytest.raises(InvalidInputError):
        LieType.parse("G2")


def test_check_index():
    """Test Dynkin node bounds."""
    assert A2.check_index(2) == 2
    with pytest.raises(IndexRangeError):
        A2.check_index(0)
    with pytest.raises(IndexRangeError):
        A2.check_index(3)


def test_cartan_matrix_a2():
    """Test the A2 Cartan matrix."""
    assert cartan_matrix(A2).tolist() == [[2, -1], [-1, 2]]


def test_cartan_matrix_b2_c2_transposed():
    """Test that B2 and C2 are dual."""
    assert cartan_matrix(C2).tolist() == [[2, -2], [-1, 2]]
    assert np.array_equal(cartan_matrix(B2), cartan_matrix(C2).T)


def test_cartan_matrix_d4_branch():
    """Test the branch node of D4."""
    res = cartan_matrix(D4)
    assert res[1, 3] == res[3, 1] == -1
    assert res[2, 3] == res[3, 2] == 0
    assert res[1, 2] == -1


def test_cartan_matrix_is_copy():
    """Test that callers cannot corrupt the cached matrix."""
    res = cartan_matrix(A2)
    res[0, 0] = 7
    assert cartan_matrix(A2)[0, 0] == 2


def test_simple_root_weight():
    """Test fundamental-weight coordinates of simple roots."""
    assert simple_root_weight(A2, 1).tolist() == [2, -1]
    assert simple_root_weight(C2, 2).tolist() == [-2, 2]
    with pytest.raises(IndexRangeError):
        simple_root_weight(C2, 3)
