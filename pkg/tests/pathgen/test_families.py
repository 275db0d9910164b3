"""Tests for families.py."""

import pytest

from dempoly.errors.exceptions import IndexRangeError
from dempoly.pathgen.families import (
    paths_for_word,
    paths_type_A,
    paths_type_B,
    paths_type_C,
    paths_type_D,
)
from dempoly.pathgen.paths import PathKind
from dempoly.rootsys.cartan import LieType
from dempoly.rootsys.posets import inversion_set
from dempoly.rootsys.words import reflection_word

SL4_DEGREE_ROOTS = ["a[1,1]", "a[1,2]", "a[1,3]", "a[2,3]", "a[3,3]"]


def _labels(path):
    return [root.label for root in path.roots]


def _find(paths, family, **params):
    matches = [
        p for p in paths
        if p.family == family and dict(p.params) == params
    ]
    assert len(matches) == 1
    return matches[0]


def test_paths_type_a_degree_path():
    """Test the single degree path of the sl4 hook."""
    paths = paths_type_A(1, 3, 3)
    (degree,) = [p for p in paths if p.kind is PathKind.DEGREE]
    assert _labels(degree) == SL4_DEGREE_ROOTS
    assert degree.bound.b == (1, 2, 1)


def test_paths_type_a_redundant():
    """Test that one Dyck path of the sl4 hook is implied by another."""
    assert len(paths_type_A(1, 3, 3)) == 7
    assert len(paths_type_A(1, 3, 3, include_redundant=True)) == 8


def test_paths_type_a_single_node():
    """Test the hook of a simple root."""
    (path,) = paths_type_A(3, 3, 3)
    assert _labels(path) == ["a[3,3]"]
    assert path.bound.b == (0, 0, 1)


def test_paths_type_a_invalid_hook():
    """Test hooks outside the Dynkin diagram."""
    with pytest.raises(IndexRangeError):
        paths_type_A(2, 1, 3)
    with pytest.raises(IndexRangeError):
        paths_type_A(1, 4, 3)


def test_paths_type_c_sp6():
    """Test the eight paths of the sp6 word."""
    paths = paths_type_C(3)
    assert len(paths) == 8
    coeff = _find(paths, "coeff", j=2, k=2)
    assert coeff.kind is PathKind.COEFFICIENT
    assert _labels(coeff) == [
        "a[1,1]", "a[1,2]", "a[1,3]", "a[1,-2]", "a[1,-1]",
    ]
    assert coeff.coeffs == (2, 2, 1, 1, 2)
    assert coeff.bound.b == (2, 3, 2)
    degree = _find(paths, "degree", j=3)
    assert _labels(degree) == ["a[1,1]", "a[1,2]", "a[1,3]", "a[1,-1]"]
    assert degree.bound.b == (1, 1, 2)


def test_paths_type_c_without_coefficients():
    """Test the paths of the polytope without coefficient paths."""
    paths = paths_type_C(3, include_coefficients=False)
    assert len(paths) == 5
    assert all(p.kind is not PathKind.COEFFICIENT for p in paths)


def test_paths_type_c_invalid_start():
    """Test a start outside the Dynkin diagram."""
    with pytest.raises(IndexRangeError):
        paths_type_C(3, start=4)


def test_paths_type_b_t1():
    """Test the t1 path of B2."""
    paths = paths_type_B(2)
    t1 = _find(paths, "t1", j=2, k=1)
    assert _labels(t1) == ["a[1,1]", "a[1,2]", "a[1,-2]"]
    assert t1.coeffs == (2, 1, 1)
    assert t1.bound.b == (2, 1)


def test_paths_type_b_all_ones():
    """Test that all-ones degree paths are emitted on request."""
    assert not [p for p in paths_type_B(3) if p.family == "degree"]
    paths = paths_type_B(3, include_redundant=True)
    assert [dict(p.params)["j"] for p in paths if p.family == "degree"] \
        == [2, 3]


def test_paths_type_d_coefficients():
    """Test a coefficient path of the hatted D4 word."""
    paths = paths_type_D(4)
    coeff = _find(paths, "coeff", d=2, k=2)
    assert _labels(coeff) == [
        "a[1,1]", "a[1,2]", "a[1,3]", "a[1,-4]", "a[1,-3]", "a[1,-2]",
    ]
    assert coeff.coeffs == (2, 2, 1, 1, 1, 1)
    assert coeff.bound.b == (2, 3, 1, 1)


def test_paths_type_d_full_word():
    """Test that the full D word gives hook paths."""
    paths = paths_type_D(4, variant="full")
    assert {p.family for p in paths} <= {"D1", "D2", "D3", "DEG"}
    (degree,) = [p for p in paths if p.kind is PathKind.DEGREE]
    assert degree.bound.b == (1, 2, 0, 1)


@pytest.mark.parametrize("family,rank,start,variant", [
    ("A", 4, 2, None),
    ("B", 4, 1, None),
    ("C", 4, 2, None),
    ("D", 4, 1, "hatted"),
    ("D", 5, 2, "full"),
])
def test_paths_for_word_cover_inversion_set(family, rank, start, variant):
    """Test that every path lives on the inversion set and covers it."""
    word = reflection_word(LieType(family, rank), start, variant)
    poset = inversion_set(word)
    paths = paths_for_word(word)
    used = set()
    for path in paths:
        assert all(root in poset for root in path.roots)
        assert all(c in (1, 2) for c in path.coeffs)
        used.update(path.roots)
    assert used == set(poset.elements)
