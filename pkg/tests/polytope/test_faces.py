"""Tests for faces.py."""

import pytest

from dempoly.demchar.verify import OracleReport
from dempoly.errors.exceptions import IndexRangeError
from dempoly.polytope.faces import (
    FaceReport,
    face_embedding_check,
)
from dempoly.rootsys.cartan import LieType
from dempoly.rootsys.weights import dominant_weights

A2 = LieType("A", 2)


def _suffix_starts(rank):
    return [
        (start, substart)
        for start in range(1, rank + 1)
        for substart in range(start + 1, rank + 1)
    ]


@pytest.mark.parametrize("weight,count", [
    ((1, 0), 3),
    ((0, 1), 2),
])
def test_face_embedding_check_sl3(weight, count):
    """Test the face of s2 s1 inside the sl3 polytope."""
    res = face_embedding_check(A2, 1, 2, weight)
    assert res.passed
    assert res.face_count == count
    assert res.oracle.dimension == count
    assert res.witness is None


@pytest.mark.parametrize("family,rank", [
    ("A", 4),
    ("A", 5),
    ("B", 4),
    ("C", 3),
    ("C", 4),
])
def test_face_embedding_check_all_suffixes(family, rank):
    """Test every suffix word against its Demazure character."""
    lie_type = LieType(family, rank)
    failures = [
        (start, substart, weight)
        for start, substart in _suffix_starts(rank)
        for weight in dominant_weights(rank, 2)
        if not face_embedding_check(
            lie_type, start, substart, weight
        ).passed
    ]
    assert failures == []


def test_face_embedding_check_type_d():
    """Test that type D faces report the oracle of the suffix."""
    res = face_embedding_check(
        LieType("D", 4), 1, 2, (1, 0, 0, 0), variant="hatted"
    )
    assert res.face_count == res.oracle.point_count
    entry = res.to_dict()
    assert entry["passed"] is res.passed
    assert set(entry["oracle"]) >= {"passed", "points", "dim"}


def test_face_report_witness():
    """Test that a character mismatch names the witness weight."""
    oracle = OracleReport(
        passed=False, point_count=2, dimension=3, mismatch=((0, 1), 0, 1),
    )
    res = FaceReport(passed=False, face_count=2, oracle=oracle)
    assert res.witness == (0, 1)
    assert res.to_dict()["witness"] == [0, 1]


def test_face_embedding_check_substart():
    """Test that the suffix must start after the word."""
    with pytest.raises(IndexRangeError):
        face_embedding_check(A2, 2, 2, (1, 0))
    with pytest.raises(IndexRangeError):
        face_embedding_check(LieType("A", 3), 1, 4, (1, 0, 0), end=3)
