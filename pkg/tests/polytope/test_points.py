"""Tests for points.py."""

from multiprocessing import Pool

from hypothesis import (
    given,
    settings,
    strategies as st,
)
import pytest

from dempoly.errors.exceptions import (
    NotDominantError,
    ParameterError,
    ResourceLimitError,
)
from dempoly.polytope.points import (
    brute_force_points,
    enumerate_points,
    membership,
)
from dempoly.polytope.system import build_system
from dempoly.rootsys.cartan import LieType
from dempoly.rootsys.weights import dominant_weights

A3 = LieType("A", 3)
SL4_OMEGA2 = [
    (0, 0, 0, 0, 0),
    (0, 0, 0, 1, 0),
    (0, 0, 1, 0, 0),
    (0, 1, 0, 0, 0),
    (0, 1, 0, 1, 0),
]
SYSTEMS = [
    build_system(LieType("A", 2)),
    build_system(A3),
    build_system(A3, start=2),
    build_system(LieType("A", 4), start=2, end=3),
    build_system(LieType("B", 2)),
    build_system(LieType("B", 3)),
    build_system(LieType("C", 2)),
    build_system(LieType("C", 3)),
    build_system(LieType("D", 4)),
    build_system(LieType("D", 4), variant="full"),
]


def _weights(rank, max_sum):
    return st.sampled_from(list(dominant_weights(rank, max_sum)))


def test_enumerate_points_sl4():
    """Test the five points of S(omega_2) for sl4."""
    res = enumerate_points(build_system(A3), (0, 1, 0))
    assert list(res.points) == SL4_OMEGA2
    assert res.count == 5
    assert (0, 1, 0, 1, 0) in res
    assert [0, 0, 1, 0, 0] in res
    assert (1, 0, 0, 0, 0) not in res


@pytest.mark.parametrize("family,weight,count", [
    ("B", (1, 0), 5),
    ("B", (0, 1), 3),
    ("C", (1, 0), 4),
    ("C", (0, 1), 4),
])
def test_enumerate_points_rank_two(family, weight, count):
    """Test the hand-verified rank two counts."""
    res = enumerate_points(build_system(LieType(family, 2)), weight)
    assert len(res) == count


def test_enumerate_points_zero_weight():
    """Test that only the origin survives at weight zero."""
    res = enumerate_points(build_system(A3), (0, 0, 0))
    assert list(res) == [(0, 0, 0, 0, 0)]


def test_enumerate_points_not_dominant():
    """Test weights with negative coordinates."""
    with pytest.raises(NotDominantError):
        enumerate_points(build_system(A3), (0, -1, 0))


def test_enumerate_points_limit():
    """Test the point limit."""
    with pytest.raises(ResourceLimitError):
        enumerate_points(build_system(A3), (0, 1, 0), max_points=3)
    res = enumerate_points(build_system(A3), (0, 1, 0), max_points=5)
    assert len(res) == 5


def test_enumerate_points_pool():
    """Test that the worker pool gives the serial result."""
    system = build_system(LieType("C", 3))
    serial = enumerate_points(system, (1, 1, 0))
    with Pool(2) as pool:
        parallel = enumerate_points(system, (1, 1, 0), pool=pool)
    assert parallel.points == serial.points


def test_point_set_report():
    """Test maxima and the report form of a point set."""
    res = enumerate_points(build_system(A3), (0, 1, 0))
    assert res.maxima() == (0, 1, 1, 1, 0)
    entry = res.to_dict()
    assert entry["lambda"] == [0, 1, 0]
    assert entry["count"] == 5
    assert entry["points"][-1] == [0, 1, 0, 1, 0]
    assert entry["order"] == res.system.order


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(SYSTEMS), st.data())
def test_enumeration_matches_brute_force(system, data):
    """Test the enumeration against a scan of the full box."""
    weight = data.draw(_weights(system.lie_type.rank, 2))
    walked = enumerate_points(system, weight)
    scanned = brute_force_points(system, weight)
    assert walked.as_set() == scanned.as_set()
    assert list(walked.points) == sorted(walked.points)


def test_brute_force_volume_limit():
    """Test the box volume limit of the brute force scan."""
    with pytest.raises(ResourceLimitError):
        brute_force_points(build_system(A3), (1, 1, 1), max_box_volume=10)


def test_membership():
    """Test membership with violated inequalities."""
    system = build_system(A3)
    assert membership((0, 1, 0, 1, 0), system, (0, 1, 0)).member
    res = membership((1, 0, 0, 0, 0), system, (0, 1, 0))
    assert not res.member
    assert all(slack < 0 for _, slack in res.violations)
    entry = res.to_dict(system.order)
    assert entry["member"] is False
    assert entry["violations"][0]["slack"] == -1


def test_membership_invalid_point():
    """Test points of the wrong length or with negative entries."""
    system = build_system(A3)
    with pytest.raises(ParameterError):
        membership((0, 1), system, (0, 1, 0))
    with pytest.raises(ParameterError):
        membership((0, -1, 0, 0, 0), system, (0, 1, 0))


@pytest.mark.parametrize("rank", [3, 4])
def test_enumerate_points_type_b_all_ones(rank):
    """Test that the all-ones degree inequalities cut no point."""
    lie_type = LieType("B", rank)
    system = build_system(lie_type)
    redundant = build_system(lie_type, include_redundant=True)
    assert len(redundant) > len(system)
    for weight in dominant_weights(rank, 2):
        assert enumerate_points(redundant, weight).as_set() \
            == enumerate_points(system, weight).as_set(), weight
