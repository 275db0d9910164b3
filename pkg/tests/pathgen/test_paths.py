"""Tests for paths.py."""

import pytest

from dempoly.errors.exceptions import ParameterError
from dempoly.pathgen.paths import (
    BoundForm,
    HookFrame,
    PathKind,
    PathSpec,
    RowFrame,
    add_terms,
    bound_terms,
    dominates,
    drop_dominated,
)
from dempoly.rootsys.cartan import LieType
from dempoly.rootsys.roots import root_by_label

A2 = LieType("A", 2)
C3 = LieType("C", 3)
D4 = LieType("D", 4)
A11 = root_by_label(A2, 1, 1)
A12 = root_by_label(A2, 1, 2)


def _path(roots, coeffs, bound, family="D1"):
    return PathSpec(
        roots=tuple(roots),
        kind=PathKind.DYCK,
        coeffs=tuple(coeffs),
        bound=BoundForm(bound),
        family=family,
    )


class TestBoundForm:

    def test_evaluate(self):
        """Evaluate at a weight."""
        assert BoundForm((1, 2, 1)).evaluate((0, 1, 0)) == 2

    def test_evaluate_wrong_length(self):
        """Weight of the wrong length."""
        with pytest.raises(ParameterError):
            BoundForm((1, 2)).evaluate((0, 1, 0))

    def test_str(self):
        """Human-readable form."""
        assert str(BoundForm((1, 2, 0))) == "m1 + 2m2"
        assert str(BoundForm.zero(3)) == "0"

    def test_order(self):
        """Sum and componentwise order."""
        total = BoundForm((1, 0)) + BoundForm((1, 2))
        assert total == BoundForm((2, 2))
        assert BoundForm((1, 0)) <= total
        assert not total <= BoundForm((1, 0))


def test_bound_terms():
    """Test local bound construction."""
    assert bound_terms((1, 2)) == {1: 1, 2: 1}
    assert bound_terms((2, 1)) == {}
    assert add_terms(bound_terms((1, 2)), bound_terms((2, 3), times=2)) \
        == {1: 1, 2: 3, 3: 2}


def test_path_spec_invalid():
    """Test empty paths and coefficient mismatches."""
    with pytest.raises(ParameterError):
        _path([], [], (1, 0))
    with pytest.raises(ParameterError):
        _path([A11, A12], [1], (1, 0))


def test_path_spec_to_dict():
    """Test the report form of a path."""
    path = PathSpec(
        roots=(A11, A12),
        kind=PathKind.DYCK,
        coeffs=(1, 1),
        bound=BoundForm((1, 1)),
        family="D3",
        params=(("a", 1), ("b", 2)),
    )
    assert path.identifier == "D3(a=1,b=2)"
    assert path.to_dict() == {
        "id": "D3(a=1,b=2)",
        "kind": "dyck",
        "roots": ["a[1,1]", "a[1,2]"],
        "coeffs": [1, 1],
        "bound": [1, 1],
        "params": {"a": 1, "b": 2},
    }


def test_dominates():
    """Test implication between path inequalities."""
    wide = _path([A11, A12], [1, 1], (1, 0))
    narrow = _path([A11], [1], (1, 1))
    assert dominates(wide, narrow)
    assert not dominates(narrow, wide)


def test_drop_dominated():
    """Test removal of implied and duplicate inequalities."""
    wide = _path([A11, A12], [1, 1], (1, 0), family="wide")
    narrow = _path([A11], [1], (1, 1), family="narrow")
    twin = _path([A11, A12], [1, 1], (1, 0), family="twin")
    assert drop_dominated([narrow, wide]) == [wide]
    assert drop_dominated([wide, twin]) == [wide]
    assert drop_dominated([narrow]) == [narrow]


def test_row_frame():
    """Test placement of local row labels."""
    frame = RowFrame(C3, 2)
    assert frame.local_rank == 2
    assert frame.root((1, False)).label == "a[2,2]"
    assert frame.root((1, True)).label == "a[2,-2]"
    assert frame.bound({1: 1, 2: 2}) == BoundForm((0, 1, 2))


def test_hook_frame():
    """Test placement of hook labels on the nodes of the full D word."""
    frame = HookFrame(D4, (1, 2, 4))
    assert frame.root((1, 3)).label == "a[1,-4]"
    assert frame.root((2, 3)).label == "a[2,-4]"
    assert frame.bound({3: 1}) == BoundForm((0, 0, 0, 1))
    with pytest.raises(ParameterError):
        HookFrame(D4, (1, 3)).root((1, 2))
