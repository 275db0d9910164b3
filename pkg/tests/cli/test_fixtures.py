"""Tests for fixtures.py."""

import pytest

from dempoly.cli.fixtures import (
    FIXTURES,
    INTRO_SP6,
    ComparisonMode,
    Gate,
    compare_inequalities,
    fixture_ids,
    fixtures_check,
    parse_inequality,
)
from dempoly.errors.exceptions import InvalidInputError
from dempoly.polytope.system import build_system
from dempoly.rootsys.cartan import LieType

C3 = LieType("C", 3)


def test_parse_inequality():
    """Test parsing in chain coordinates."""
    system = build_system(C3)
    assert parse_inequality("2s[1,1] + s[1,-2] <= m1 + 2m2", system) == (
        (2, 0, 0, 1, 0), (1, 2, 0),
    )
    assert parse_inequality("s[1, 3] <= 0", system) == (
        (0, 0, 1, 0, 0), (0, 0, 0),
    )


@pytest.mark.parametrize("text", [
    "s[1,1]",
    "x[1,1] <= m1",
    "s[1,1] <= k1",
    "s[2,2] <= m2",
])
def test_parse_inequality_invalid(text):
    """Test malformed inequalities and foreign coordinates."""
    with pytest.raises(InvalidInputError):
        parse_inequality(text, build_system(C3))


def test_compare_inequalities():
    """Test the published sp6 list against the generated system."""
    outcome = compare_inequalities(build_system(C3), INTRO_SP6)
    assert outcome.missing == []
    assert outcome.unexpected == []


def test_compare_inequalities_differences():
    """Test missing and unexpected inequalities."""
    system = build_system(C3)
    outcome = compare_inequalities(system, INTRO_SP6[1:] + ("s[1,1] <= m2",))
    assert outcome.missing == ["s[1,1] <= m2"]
    assert outcome.unexpected == ["s[1,1] <= m1"]
    outcome = compare_inequalities(system, INTRO_SP6[1:], exact=False)
    assert outcome.unexpected == []


def test_fixture_ids():
    """Test that identifiers are unique."""
    ids = fixture_ids()
    assert len(ids) == len(set(ids)) == len(FIXTURES)
    assert "intro-sl4" in ids


def test_fixtures_check_single():
    """Test a single fixture with recorded misprints."""
    (result,) = fixtures_check("intro-sl4")
    assert result.passed
    entry = result.to_dict()
    assert entry["id"] == "intro-sl4"
    assert entry["mode"] == ComparisonMode.inequality_list.value
    assert entry["gate"] == "hard"
    assert len(entry["typos"]) == 2


def test_fixtures_check_unknown():
    """Test an unknown identifier."""
    with pytest.raises(InvalidInputError):
        fixtures_check("table9")


def test_fixtures_check_hard_gates():
    """Test that every hard fixture passes."""
    results = fixtures_check()
    assert len(results) == len(FIXTURES)
    for result in results:
        if result.fixture.gate is Gate.hard:
            assert result.passed, result.to_dict()
