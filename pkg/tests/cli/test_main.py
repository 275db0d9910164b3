"""Tests for main.py."""

import io
import json
from pathlib import Path

import pytest

from dempoly.cli.main import (
    build_parser,
    main,
    to_params,
)

DIR = Path(__file__).parent.parent / "test_files"
CONF_LIMITS = DIR / "conf_limits.yaml"
CONF_OVERLAY = DIR / "conf_overlay.yaml"
CONF_VALID = DIR / "conf_valid.yaml"


def _main(*argv):
    stream = io.StringIO()
    errors = io.StringIO()
    code = main(list(argv), stream=stream, error_stream=errors)
    return code, stream.getvalue(), errors.getvalue()


def test_to_params():
    """Test renamed destinations and suppressed defaults."""
    args = build_parser().parse_args([
        "poset", "--type", "D", "--rank", "4", "--word", "full",
        "--no-coeff", "--config", "x.yaml",
    ])
    assert to_params(args) == {
        "command": "poset",
        "family": "D",
        "rank": 4,
        "variant": "full",
        "include_coefficients": False,
    }


def test_main_inequalities():
    """Test the sp6 inequalities."""
    code, out, err = _main("inequalities", "--type", "C", "--rank", "3")
    assert code == 0
    assert err == ""
    doc = json.loads(out)
    assert doc["command"] == "inequalities"
    assert doc["count"] == 8
    code, out, _ = _main(
        "inequalities", "--type", "c", "--rank", "3", "--no-coeff"
    )
    assert json.loads(out)["count"] == 5


def test_main_dim_check():
    """Test a passing dimension check."""
    code, out, _ = _main(
        "dim-check", "--type", "B", "--rank", "2", "--weight", "1,0"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["passed"] is True
    assert doc["points"] == doc["dim"] == 5


def test_main_membership_fails():
    """Test that a non-member exits with code 1."""
    code, out, _ = _main(
        "membership", "--type", "A", "--rank", "3", "--weight", "0,1,0",
        "--point", "1,0,0,0,0",
    )
    assert code == 1
    assert json.loads(out)["member"] is False


def test_main_csv(tmp_path):
    """Test CSV output to a file."""
    out_file = tmp_path / "points.csv"
    code, out, _ = _main(
        "points", "--type", "A", "--rank", "3", "--weight", "0,1,0",
        "--format", "csv", "--out", str(out_file),
    )
    assert code == 0
    assert out == ""
    lines = out_file.read_text().splitlines()
    assert lines[0] == '"a[1,1]","a[1,2]","a[1,3]","a[2,3]","a[3,3]"'
    assert len(lines) == 6


def test_main_empty_sweep():
    """Test a sweep without cells."""
    code, out, _ = _main("sweep", "--families", "D", "--ranks", "2,3")
    assert code == 0
    assert json.loads(out)["rows"] == []


@pytest.mark.parametrize("argv", [
    ("bogus",),
    ("roots", "--unknown"),
    ("roots", "--rank", "x"),
])
def test_main_usage_errors(argv, capsys):
    """Test unknown commands and malformed flags."""
    code, _, _ = _main(*argv)
    assert code == 2
    assert "usage" in capsys.readouterr().err


def test_main_version(capsys):
    """Test the version flag."""
    code, _, _ = _main("--version")
    assert code == 0
    assert capsys.readouterr().out.startswith("dempoly ")


def test_main_invalid_run_config():
    """Test a missing weight."""
    code, out, err = _main("count", "--type", "A", "--rank", "3")
    assert code == 2
    assert out == ""
    problem = json.loads(err)
    assert problem["title"] == "Invalid Run Configuration"
    assert "--weight" in problem["detail"]


def test_main_domain_error():
    """Test an inadmissible rank."""
    code, _, err = _main("roots", "--type", "D", "--rank", "3")
    assert code == 2
    assert json.loads(err)["title"] == "Rank Out Of Domain"


def test_main_config_limits():
    """Test limits from a configuration file."""
    code, _, err = _main(
        "roots", "--type", "A", "--rank", "4", "--config", str(CONF_LIMITS)
    )
    assert code == 2
    assert json.loads(err)["title"] == "Resource Limit Exceeded"


def test_main_config_overlay():
    """Test that repeated files are merged in order."""
    code, out, _ = _main(
        "count", "--type", "A", "--rank", "3", "--weight", "0,1,0",
        "--config", str(CONF_VALID), "--config", str(CONF_OVERLAY),
    )
    assert code == 0
    assert out.splitlines()[0] == "command,count"


def test_main_config_missing(tmp_path):
    """Test an unreadable configuration file."""
    code, _, err = _main(
        "roots", "--type", "A", "--rank", "2",
        "--config", str(tmp_path / "missing.yaml"),
    )
    assert code == 2
    assert "could not be read" in err
