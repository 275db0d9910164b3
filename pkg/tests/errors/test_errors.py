"""
Tests for exceptions.py
"""

from copy import deepcopy
import io
import json

import pytest

from dempoly.errors.exceptions import (
    DemPolyError,
    IndexRangeError,
    InvalidInputError,
    NotDominantError,
    OracleMismatchError,
    RankDomainError,
    ResourceLimitError,
    _exc_to_str,
    _exclude_key_nested_dict,
    _log_exception,
    _lookup_mapping,
    _subset_nested_dict,
    exceptions,
    handle_problem,
)
from dempoly.models.config import (
    Config,
    ExceptionLoggingEnum,
)

EXCEPTION_INSTANCE = Exception()
INVALID_LOG_FORMAT = 'unknown_log_format'
TEST_DICT = {
    "title": "MyException",
    "details": {
        "code": 2,
        "description": "Some exception",
    },
    "exit_code": 2,
}
TEST_KEYS = ['details', 'code']
EXPECTED_SUBSET_RESULT = {
    "details": {
        "code": 2,
    },
}
EXPECTED_EXCLUDE_RESULT = {
    "title": "MyException",
    "details": {
        "description": "Some exception",
    },
    "exit_code": 2,
}
PUBLIC_MEMBERS = [['title']]
PRIVATE_MEMBERS = [['exit_code']]


class UnknownException(Exception):
    pass


def _handle(exception, conf):
    stream = io.StringIO()
    code = handle_problem(exception, conf, stream=stream)
    return code, stream.getvalue()


def test_exception_hierarchy():
    """All domain errors derive from the package base class."""
    assert issubclass(RankDomainError, InvalidInputError)
    assert issubclass(NotDominantError, InvalidInputError)
    assert issubclass(InvalidInputError, DemPolyError)
    assert issubclass(ResourceLimitError, DemPolyError)


def test_exceptions_mapping_complete():
    """Every domain error has a mapped exit code."""
    for cls in DemPolyError.__subclasses__():
        assert cls in exceptions
        assert exceptions[cls]["exit_code"] == 2


def test__exc_to_str():
    """Test exception reformatter function."""
    res = _exc_to_str(exc=EXCEPTION_INSTANCE)
    assert isinstance(res, str)


@pytest.mark.parametrize("format", ['oneline', 'minimal', 'regular'])
def test__log_exception(caplog, format):
    """Test exception reformatter function."""
    _log_exception(
        exc=EXCEPTION_INSTANCE,
        format=format,
    )
    assert "Exception" in caplog.text


def test__log_exception_invalid_format(caplog):
    """Test exception reformatter function with invalid format argument."""
    _log_exception(
        exc=EXCEPTION_INSTANCE,
        format=INVALID_LOG_FORMAT,
    )
    assert "logging is misconfigured" in caplog.text


def test__subset_nested_dict():
    """Test nested dictionary subsetting function."""
    res = _subset_nested_dict(
        obj=TEST_DICT,
        key_sequence=deepcopy(TEST_KEYS)
    )
    assert res == EXPECTED_SUBSET_RESULT


def test__exclude_key_nested_dict():
    """Test function to exclude a key from a nested dictionary."""
    res = _exclude_key_nested_dict(
        obj=deepcopy(TEST_DICT),
        key_sequence=deepcopy(TEST_KEYS)
    )
    assert res == EXPECTED_EXCLUDE_RESULT


def test__lookup_mapping_most_specific():
    """Test that the closest mapped base class is found."""
    assert _lookup_mapping(RankDomainError(), exceptions) is RankDomainError
    assert _lookup_mapping(UnknownException(), exceptions) is Exception
    assert _lookup_mapping(UnknownException(), {}) is None


def test_handle_problem_domain_error():
    """Test problem handler with a mapped domain error."""
    conf = Config().exceptions
    code, text = _handle(IndexRangeError("start 5 out of range"), conf)
    assert code == 2
    problem = json.loads(text)
    assert problem["title"] == "Index Out Of Range"
    assert problem["detail"] == "start 5 out of range"


def test_handle_problem_unlisted_error():
    """Test problem handler with instance of custom, unlisted error."""
    conf = Config().exceptions
    code, text = _handle(UnknownException("boom"), conf)
    assert code == 2
    assert json.loads(text)["title"] == "Internal Error"


def test_handle_problem_inherited_mapping():
    """Test problem handler with a subclass of a mapped error."""

    class CustomOracleError(OracleMismatchError):
        pass

    conf = Config().exceptions
    _, text = _handle(CustomOracleError("differ"), conf)
    assert json.loads(text)["title"] == "Oracle Mismatch"


def test_handle_problem_no_fallback_exception():
    """Test problem handler; unlisted error without fallback."""
    conf = Config().exceptions
    conf.mapping = dict(conf.mapping)
    del conf.mapping[Exception]
    code, text = _handle(UnknownException(), conf)
    assert code == 2
    assert text == ""


def test_handle_problem_with_public_members():
    """Test problem handler with public members."""
    conf = Config().exceptions
    conf.public_members = PUBLIC_MEMBERS
    code, text = _handle(UnknownException(), conf)
    assert code == 2
    problem = json.loads(text)
    assert "exit_code" not in problem
    assert problem["title"] == "Internal Error"


def test_handle_problem_with_private_members():
    """Test problem handler with private members."""
    conf = Config().exceptions
    conf.private_members = PRIVATE_MEMBERS
    code, text = _handle(UnknownException(), conf)
    assert code == 2
    assert "exit_code" not in json.loads(text)


def test_handle_problem_suppressed_document():
    """Test problem handler with an empty public member filter."""
    conf = Config().exceptions
    conf.public_members = []
    code, text = _handle(UnknownException(), conf)
    assert code == 2
    assert json.loads(text) == {}


def test_handle_problem_logging_none(caplog):
    """Test that exception logging can be disabled."""
    conf = Config().exceptions
    conf.logging = ExceptionLoggingEnum.none
    _handle(UnknownException("quiet"), conf)
    assert "quiet" not in caplog.text
