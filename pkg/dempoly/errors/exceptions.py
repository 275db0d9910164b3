"""Define domain exceptions and map them to problem documents and exit codes.
"""

from copy import deepcopy
import json
import logging
import sys
from traceback import format_exception
from typing import (Dict, List, Optional, TextIO, TYPE_CHECKING)

from pydantic import ValidationError

from dempoly.utils.misc import _get_by_path

if TYPE_CHECKING:  # pragma: no cover
    from dempoly.models.config import ExceptionConfig

# Get logger instance
logger = logging.getLogger(__name__)


class DemPolyError(Exception):
    """Base class for all errors raised by ``dempoly``."""


class InvalidInputError(DemPolyError):
    """Malformed user input, e.g., an unparsable weight or root label."""


class RankDomainError(InvalidInputError):
    """Rank not admissible for the requested Lie type family."""


class IndexRangeError(InvalidInputError):
    """Simple-root, start or label index out of range."""


class VariantError(InvalidInputError):
    """Word variant requested for a family that does not support it."""


class ParameterError(InvalidInputError):
    """Inconsistent parameters, e.g., a point of the wrong length."""


class NotDominantError(InvalidInputError):
    """Weight with a negative fundamental-weight coordinate."""


class NonReducedWordError(DemPolyError):
    """Number of inversions differs from the number of letters."""


class UnboundedSystemError(DemPolyError):
    """Some coordinate is not bounded by any inequality."""


class PreconditionError(DemPolyError):
    """Operation called on an input outside of its domain."""


class BoxTooSmallError(PreconditionError):
    """Scan box does not contain the point set plus one layer."""


class ResourceLimitError(DemPolyError):
    """A configured resource limit was exceeded."""


class DecompositionError(DemPolyError):
    """A point could not be split into fundamental summands."""


class OracleMismatchError(DemPolyError):
    """Two independent computations of the same quantity disagree."""


# Default exceptions
exceptions = {
    Exception: {
        "title": "Internal Error",
        "exit_code": 2,
    },
    ValidationError: {
        "title": "Invalid Run Configuration",
        "exit_code": 2,
    },
    InvalidInputError: {
        "title": "Invalid Input",
        "exit_code": 2,
    },
    RankDomainError: {
        "title": "Rank Out Of Domain",
        "exit_code": 2,
    },
    IndexRangeError: {
        "title": "Index Out Of Range",
        "exit_code": 2,
    },
    VariantError: {
        "title": "Unsupported Word Variant",
        "exit_code": 2,
    },
    ParameterError: {
        "title": "Inconsistent Parameters",
        "exit_code": 2,
    },
    NotDominantError: {
        "title": "Weight Not Dominant",
        "exit_code": 2,
    },
    NonReducedWordError: {
        "title": "Word Not Reduced",
        "exit_code": 2,
    },
    UnboundedSystemError: {
        "title": "Unbounded Inequality System",
        "exit_code": 2,
    },
    PreconditionError: {
        "title": "Precondition Violated",
        "exit_code": 2,
    },
    BoxTooSmallError: {
        "title": "Scan Box Too Small",
        "exit_code": 2,
    },
    ResourceLimitError: {
        "title": "Resource Limit Exceeded",
        "exit_code": 2,
    },
    DecompositionError: {
        "title": "Decomposition Failed",
        "exit_code": 2,
    },
    OracleMismatchError: {
        "title": "Oracle Mismatch",
        "exit_code": 2,
    },
}


def _exc_to_str(
    exc: BaseException,
    delimiter: str = "\\n",
) -> str:
    """Convert exception, including traceback, to string representation.

    Args:
        exc: The exception to convert to a string.
        delimiter: The delimiter used to join different lines of the exception
            stack.

    Returns:
        String representation of exception.
    """
    exc_lines = format_exception(
        exc.__class__,
        exc,
        exc.__traceback__
    )
    exc_stripped = [e.rstrip('\n') for e in exc_lines]
    exc_split = []
    for item in exc_stripped:
        exc_split.extend(item.splitlines())
    return delimiter.join(exc_split)


def _log_exception(
    exc: BaseException,
    format: str = 'oneline',
) -> None:
    """Log exception with indicated format.

    Args:
        exc: The exception to log.
        format: One of ``oneline`` (exception, including traceback logged to
            single line), ``minimal`` (log only exception title and message),
            or ``regular`` (exception logged with entire trace stack, typically
            across multiple lines).
    """
    exc_str = ''
    valid_formats = [
        'oneline',
        'minimal',
        'regular',
    ]
    if format in valid_formats:
        if format == "oneline":
            exc_str = _exc_to_str(exc=exc)
        elif format == "minimal":
            exc_str = f"{type(exc).__name__}: {str(exc)}"
        else:
            exc_str = _exc_to_str(
                exc=exc,
                delimiter='\n'
            )
        logger.error(exc_str)
    else:
        logger.error("Error logging is misconfigured.")


def _subset_nested_dict(
    obj: Dict,
    key_sequence: List,
) -> Dict:
    """Subset nested dictionary.

    Args:
        obj: (Nested) dictionary.
        key_sequence: Sequence of keys, to be applied from outside to inside,
            pointing to the key (and descendants) to keep.

    Returns:
        Subset of `obj`.
    """
    filt = {}
    if len(key_sequence):
        key = key_sequence.pop(0)
        filt[key] = obj[key]
        if len(key_sequence):
            filt[key] = _subset_nested_dict(filt[key], key_sequence)
    return filt


def _exclude_key_nested_dict(
    obj: Dict,
    key_sequence: List,
) -> Dict:
    """Exclude key from nested dictionary.

    Args:
        obj: (Nested) dictionary.
        key_sequence: Sequence of keys, to be applied from outside to inside,
            pointing to the key (and descendants) to delete.

    Returns:
        `obj` stripped of excluded key.
    """
    if len(key_sequence):
        key = key_sequence.pop(0)
        if len(key_sequence):
            _exclude_key_nested_dict(obj[key], key_sequence)
        else:
            del obj[key]
    return obj


def _lookup_mapping(
    exception: BaseException,
    mapping: Dict,
) -> Optional[type]:
    """Find the most specific mapped class in the exception's MRO."""
    for cls in type(exception).__mro__:
        if cls in mapping:
            return cls
    return None


def handle_problem(
    exception: BaseException,
    conf: "ExceptionConfig",
    stream: Optional[TextIO] = None,
) -> int:
    """Generic JSON problem handler for the command line.

    Looks up the problem members of the exception (or its closest mapped base
    class), logs the exception as configured, writes the filtered problem
    document as a single JSON line and returns the mapped exit code.

    Args:
        exception: Raised exception.
        conf: Exception handling configuration.
        stream: Where to write the problem document; defaults to
            ``sys.stderr``.

    Returns:
        Exit code to terminate the process with.
    """
    stream = sys.stderr if stream is None else stream
    mapping = conf.mapping or {}
    exc = _lookup_mapping(exception, mapping)
    try:
        if exc is None:
            raise KeyError(type(exception).__name__)
        exit_code = int(_get_by_path(
            obj=mapping[exc],
            key_sequence=conf.code_member,
        ))
    except KeyError:
        if conf.logging.value != "none":
            _log_exception(
                exc=exception,
                format=conf.logging.value
            )
        return 2
    # Log exception JSON & traceback
    if conf.logging.value != "none":
        logger.error(mapping[exc])
        _log_exception(
            exc=exception,
            format=conf.logging.value
        )
    # Filter members to be shown to user
    keep = deepcopy(mapping[exc])
    if conf.public_members is not None:
        keep = {}
        for member in deepcopy(conf.public_members):
            keep.update(_subset_nested_dict(
                obj=mapping[exc],
                key_sequence=member,
            ))
    elif conf.private_members is not None:
        for member in deepcopy(conf.private_members):
            keep.update(_exclude_key_nested_dict(
                obj=keep,
                key_sequence=member,
            ))
    if keep:
        keep["detail"] = str(exception)
    stream.write(json.dumps(keep) + "\n")
    return exit_code
