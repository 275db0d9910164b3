"""Miscellaneous utility functions."""

from functools import reduce
import operator
from typing import (Any, Dict, List, Sequence, Tuple)


def _get_by_path(
    obj: Dict,
    key_sequence: List[str]
) -> Any:
    """Access a nested dictionary by sequence of keys.

    Args:
        obj: (Nested) dictionary.
        key_sequence: Sequence of keys, to be applied from outside to inside,
            pointing to the key (and descendants) to retrieve.

    Returns:
        Value of innermost key.
    """
    return reduce(operator.getitem, key_sequence, obj)  # type: ignore


def parse_int_list(
    value: str,
    length: int = -1,
) -> Tuple[int, ...]:
    """Parse comma-separated integers, e.g., a weight ``"1,0,2"``.

    Args:
        value: Comma-separated integers; whitespace around items is ignored.
        length: Expected number of items; ``-1`` accepts any positive number.

    Returns:
        Tuple of parsed integers.

    Raises:
        ValueError: Items are not integers or the count does not match.
    """
    items = [item.strip() for item in value.split(",")]
    try:
        parsed = tuple(int(item) for item in items)
    except ValueError as exc:
        raise ValueError(
            f"'{value}' is not a comma-separated list of integers"
        ) from exc
    if length >= 0 and len(parsed) != length:
        raise ValueError(
            f"'{value}' has {len(parsed)} entries, expected {length}"
        )
    return parsed


def format_int_list(values: Sequence[int]) -> str:
    """Inverse of :py:func:`parse_int_list`."""
    return ",".join(str(int(v)) for v in values)
