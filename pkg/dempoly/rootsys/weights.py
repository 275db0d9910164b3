"""Weight arithmetic in fundamental-weight coordinates."""

import logging
from typing import (Iterator, Sequence, Tuple, Union)

import numpy as np

from dempoly.errors.exceptions import (
    InvalidInputError,
    NotDominantError,
    ParameterError,
)
from dempoly.rootsys.cartan import (
    LieType,
    _cartan,
)
from dempoly.rootsys.posets import RootPoset
from dempoly.utils.misc import parse_int_list

# Get logger instance
logger = logging.getLogger(__name__)

Weight = Tuple[int, ...]


def as_weight(
    lie_type: LieType,
    value: Union[str, Sequence[int]],
) -> Weight:
    """Validate a weight given as wire format string or integer sequence.

    Raises:
        dempoly.errors.exceptions.InvalidInputError: Unparsable or of the
            wrong length.
    """
    try:
        if isinstance(value, str):
            return parse_int_list(value, length=lie_type.rank)
        weight = tuple(int(m) for m in value)
    except (TypeError, ValueError) as exc:
        raise InvalidInputError(f"invalid weight: {exc}") from exc
    if len(weight) != lie_type.rank:
        raise InvalidInputError(
            f"weight {weight} has {len(weight)} coordinates, expected "
            f"{lie_type.rank}"
        )
    return weight


def is_dominant(weight: Sequence[int]) -> bool:
    return all(m >= 0 for m in weight)


def check_dominant(weight: Sequence[int]) -> Weight:
    """Return `weight` if dominant.

    Raises:
        dempoly.errors.exceptions.NotDominantError: Negative coordinate.
    """
    if not is_dominant(weight):
        raise NotDominantError(f"weight {tuple(weight)} is not dominant")
    return tuple(weight)


def fundamental_weight(lie_type: LieType, i: int) -> Weight:
    """Return ``omega_i``."""
    lie_type.check_index(i)
    return tuple(1 if k == i else 0 for k in range(1, lie_type.rank + 1))


def add_weights(*weights: Sequence[int]) -> Weight:
    return tuple(int(sum(col)) for col in zip(*weights))


def scale_weight(k: int, weight: Sequence[int]) -> Weight:
    return tuple(k * m for m in weight)


def dominant_weights(rank: int, max_sum: int) -> Iterator[Weight]:
    """All dominant weights of the given rank with coordinate sum up to
    `max_sum`, ordered by sum and then lexicographically descending.
    """
    def _compositions(total: int, parts: int) -> Iterator[Weight]:
        if parts == 1:
            yield (total,)
            return
        for head in range(total, -1, -1):
            for tail in _compositions(total - head, parts - 1):
                yield (head,) + tail

    for total in range(max_sum + 1):
        yield from _compositions(total, rank)


def root_weight(lie_type: LieType, coeffs: Sequence[int]) -> Weight:
    """Convert simple-root coordinates to fundamental-weight coordinates."""
    vec = _cartan(lie_type) @ np.asarray(coeffs, dtype=np.int64)
    return tuple(int(m) for m in vec)


def reflect_weight(
    lie_type: LieType,
    i: int,
    weight: Sequence[int],
) -> Weight:
    """Apply ``s_i`` to a weight, ``mu - <mu, alpha_i^v> alpha_i``."""
    lie_type.check_index(i)
    mu = np.asarray(weight, dtype=np.int64)
    out = mu - mu[i - 1] * _cartan(lie_type)[:, i - 1]
    return tuple(int(m) for m in out)


def apply_word_to_weight(
    lie_type: LieType,
    letters: Sequence[int],
    weight: Sequence[int],
) -> Weight:
    """Apply ``w = s_(i1) .. s_(il)`` to a weight, rightmost letter first."""
    out = tuple(weight)
    for i in reversed(letters):
        out = reflect_weight(lie_type, i, out)
    return out


def apply_inverse_word(
    lie_type: LieType,
    letters: Sequence[int],
    weight: Sequence[int],
) -> Weight:
    """Apply ``w^-1 = s_(il) .. s_(i1)``, i.e. ``s_(i1)`` first."""
    out = tuple(weight)
    for i in letters:
        out = reflect_weight(lie_type, i, out)
    return out


def weight_of_point(
    point: Sequence[int],
    weight: Sequence[int],
    poset: RootPoset,
) -> Weight:
    """Weight ``lambda - sum_alpha s_alpha alpha`` of the monomial ``f^s``.

    Args:
        point: Multi-exponent in the coordinate order of `poset`.
        weight: Highest weight ``lambda``.
        poset: Inversion set indexing the coordinates.

    Returns:
        Weight in fundamental-weight coordinates.

    Raises:
        dempoly.errors.exceptions.ParameterError: Lengths do not match.
    """
    lie_type = poset.lie_type
    if len(point) != len(poset.elements):
        raise ParameterError(
            f"point of length {len(point)} for {len(poset.elements)} "
            f"coordinates"
        )
    if len(weight) != lie_type.rank:
        raise ParameterError(
            f"weight of length {len(weight)} for rank {lie_type.rank}"
        )
    total = np.zeros(lie_type.rank, dtype=np.int64)
    for s, root in zip(point, poset.elements):
        if s:
            total += s * np.asarray(root.coeffs, dtype=np.int64)
    return tuple(
        int(m) for m in np.asarray(weight, dtype=np.int64)
        - _cartan(lie_type) @ total
    )
