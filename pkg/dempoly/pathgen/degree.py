"""Maximal PBW degree of the points of ``S_w(lambda)``."""

import logging
from typing import (Optional, Sequence)

from dempoly.errors.exceptions import OracleMismatchError
from dempoly.rootsys.cartan import Family
from dempoly.rootsys.words import ReflectionWord

# Get logger instance
logger = logging.getLogger(__name__)


def type_a_degree(start: int, end: int, weight: Sequence[int]) -> int:
    """Closed form for a type A hook ``alpha_(i,k)``.

    ``m_i + m_k + 2(m_(i+1) + .. + m_(k-1))``, or ``m_i`` if ``i = k``.
    """
    if start == end:
        return weight[start - 1]
    inner = sum(weight[d - 1] for d in range(start + 1, end))
    return weight[start - 1] + weight[end - 1] + 2 * inner


def max_pbw_degree(
    word: ReflectionWord,
    weight: Sequence[int],
    max_points: Optional[int] = None,
) -> int:
    """Maximum of ``sum_alpha s_alpha`` over ``S_w(lambda)``.

    In type A the enumerated value is compared with the closed form.

    Args:
        word: Reflection word.
        weight: Dominant weight ``lambda``.
        max_points: Point limit for the enumeration.

    Returns:
        Maximal PBW degree.

    Raises:
        dempoly.errors.exceptions.OracleMismatchError: Enumeration and the
            type A closed form disagree.
    """
    from dempoly.polytope.points import enumerate_points
    from dempoly.polytope.system import build_system_for_word

    points = enumerate_points(
        build_system_for_word(word), weight, max_points
    )
    degree = max(sum(point) for point in points)
    if word.lie_type.family is Family.A:
        expected = type_a_degree(
            word.start, word.end or word.lie_type.rank, weight
        )
        if expected != degree:
            raise OracleMismatchError(
                f"maximal degree {degree} differs from the closed form "
                f"{expected} for '{word}' at lambda={tuple(weight)}"
            )
    logger.debug(
        f"Maximal PBW degree of '{word}' at lambda={tuple(weight)}: {degree}"
    )
    return degree
