"""Paths of the type C chain.

Local labels ``(j, barred)`` refer to the first row of a rank ``r`` system,
ordered ``(1) > (2) > .. > (r) > (-(r-1)) > .. > (-1)``.
"""

import logging
from typing import List

from dempoly.pathgen.paths import (
    PathKind,
    _Draft,
    add_terms,
    bound_terms,
)

# Get logger instance
logger = logging.getLogger(__name__)


def prefix(last: int, coeff: int = 1) -> list:
    """Unbarred prefix ``(1) .. (last)``."""
    return [((j, False), coeff) for j in range(1, last + 1)]


def barred_descending(first: int, last: int) -> list:
    """Barred labels ``-last .. -first`` in chain order."""
    return [((j, True), 1) for j in range(last, first - 1, -1)]


def degree_bound(rank: int, j: int) -> dict:
    """``q_j = m_1 + .. + m_(j-1) + 2 (m_j + .. + m_r)``."""
    return add_terms(bound_terms((1, j - 1)), bound_terms((j, rank), times=2))


def chain_drafts(
    rank: int,
    include_coefficients: bool = True,
) -> List[_Draft]:
    """Local paths of the type C chain of rank `rank`.

    Args:
        rank: Local rank ``r``.
        include_coefficients: Whether to emit the paths with coefficients.

    Returns:
        Dyck prefixes, the special Dyck path, degree paths ``j = 2..r`` and,
        for each ``j``, the coefficient tuples with cutoff
        ``k = j-1..r-1``.
    """
    if rank == 1:
        return [_Draft(
            family="prefix",
            kind=PathKind.DYCK,
            entries=prefix(1),
            bound=bound_terms((1, 1)),
            params=(("j", 1),),
        )]
    drafts = []
    for j in range(1, rank):
        drafts.append(_Draft(
            family="prefix",
            kind=PathKind.DYCK,
            entries=prefix(j),
            bound=bound_terms((1, j)),
            params=(("j", j),),
        ))
    drafts.append(_Draft(
        family="special",
        kind=PathKind.DYCK,
        entries=prefix(rank - 1) + [((1, True), 1)],
        bound=bound_terms((1, rank)),
    ))
    for j in range(2, rank + 1):
        support = (
            prefix(rank) + barred_descending(j, rank - 1)
            + [((1, True), 1)]
        )
        drafts.append(_Draft(
            family="degree",
            kind=PathKind.DEGREE,
            entries=support,
            bound=degree_bound(rank, j),
            params=(("j", j),),
        ))
    if include_coefficients:
        for j in range(2, rank + 1):
            for k in range(j - 1, rank):
                entries = (
                    prefix(k, coeff=2) + prefix(rank)[k:]
                    + barred_descending(j, rank - 1) + [((1, True), 2)]
                )
                drafts.append(_Draft(
                    family="coeff",
                    kind=PathKind.COEFFICIENT,
                    entries=entries,
                    bound=add_terms(
                        degree_bound(rank, j), bound_terms((1, k))
                    ),
                    params=(("j", j), ("k", k)),
                ))
    logger.debug(f"Generated {len(drafts)} type C paths of rank {rank}.")
    return drafts
