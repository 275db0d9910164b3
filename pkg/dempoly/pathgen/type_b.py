"""Paths of the type B chain.

Local labels ``(j, barred)`` refer to the first row of a rank ``r`` system,
ordered ``(1) > .. > (r) > (-r) > .. > (-2)``.
"""

import logging
from typing import List

from dempoly.pathgen.paths import (
    PathKind,
    _Draft,
    add_terms,
    bound_terms,
)
from dempoly.pathgen.type_c import (
    barred_descending,
    prefix,
)

# Get logger instance
logger = logging.getLogger(__name__)


def degree_bound(rank: int, j: int) -> dict:
    """``q_j = 2m_1 + m_2 + .. + m_(j-1) + 2(m_j + .. + m_(r-1)) + m_r``."""
    return add_terms(
        bound_terms((1, 1), times=2),
        bound_terms((2, j - 1)),
        bound_terms((j, rank - 1), times=2),
        bound_terms((rank, rank)),
    )


def chain_drafts(
    rank: int,
    include_coefficients: bool = True,
    include_all_ones: bool = False,
) -> List[_Draft]:
    """Local paths of the type B chain of rank `rank`.

    For every ``j = 2..r`` the degree support carries the ``t1`` tuples with
    cutoff ``k = j-1..r-1`` and one ``t2`` tuple. The all-ones inequality
    with bound ``q_j`` is redundant for every ``j`` once the coefficient
    paths are present. Only for ``j = 2`` does a single path, ``t1`` with
    ``k = j-1``, dominate it coefficientwise; for larger ``j`` it follows
    from the system as a whole. It is emitted on request or when
    coefficient paths are excluded.

    Args:
        rank: Local rank ``r``.
        include_coefficients: Whether to emit ``t1`` and ``t2`` paths.
        include_all_ones: Whether to emit the all-ones degree inequalities
            alongside the coefficient paths.
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
    for j in range(2, rank + 1):
        barred = barred_descending(j, rank)
        q_j = degree_bound(rank, j)
        if include_all_ones or not include_coefficients:
            drafts.append(_Draft(
                family="degree",
                kind=PathKind.DEGREE,
                entries=prefix(rank) + barred,
                bound=q_j,
                params=(("j", j),),
            ))
        if not include_coefficients:
            continue
        for k in range(j - 1, rank):
            drafts.append(_Draft(
                family="t1",
                kind=PathKind.COEFFICIENT,
                entries=prefix(k, coeff=2) + prefix(rank)[k:] + barred,
                bound=add_terms(q_j, bound_terms((2, k))),
                params=(("j", j), ("k", k)),
            ))
        drafts.append(_Draft(
            family="t2",
            kind=PathKind.COEFFICIENT,
            entries=prefix(rank - 1, coeff=2) + [((rank, False), 1)]
            + [(label, 2) for label, _ in barred],
            bound=add_terms(
                q_j, bound_terms((2, rank)), bound_terms((j, rank - 1))
            ),
            params=(("j", j),),
        ))
    logger.debug(f"Generated {len(drafts)} type B paths of rank {rank}.")
    return drafts
