"""Paths of the type D diamond of the hatted word.

Local labels ``(j, barred)`` refer to the first row of a rank ``r`` system.
The poset is a chain up to ``(r-2)``, branches into ``(r-1)`` and ``(-r)``
and closes with ``(-(r-1)) > .. > (-2)``.
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


def degree_bound(rank: int, d: int) -> dict:
    """``Q_d = m_1 + .. + m_(d-1) + 2(m_d + .. + m_(r-2)) + m_(r-1) + m_r``.
    """
    return add_terms(
        bound_terms((1, d - 1)),
        bound_terms((d, rank - 2), times=2),
        bound_terms((rank - 1, rank)),
    )


def diamond_drafts(
    rank: int,
    include_coefficients: bool = True,
) -> List[_Draft]:
    """Local paths of the type D diamond of rank `rank`.

    Rank 2 is the tail ``alpha_(n-1), alpha_n`` of two orthogonal simple
    roots.
    """
    if rank == 2:
        return [
            _Draft(
                family="prefix",
                kind=PathKind.DYCK,
                entries=prefix(1),
                bound=bound_terms((1, 1)),
                params=(("j", 1),),
            ),
            _Draft(
                family="branch",
                kind=PathKind.DYCK,
                entries=[((2, True), 1)],
                bound=bound_terms((2, 2)),
            ),
        ]
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
        family="branch",
        kind=PathKind.DYCK,
        entries=prefix(rank - 2) + [((rank, True), 1)],
        bound=add_terms(bound_terms((1, rank - 2)), bound_terms((rank, rank))),
    ))
    drafts.append(_Draft(
        family="corner",
        kind=PathKind.DYCK,
        entries=prefix(rank - 1) + [((rank - 1, True), 1)],
        bound=bound_terms((1, rank)),
    ))
    drafts.append(_Draft(
        family="branch-corner",
        kind=PathKind.DYCK,
        entries=prefix(rank - 2) + barred_descending(rank - 1, rank),
        bound=bound_terms((1, rank)),
    ))
    for d in range(2, rank - 1):
        drafts.append(_Draft(
            family="degree",
            kind=PathKind.DEGREE,
            entries=prefix(rank - 1) + barred_descending(d, rank - 1),
            bound=degree_bound(rank, d),
            params=(("d", d), ("via", f"{rank - 1}")),
        ))
        drafts.append(_Draft(
            family="degree",
            kind=PathKind.DEGREE,
            entries=prefix(rank - 2) + barred_descending(d, rank),
            bound=degree_bound(rank, d),
            params=(("d", d), ("via", f"-{rank}")),
        ))
    if include_coefficients:
        for d in range(2, rank):
            for k in range(d - 1, rank - 1):
                drafts.append(_Draft(
                    family="coeff",
                    kind=PathKind.COEFFICIENT,
                    entries=prefix(k, coeff=2) + prefix(rank - 1)[k:]
                    + barred_descending(d, rank),
                    bound=add_terms(
                        degree_bound(rank, d), bound_terms((1, k))
                    ),
                    params=(("d", d), ("k", k)),
                ))
    logger.debug(f"Generated {len(drafts)} type D paths of rank {rank}.")
    return drafts
