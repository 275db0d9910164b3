"""Dyck and degree paths of a hook.

A hook on ``K`` positions consists of the vertical chain
``(1,1) > (1,2) > .. > (1,K)`` followed by the horizontal chain
``(2,K) > .. > (K,K)``. Type A hooks ``alpha_(i,k)`` use the nodes
``i..k``; the reduced full type D word uses the nodes ``i..n-2, n``.
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


def _vertical(last: int) -> list:
    return [((1, q), 1) for q in range(1, last + 1)]


def _horizontal(first: int, size: int) -> list:
    return [((p, size), 1) for p in range(first, size + 1)]


def hook_drafts(size: int) -> List[_Draft]:
    """Local paths of a hook with `size` positions.

    Families, in emission order:

    * ``D1``: vertical prefixes up to ``a < K``, bound ``m_1 + .. + m_a``.
    * ``D2``: horizontal suffixes from ``b >= 2``, bound
      ``m_b + .. + m_K``.
    * ``D3``: vertical prefix up to ``a``, the corner and the horizontal
      suffix from ``b > a``, bound ``m_1 + .. + m_K``.
    * ``DEG``: vertical prefix up to ``r``, the corner and the horizontal
      suffix from ``c <= r``, bound ``m_1 + .. + m_K + m_c + .. + m_r``.
    """
    if size == 1:
        return [_Draft(
            family="D1",
            kind=PathKind.DYCK,
            entries=[((1, 1), 1)],
            bound=bound_terms((1, 1)),
            params=(("a", 1),),
        )]
    drafts = []
    for a in range(1, size):
        drafts.append(_Draft(
            family="D1",
            kind=PathKind.DYCK,
            entries=_vertical(a),
            bound=bound_terms((1, a)),
            params=(("a", a),),
        ))
    for b in range(2, size + 1):
        drafts.append(_Draft(
            family="D2",
            kind=PathKind.DYCK,
            entries=_horizontal(b, size),
            bound=bound_terms((b, size)),
            params=(("b", b),),
        ))
    for a in range(1, size):
        for b in range(a + 1, size + 1):
            drafts.append(_Draft(
                family="D3",
                kind=PathKind.DYCK,
                entries=_vertical(a) + [((1, size), 1)]
                + _horizontal(b, size),
                bound=bound_terms((1, size)),
                params=(("a", a), ("b", b)),
            ))
    for c in range(2, size):
        for r in range(c, size):
            drafts.append(_Draft(
                family="DEG",
                kind=PathKind.DEGREE,
                entries=_vertical(r) + [((1, size), 1)]
                + _horizontal(c, size),
                bound=add_terms(bound_terms((1, size)), bound_terms((c, r))),
                params=(("c", c), ("r", r)),
            ))
    logger.debug(f"Generated {len(drafts)} hook paths on {size} positions.")
    return drafts
