"""Path families per Lie type and word."""

import logging
from typing import (List, Optional)

from dempoly.errors.exceptions import IndexRangeError
from dempoly.pathgen import (
    type_a,
    type_b,
    type_c,
    type_d,
)
from dempoly.pathgen.paths import (
    HookFrame,
    PathKind,
    PathSpec,
    RowFrame,
    drop_dominated,
)
from dempoly.rootsys.cartan import (
    Family,
    LieType,
)
from dempoly.rootsys.words import (
    ReflectionWord,
    WordVariant,
    reflection_word,
)

# Get logger instance
logger = logging.getLogger(__name__)


def _finish(
    paths: List[PathSpec],
    include_redundant: bool,
    include_coefficients: bool,
) -> List[PathSpec]:
    if not include_coefficients:
        paths = [p for p in paths if p.kind is not PathKind.COEFFICIENT]
    if not include_redundant:
        paths = drop_dominated(paths)
    return paths


def paths_type_A(
    start: int,
    end: int,
    rank: int,
    include_redundant: bool = False,
) -> List[PathSpec]:
    """Dyck and degree paths of the hook ``gamma = alpha_(start,end)``.

    Args:
        start: First node ``i`` of the hook.
        end: Last node ``k`` of the hook.
        rank: Rank ``n`` of ``sl(n+1)``.
        include_redundant: Whether to keep dominated Dyck paths.

    Returns:
        Families ``D1``, ``D2``, ``D3`` and ``DEG`` over the coordinates
        ``alpha_(i,i) .. alpha_(i,k), alpha_(i+1,k) .. alpha_(k,k)``.

    Raises:
        dempoly.errors.exceptions.IndexRangeError: Not
            ``1 <= start <= end <= rank``.
    """
    lie_type = LieType(Family.A, rank)
    if not 1 <= start <= end <= rank:
        raise IndexRangeError(
            f"hook ({start}, {end}) violates 1 <= i <= k <= {rank}"
        )
    frame = HookFrame(lie_type, range(start, end + 1))
    paths = frame.place(type_a.hook_drafts(end - start + 1))
    return _finish(paths, include_redundant, True)


def paths_type_C(
    rank: int,
    start: int = 1,
    include_redundant: bool = False,
    include_coefficients: bool = True,
) -> List[PathSpec]:
    """Paths of ``sp(2n)`` for the word starting at `start`."""
    lie_type = LieType(Family.C, rank)
    lie_type.check_index(start)
    frame = RowFrame(lie_type, start)
    paths = frame.place(
        type_c.chain_drafts(frame.local_rank, include_coefficients)
    )
    return _finish(paths, include_redundant, include_coefficients)


def paths_type_B(
    rank: int,
    start: int = 1,
    include_redundant: bool = False,
    include_coefficients: bool = True,
) -> List[PathSpec]:
    """Paths of ``so(2n+1)`` for the word starting at `start`."""
    lie_type = LieType(Family.B, rank)
    lie_type.check_index(start)
    frame = RowFrame(lie_type, start)
    paths = frame.place(type_b.chain_drafts(
        frame.local_rank,
        include_coefficients=include_coefficients,
        include_all_ones=include_redundant,
    ))
    return _finish(paths, include_redundant, include_coefficients)


def paths_type_D(
    rank: int,
    variant: Optional[object] = None,
    start: int = 1,
    include_redundant: bool = False,
    include_coefficients: bool = True,
) -> List[PathSpec]:
    """Paths of ``so(2n)`` for the hatted or the full word.

    The reduced full word ``s_i .. s_(n-2) s_n s_(n-2) .. s_i`` is a type A
    hook on the nodes ``i..n-2, n``.
    """
    lie_type = LieType(Family.D, rank)
    word = reflection_word(lie_type, start, variant)
    if word.variant is WordVariant.FULL:
        nodes = list(range(start, rank - 1)) + [rank]
        paths = HookFrame(lie_type, nodes).place(
            type_a.hook_drafts(len(nodes))
        )
    else:
        frame = RowFrame(lie_type, start)
        paths = frame.place(
            type_d.diamond_drafts(frame.local_rank, include_coefficients)
        )
    return _finish(paths, include_redundant, include_coefficients)


def paths_for_word(
    word: ReflectionWord,
    include_redundant: bool = False,
    include_coefficients: bool = True,
) -> List[PathSpec]:
    """Dispatch to the path family of the word's Lie type.

    Args:
        word: Reflection word.
        include_redundant: Whether to keep dominated inequalities.
        include_coefficients: Whether to emit paths with coefficients;
            without them the system describes the polytope ``P'_w``.

    Returns:
        Paths in emission order.
    """
    lie_type: LieType = word.lie_type
    family = lie_type.family
    if family is Family.A:
        paths = paths_type_A(
            word.start,
            word.end or lie_type.rank,
            lie_type.rank,
            include_redundant=include_redundant,
        )
    elif family is Family.C:
        paths = paths_type_C(
            lie_type.rank,
            start=word.start,
            include_redundant=include_redundant,
            include_coefficients=include_coefficients,
        )
    elif family is Family.B:
        paths = paths_type_B(
            lie_type.rank,
            start=word.start,
            include_redundant=include_redundant,
            include_coefficients=include_coefficients,
        )
    else:
        paths = paths_type_D(
            lie_type.rank,
            variant=word.variant,
            start=word.start,
            include_redundant=include_redundant,
            include_coefficients=include_coefficients,
        )
    logger.info(
        f"{len(paths)} paths for {lie_type}, word '{word}'."
    )
    return paths
