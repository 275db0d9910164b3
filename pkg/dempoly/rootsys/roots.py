"""Positive roots, root labels and the simple reflection action."""

from dataclasses import dataclass
from functools import lru_cache
import logging
import re
from typing import (Dict, List, Optional, Sequence, Tuple)

import numpy as np

from dempoly.errors.exceptions import (
    IndexRangeError,
    InvalidInputError,
)
from dempoly.rootsys.cartan import (
    Family,
    LieType,
    _cartan,
)

# Get logger instance
logger = logging.getLogger(__name__)

LABEL_PATTERN = re.compile(r"\s*a\[\s*(\d+)\s*,\s*(-?)(\d+)\s*\]\s*")


@dataclass(frozen=True)
class Root:
    """Positive root with its label and simple-root expansion.

    Args:
        start: Row index ``i`` of the label.
        end: Column index ``j`` of the label.
        barred: Whether the column index is barred.
        coeffs: Expansion in the simple roots ``alpha_1 .. alpha_n``.

    Example:
        >>> Root(1, 1, True, (2, 1)).label
        'a[1,-1]'
    """
    start: int
    end: int
    barred: bool
    coeffs: Tuple[int, ...]

    @property
    def label(self) -> str:
        """Wire format, ``a[i,j]`` or ``a[i,-j]``."""
        sign = "-" if self.barred else ""
        return f"a[{self.start},{sign}{self.end}]"

    @property
    def height(self) -> int:
        return sum(self.coeffs)

    def is_simple(self) -> bool:
        return self.height == 1

    def __str__(self) -> str:
        return self.label


def parse_root_label(label: str) -> Tuple[int, int, bool]:
    """Parse the wire format into ``(start, end, barred)``.

    Raises:
        dempoly.errors.exceptions.InvalidInputError: Malformed label.
    """
    match = LABEL_PATTERN.fullmatch(label)
    if match is None:
        raise InvalidInputError(f"'{label}' is not a root label")
    return int(match.group(1)), int(match.group(3)), match.group(2) == "-"


def _interval(n: int, lo: int, hi: int, times: int = 1) -> List[int]:
    """Coefficient vector with `times` on ``lo..hi`` (1-based, inclusive)."""
    return [times if lo <= pos <= hi else 0 for pos in range(1, n + 1)]


def _add(*vectors: Sequence[int]) -> Tuple[int, ...]:
    return tuple(int(sum(col)) for col in zip(*vectors))


def _labelled_roots(lie_type: LieType) -> List[Root]:
    n = lie_type.rank
    family = lie_type.family
    roots: List[Root] = []
    last_unbarred = n - 1 if family is Family.D else n
    for i in range(1, n + 1):
        for j in range(i, last_unbarred + 1):
            roots.append(Root(i, j, False, _add(_interval(n, i, j))))
    if family is Family.C:
        # (i, -n) coincides with (i, n)
        for i in range(1, n):
            for j in range(i, n):
                roots.append(Root(i, j, True, _add(
                    _interval(n, i, j - 1),
                    _interval(n, j, n - 1, times=2),
                    _interval(n, n, n),
                )))
    elif family is Family.B:
        for i in range(1, n):
            for j in range(i + 1, n + 1):
                roots.append(Root(i, j, True, _add(
                    _interval(n, i, j - 1),
                    _interval(n, j, n, times=2),
                )))
    elif family is Family.D:
        for i in range(1, n):
            for j in range(i + 1, n + 1):
                roots.append(Root(i, j, True, _add(
                    _interval(n, i, n - 2),
                    _interval(n, j, n),
                )))
    return roots


def column(root: Root, n: int) -> int:
    """Position of the label's column in ``1 < .. < n < -n < .. < -1``."""
    return 2 * n + 1 - root.end if root.barred else root.end


def chain_key(root: Root, n: int) -> Tuple[int, int]:
    """Sort key reproducing the chain listing of the displayed posets."""
    return root.start, column(root, n)


def succ_key(root: Root) -> Tuple[int, bool, int]:
    """Sort key of the generator order; larger keys are larger in it.

    Rows with a larger index dominate; within a row barred labels dominate
    unbarred ones, barred labels decrease with the column index and unbarred
    labels increase with it, e.g. ``f[1,-1] > f[1,-2] > f[1,n] > f[1,1]``.
    """
    return root.start, root.barred, -root.end if root.barred else root.end


@lru_cache(maxsize=None)
def build_positive_roots(lie_type: LieType) -> Tuple[Root, ...]:
    """Return all positive roots of `lie_type` in chain order.

    Args:
        lie_type: Lie type.

    Returns:
        ``n(n+1)/2`` roots in type A, ``n^2`` in types B and C and ``n(n-1)``
        in type D.
    """
    n = lie_type.rank
    roots = sorted(_labelled_roots(lie_type), key=lambda r: chain_key(r, n))
    logger.debug(f"Built {len(roots)} positive roots of {lie_type}.")
    return tuple(roots)


@lru_cache(maxsize=None)
def _label_index(lie_type: LieType) -> Dict[Tuple[int, int, bool], Root]:
    return {
        (r.start, r.end, r.barred): r for r in build_positive_roots(lie_type)
    }


@lru_cache(maxsize=None)
def _coeff_index(lie_type: LieType) -> Dict[Tuple[int, ...], Root]:
    return {r.coeffs: r for r in build_positive_roots(lie_type)}


def root_by_label(
    lie_type: LieType,
    start: int,
    end: int,
    barred: bool = False,
) -> Root:
    """Look up a positive root by its label.

    In type C the label ``(i, -n)`` is normalized to ``(i, n)``.

    Raises:
        dempoly.errors.exceptions.IndexRangeError: No root carries the label.
    """
    if (
        lie_type.family is Family.C and barred and end == lie_type.rank
    ):
        barred = False
    try:
        return _label_index(lie_type)[(start, end, barred)]
    except KeyError:
        sign = "-" if barred else ""
        raise IndexRangeError(
            f"no positive root a[{start},{sign}{end}] in {lie_type}"
        )


def root_from_label(lie_type: LieType, label: str) -> Root:
    """Look up a positive root by its wire format label."""
    return root_by_label(lie_type, *parse_root_label(label))


def root_by_coeffs(
    lie_type: LieType,
    coeffs: Sequence[int],
) -> Optional[Root]:
    """Positive root with the given simple-root expansion, if any."""
    return _coeff_index(lie_type).get(tuple(int(c) for c in coeffs))


def simple_root(lie_type: LieType, i: int) -> Root:
    """Return ``alpha_i``."""
    lie_type.check_index(i)
    return root_by_coeffs(  # type: ignore[return-value]
        lie_type, _interval(lie_type.rank, i, i)
    )


def simple_reflection_apply(
    lie_type: LieType,
    i: int,
    v: Sequence[int],
) -> Tuple[int, ...]:
    """Apply ``s_i`` to a vector given in simple-root coordinates.

    ``s_i(v) = v - <v, alpha_i^v> alpha_i`` with the pairing read off row
    ``i`` of the Cartan matrix.

    Args:
        lie_type: Lie type.
        i: Index of the simple reflection.
        v: Coefficient vector in the basis of simple roots.

    Returns:
        Coefficient vector of ``s_i(v)``.

    Raises:
        dempoly.errors.exceptions.IndexRangeError: `i` out of range.
    """
    lie_type.check_index(i)
    if len(v) != lie_type.rank:
        raise IndexRangeError(
            f"vector of length {len(v)} for rank {lie_type.rank}"
        )
    vec = np.asarray(v, dtype=np.int64)
    pairing = int(_cartan(lie_type)[i - 1] @ vec)
    out = vec.copy()
    out[i - 1] -= pairing
    return tuple(int(c) for c in out)


def is_positive(v: Sequence[int]) -> bool:
    """Whether a nonzero root vector has only nonnegative coefficients."""
    return any(c > 0 for c in v) and all(c >= 0 for c in v)


def differential_action(
    lie_type: LieType,
    beta: Root,
    alpha: Root,
) -> Optional[Root]:
    """Action of the differential operator ``d_beta`` on ``f_alpha``.

    ``d_beta f_alpha = f_(alpha - beta)`` if ``alpha - beta`` is a positive
    root, and zero otherwise.

    Returns:
        The root ``alpha - beta`` or ``None`` for zero.
    """
    diff = [a - b for a, b in zip(alpha.coeffs, beta.coeffs)]
    if not is_positive(diff):
        return None
    return root_by_coeffs(lie_type, diff)


def differential_table(
    lie_type: LieType,
) -> List[Tuple[Root, Root, Root]]:
    """All triples ``(beta, alpha, alpha - beta)`` with nonzero action."""
    roots = build_positive_roots(lie_type)
    table = []
    for alpha in roots:
        for beta in roots:
            image = differential_action(lie_type, beta, alpha)
            if image is not None:
                table.append((beta, alpha, image))
    return table
