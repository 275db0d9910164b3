"""Inversion sets of reflection words and their root posets."""

from dataclasses import dataclass
import logging
from typing import (Dict, List, Optional, Sequence, Tuple)

from dempoly.errors.exceptions import (
    NonReducedWordError,
    ParameterError,
)
from dempoly.rootsys.cartan import (
    Family,
    LieType,
)
from dempoly.rootsys.roots import (
    Root,
    _label_index,
    build_positive_roots,
    chain_key,
    column,
    simple_reflection_apply,
)
from dempoly.rootsys.words import ReflectionWord

# Get logger instance
logger = logging.getLogger(__name__)


def root_geq(lie_type: LieType, a: Root, b: Root) -> bool:
    """Label order ``a >= b`` of the root posets.

    ``alpha_(i1,j1) >= alpha_(i2,j2)`` iff ``i1 <= i2`` and ``j1 <= j2`` with
    columns ordered ``1 < .. < n < -n < .. < -1``. In type D the columns
    ``n-1`` and ``-n`` are incomparable.
    """
    n = lie_type.rank
    if a == b:
        return True
    if lie_type.family is Family.D:
        pair = {(a.end, a.barred), (b.end, b.barred)}
        if pair == {(n - 1, False), (n, True)}:
            return False
    return a.start <= b.start and column(a, n) <= column(b, n)


def root_at(lie_type: LieType, start: int, col: int) -> Optional[Root]:
    """Positive root with label row `start` and column position `col`."""
    n = lie_type.rank
    if col <= n:
        key = (start, col, False)
    else:
        key = (start, 2 * n + 1 - col, True)
        if lie_type.family is Family.C and key[1] == n:
            key = (start, n, False)
    return _label_index(lie_type).get(key)


@dataclass(frozen=True)
class RootPoset:
    """Inversion set of a word, ordered by the label order.

    Args:
        lie_type: Lie type.
        elements: Roots in chain order, largest first.
        covers: Covering pairs ``(upper, lower)`` as element indices.

    Attributes:
        lie_type: Lie type.
        elements: Roots in chain order, largest first.
        covers: Covering pairs ``(upper, lower)`` as element indices.
    """
    lie_type: LieType
    elements: Tuple[Root, ...]
    covers: Tuple[Tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, root: object) -> bool:
        return root in self.elements

    @property
    def labels(self) -> List[str]:
        return [root.label for root in self.elements]

    def index(self, root: Root) -> int:
        """Coordinate position of `root`.

        Raises:
            dempoly.errors.exceptions.ParameterError: Root not in the set.
        """
        try:
            return self.elements.index(root)
        except ValueError:
            raise ParameterError(f"{root.label} is not in the inversion set")

    def positions(self) -> Dict[Root, int]:
        return {root: pos for pos, root in enumerate(self.elements)}

    def geq(self, a: Root, b: Root) -> bool:
        return root_geq(self.lie_type, a, b)

    def is_chain(self) -> bool:
        return len(self.covers) == len(self.elements) - 1 and all(
            upper == lower - 1 for upper, lower in self.covers
        )


def _covers(
    lie_type: LieType,
    elements: Sequence[Root],
) -> Tuple[Tuple[int, int], ...]:
    size = len(elements)
    greater = [
        [
            a != b and root_geq(lie_type, elements[a], elements[b])
            for b in range(size)
        ]
        for a in range(size)
    ]
    covers = []
    for a in range(size):
        for b in range(size):
            if greater[a][b] and not any(
                greater[a][c] and greater[c][b] for c in range(size)
            ):
                covers.append((a, b))
    return tuple(covers)


def _apply_word(
    lie_type: LieType,
    letters: Sequence[int],
    v: Sequence[int],
) -> Tuple[int, ...]:
    """Apply ``s_(i1) .. s_(il)`` to `v`, rightmost letter first."""
    out = tuple(v)
    for i in reversed(letters):
        out = simple_reflection_apply(lie_type, i, out)
    return out


def inversion_set(word: ReflectionWord) -> RootPoset:
    """Compute ``R_w = {alpha > 0 : w(alpha) < 0}`` with its order.

    The word is applied to every positive root as a composite map; no
    reduced-word formula is assumed.

    Args:
        word: Word ``w``.

    Returns:
        Inversion set in chain order with its covering relations.

    Raises:
        dempoly.errors.exceptions.NonReducedWordError: Size of the inversion
            set differs from the number of letters.
    """
    lie_type = word.lie_type
    n = lie_type.rank
    elements = [
        root for root in build_positive_roots(lie_type)
        if any(c < 0 for c in _apply_word(lie_type, word.letters, root.coeffs))
    ]
    if len(elements) != len(word.letters):
        raise NonReducedWordError(
            f"word '{word}' of length {len(word.letters)} has "
            f"{len(elements)} inversions in {lie_type}"
        )
    elements.sort(key=lambda r: chain_key(r, n))
    poset = RootPoset(
        lie_type=lie_type,
        elements=tuple(elements),
        covers=_covers(lie_type, elements),
    )
    logger.debug(
        f"Inversion set of '{word}' in {lie_type}: {poset.labels}"
    )
    return poset


def is_decreasing(poset: RootPoset, roots: Sequence[Root]) -> bool:
    """Whether `roots` is strictly decreasing in the label order."""
    return all(
        a != b and poset.geq(a, b) for a, b in zip(roots, roots[1:])
    )


def is_dyck_sequence(poset: RootPoset, roots: Sequence[Root]) -> bool:
    """Whether `roots` is a Dyck sequence of the poset.

    A strictly decreasing sequence is Dyck if for every pair
    ``alpha_(i1,j1)`` before ``alpha_(i2,j2)`` each of the swapped labels
    ``(i1,j2)`` and ``(i2,j1)`` that names a positive root names one in the
    inversion set.
    """
    if not all(root in poset for root in roots):
        return False
    if not is_decreasing(poset, roots):
        return False
    n = poset.lie_type.rank
    for pos, a in enumerate(roots):
        for b in roots[pos + 1:]:
            for start, col in (
                (a.start, column(b, n)),
                (b.start, column(a, n)),
            ):
                swapped = root_at(poset.lie_type, start, col)
                if swapped is not None and swapped not in poset:
                    return False
    return True
