"""Reduced words of the reflections ``r_gamma`` and their suffixes."""

from dataclasses import (dataclass, field)
from enum import Enum
import logging
from typing import (List, Optional, Sequence, Tuple)

from dempoly.errors.exceptions import (
    IndexRangeError,
    VariantError,
)
from dempoly.rootsys.cartan import (
    Family,
    LieType,
)
from dempoly.rootsys.roots import (
    simple_reflection_apply,
)

# Get logger instance
logger = logging.getLogger(__name__)


class WordVariant(Enum):
    """Enumerator for the supported word shapes.

    Attributes:
        STANDARD: ``s_i .. s_n .. s_i`` (types A, B and C).
        HATTED: Type D word without the second ``s_(n-1)``.
        FULL: Type D word ``s_i .. s_n s_(n-1) .. s_i``, stored reduced.
    """
    STANDARD = "standard"
    HATTED = "hatted"
    FULL = "full"


def default_variant(lie_type: LieType) -> WordVariant:
    """Default word variant of a family."""
    if lie_type.family is Family.D:
        return WordVariant.HATTED
    return WordVariant.STANDARD


@dataclass(frozen=True)
class ReflectionWord:
    """Word in the simple reflections.

    Args:
        lie_type: Lie type.
        start: First letter of the word.
        letters: Reduced letter sequence, read left to right.
        variant: Word shape.
        end: Last node of a type A hook; ``n`` otherwise.
        literal: Letters as printed for the word shape; differs from
            `letters` only for non-reduced shapes.
    """
    lie_type: LieType
    start: int
    letters: Tuple[int, ...]
    variant: WordVariant = WordVariant.STANDARD
    end: Optional[int] = None
    literal: Tuple[int, ...] = field(default=(), compare=False)

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return " ".join(f"s{i}" for i in self.letters)


def _as_variant(
    lie_type: LieType,
    variant: Optional[object],
) -> WordVariant:
    if variant is None:
        return default_variant(lie_type)
    try:
        chosen = WordVariant(
            variant.value if isinstance(variant, WordVariant) else variant
        )
    except ValueError as exc:
        raise VariantError(f"unknown word variant '{variant}'") from exc
    if lie_type.family is Family.D:
        if chosen is WordVariant.STANDARD:
            chosen = WordVariant.HATTED
    elif chosen is not WordVariant.STANDARD:
        raise VariantError(
            f"word variant '{chosen.value}' is only defined in type D, "
            f"not for {lie_type}"
        )
    return chosen


def reflection_word(
    lie_type: LieType,
    start: int,
    variant: Optional[object] = None,
    end: Optional[int] = None,
) -> ReflectionWord:
    """Build the word of the reflection ``r_gamma`` starting at `start`.

    Args:
        lie_type: Lie type.
        start: First letter ``i``.
        variant: :py:class:`WordVariant` or its value; type D accepts
            ``hatted`` (default) and ``full``.
        end: Last node ``k`` of a type A hook ``gamma = alpha_(i,k)``;
            defaults to ``n``.

    Returns:
        The reduced word. For type D ``full`` the printed word is not
        reduced, since ``s_(n-1) s_n s_(n-1) = s_n``; the reduced form
        ``s_i .. s_(n-2) s_n s_(n-2) .. s_i`` is returned and the printed
        letters are kept in :py:attr:`ReflectionWord.literal`.

    Raises:
        dempoly.errors.exceptions.IndexRangeError: `start` or `end` out of
            range.
        dempoly.errors.exceptions.VariantError: Variant not defined for the
            family.
    """
    n = lie_type.rank
    chosen = _as_variant(lie_type, variant)
    if end is not None and lie_type.family is not Family.A and end != n:
        raise IndexRangeError(f"hook end {end} is only defined in type A")
    last = n if end is None else end
    if not 1 <= start <= last <= n:
        raise IndexRangeError(
            f"start {start} and end {last} violate 1 <= start <= end <= {n}"
        )
    if lie_type.family is Family.D and start > n - 1:
        raise IndexRangeError(
            f"type D words need start <= {n - 1}, got {start}"
        )
    ascending = list(range(start, last + 1))
    if chosen is WordVariant.HATTED:
        literal = ascending + list(range(n - 2, start - 1, -1))
        letters = literal
    elif chosen is WordVariant.FULL:
        literal = ascending + list(range(n - 1, start - 1, -1))
        letters = list(reduce_word(lie_type, literal))
    else:
        literal = ascending + list(range(last - 1, start - 1, -1))
        letters = literal
    word = ReflectionWord(
        lie_type=lie_type,
        start=start,
        letters=tuple(letters),
        variant=chosen,
        end=last,
        literal=tuple(literal),
    )
    logger.debug(f"Reflection word for {lie_type}, start {start}: {word}")
    return word


def _unit(n: int, i: int) -> Tuple[int, ...]:
    return tuple(1 if pos == i else 0 for pos in range(1, n + 1))


def _first_deletable_pair(
    lie_type: LieType,
    letters: Sequence[int],
) -> Optional[Tuple[int, int]]:
    n = lie_type.rank
    for j in range(1, len(letters)):
        beta = _unit(n, letters[j])
        for k in range(j - 1, -1, -1):
            if beta == _unit(n, letters[k]):
                return k, j
            beta = simple_reflection_apply(lie_type, letters[k], beta)
    return None


def reduce_word(
    lie_type: LieType,
    letters: Sequence[int],
) -> Tuple[int, ...]:
    """Delete letter pairs until the word is reduced.

    Uses the deletion property: if the prefix ``s_(i_k+1) .. s_(i_j-1)``
    maps ``alpha_(i_j)`` to ``alpha_(i_k)``, the letters at positions ``k``
    and ``j`` can be removed without changing the group element.

    Args:
        lie_type: Lie type.
        letters: Letter sequence.

    Returns:
        Reduced letter sequence for the same Weyl group element.
    """
    for i in letters:
        lie_type.check_index(i)
    current: List[int] = list(letters)
    while True:
        pair = _first_deletable_pair(lie_type, current)
        if pair is None:
            return tuple(current)
        k, j = pair
        logger.debug(
            f"Deleting letters s{current[k]} (position {k}) and "
            f"s{current[j]} (position {j})."
        )
        del current[j]
        del current[k]


def is_reduced(lie_type: LieType, letters: Sequence[int]) -> bool:
    """Whether no letter pair can be deleted from `letters`."""
    return _first_deletable_pair(lie_type, letters) is None


def word_suffix(word: ReflectionWord, k: int) -> ReflectionWord:
    """Drop the leading letters ``s_i .. s_(k-1)`` of a reflection word.

    Args:
        word: Reflection word starting at ``i``.
        k: Letter at which the suffix starts; ``i <= k`` and `k` must occur
            in the ascending part of the word.

    Returns:
        Word ``s_k .. s_n .. s_i`` whose inversion set lies inside the one of
        `word`.

    Raises:
        dempoly.errors.exceptions.IndexRangeError: `k` does not occur.
    """
    try:
        position = word.letters.index(k)
    except ValueError:
        raise IndexRangeError(f"letter {k} does not occur in '{word}'")
    if position != k - word.start:
        raise IndexRangeError(
            f"letter {k} is not in the ascending part of '{word}'"
        )
    return ReflectionWord(
        lie_type=word.lie_type,
        start=k,
        letters=word.letters[position:],
        variant=word.variant,
        end=word.end,
        literal=word.literal[position:],
    )
