"""Demazure operators and Demazure characters."""

import logging
from typing import (Any, Dict, Sequence)

import numpy as np

from dempoly.rootsys.cartan import (
    LieType,
    simple_root_weight,
)
from dempoly.rootsys.posets import inversion_set
from dempoly.rootsys.weights import (
    Weight,
    check_dominant,
)
from dempoly.rootsys.words import ReflectionWord

# Get logger instance
logger = logging.getLogger(__name__)

CharacterPoly = Dict[Weight, int]


def monomial(weight: Sequence[int]) -> CharacterPoly:
    """The character ``e^weight``."""
    return {tuple(int(m) for m in weight): 1}


def _accumulate(
    out: CharacterPoly,
    weight: np.ndarray,
    mult: int,
) -> None:
    key = tuple(int(m) for m in weight)
    total = out.get(key, 0) + mult
    if total:
        out[key] = total
    else:
        out.pop(key, None)


def demazure_op(
    lie_type: LieType,
    i: int,
    character: CharacterPoly,
) -> CharacterPoly:
    """Apply the Demazure operator ``D_i``.

    With ``k = <mu, alpha_i^v>``, the ``i``-th coordinate of ``mu``,
    ``e^mu`` maps to ``e^mu + e^(mu - alpha_i) + .. + e^(mu - k alpha_i)``
    for ``k >= 0``, to 0 for ``k = -1`` and to
    ``-(e^(mu + alpha_i) + .. + e^(mu + (-k-1) alpha_i))`` for ``k <= -2``.

    Args:
        lie_type: Lie type.
        i: Index of the simple root.
        character: Character to act on.

    Returns:
        New character without zero terms.

    Raises:
        dempoly.errors.exceptions.IndexRangeError: `i` out of range.
    """
    alpha = simple_root_weight(lie_type, i)
    out: CharacterPoly = {}
    for weight, mult in character.items():
        mu = np.asarray(weight, dtype=np.int64)
        k = int(mu[i - 1])
        if k >= 0:
            for t in range(k + 1):
                _accumulate(out, mu - t * alpha, mult)
        elif k <= -2:
            for t in range(1, -k):
                _accumulate(out, mu + t * alpha, -mult)
    return out


def demazure_character(
    word: ReflectionWord,
    weight: Sequence[int],
) -> CharacterPoly:
    """Character of ``V_w(lambda)``, ``D_(i1)(D_(i2)( .. D_(il)(e^lambda)))``.

    Args:
        word: Word ``w = s_(i1) .. s_(il)``; reducedness is checked.
        weight: Dominant weight ``lambda``.

    Returns:
        The Demazure character.

    Raises:
        dempoly.errors.exceptions.NonReducedWordError: Word not reduced.
        dempoly.errors.exceptions.NotDominantError: Weight not dominant.
    """
    weight = check_dominant(weight)
    inversion_set(word)
    character = monomial(weight)
    for i in reversed(word.letters):
        character = demazure_op(word.lie_type, i, character)
    logger.debug(
        f"Demazure character of '{word}' at lambda={weight}: "
        f"{len(character)} weights, dimension {dimension(character)}."
    )
    return character


def dimension(character: CharacterPoly) -> int:
    """Sum of multiplicities."""
    return sum(character.values())


def character_to_dict(
    character: CharacterPoly,
    word: ReflectionWord,
    weight: Sequence[int],
) -> Dict[str, Any]:
    return {
        "lambda": list(weight),
        "word": list(word.letters),
        "dim": dimension(character),
        "terms": [
            {"weight": list(mu), "mult": mult}
            for mu, mult in sorted(character.items())
        ],
    }
