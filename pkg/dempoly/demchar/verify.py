"""Compare enumerated point sets with Demazure characters."""

from collections import Counter
from dataclasses import dataclass
import logging
from typing import (Any, Dict, Optional, Sequence, Tuple)

from dempoly.demchar.characters import (
    demazure_character,
    dimension,
)
from dempoly.polytope.points import PointSet
from dempoly.rootsys.weights import (
    Weight,
    apply_inverse_word,
    weight_of_point,
)
from dempoly.rootsys.words import ReflectionWord

# Get logger instance
logger = logging.getLogger(__name__)


@dataclass
class OracleReport:
    """Outcome of a point set versus character comparison.

    Attributes:
        passed: Whether counts and weight multisets agree.
        point_count: Number of points.
        dimension: Dimension of the Demazure module.
        mismatch: First weight with differing multiplicities as
            ``(weight, from points, from character)``.
    """
    passed: bool
    point_count: int
    dimension: int
    mismatch: Optional[Tuple[Weight, int, int]] = None

    def to_dict(self) -> Dict[str, Any]:
        entry: Dict[str, Any] = {
            "passed": self.passed,
            "points": self.point_count,
            "dim": self.dimension,
        }
        if self.mismatch is not None:
            weight, from_points, from_character = self.mismatch
            entry["mismatch"] = {
                "weight": list(weight),
                "points": from_points,
                "character": from_character,
            }
        return entry


def point_weights(points: PointSet) -> Counter:
    """Multiset of ``lambda - sum_alpha s_alpha alpha`` over the points."""
    return Counter(
        weight_of_point(point, points.weight, points.system.poset)
        for point in points
    )


def twisted_character(
    word: ReflectionWord,
    weight: Sequence[int],
) -> Counter:
    """Character of ``V_w(lambda)`` with ``w^-1`` applied to every weight.

    ``f^s v_lambda`` spans the ``w^-1``-translate of ``V_w(lambda)``, so these
    are the weights to expect from the points.
    """
    character = demazure_character(word, weight)
    twisted: Counter = Counter()
    for mu, mult in character.items():
        twisted[apply_inverse_word(word.lie_type, word.letters, mu)] += mult
    return twisted


def verify_against_points(
    word: ReflectionWord,
    weight: Sequence[int],
    points: PointSet,
) -> OracleReport:
    """Compare ``|S|`` with the dimension and the weights with the character.

    Args:
        word: Word ``w``.
        weight: Dominant weight ``lambda``.
        points: Enumerated ``S_w(lambda)``.

    Returns:
        Report naming the first mismatching weight on failure.
    """
    expected = twisted_character(word, weight)
    actual = point_weights(points)
    mismatch = None
    for mu in sorted(set(expected) | set(actual)):
        if expected[mu] != actual[mu]:
            mismatch = (mu, actual[mu], expected[mu])
            break
    report = OracleReport(
        passed=mismatch is None and len(points) == sum(expected.values()),
        point_count=len(points),
        dimension=dimension(dict(expected)),
        mismatch=mismatch,
    )
    logger.debug(
        f"Oracle for '{word}' at lambda={tuple(weight)}: "
        f"{report.point_count} points, dimension {report.dimension}."
    )
    return report
