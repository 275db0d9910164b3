"""Faces of ``P_w(lambda)`` given by suffix words."""

from dataclasses import dataclass
import logging
from typing import (Any, Dict, Optional, Sequence)

from dempoly.demchar.verify import (
    OracleReport,
    verify_against_points,
)
from dempoly.errors.exceptions import (
    IndexRangeError,
    ParameterError,
)
from dempoly.polytope.points import enumerate_points
from dempoly.polytope.system import build_system_for_word
from dempoly.rootsys.cartan import LieType
from dempoly.rootsys.posets import inversion_set
from dempoly.rootsys.weights import Weight
from dempoly.rootsys.words import (
    reflection_word,
    word_suffix,
)

# Get logger instance
logger = logging.getLogger(__name__)


@dataclass
class FaceReport:
    """Outcome of a face embedding check.

    Attributes:
        passed: Whether the face passes the character oracle of the suffix
            word.
        face_count: Number of points of the face.
        oracle: Character comparison for the suffix word.
    """
    passed: bool
    face_count: int
    oracle: OracleReport

    @property
    def witness(self) -> Optional[Weight]:
        """First weight whose multiplicity on the face differs from the
        character of the suffix word."""
        return self.oracle.mismatch[0] if self.oracle.mismatch else None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "passed": self.passed,
            "face_count": self.face_count,
            "witness": (
                list(self.witness) if self.witness is not None else None
            ),
            "oracle": self.oracle.to_dict(),
        }


def face_embedding_check(
    lie_type: LieType,
    start: int,
    substart: int,
    weight: Sequence[int],
    variant: Optional[object] = None,
    end: Optional[int] = None,
    max_points: Optional[int] = None,
) -> FaceReport:
    """Check that the suffix word ``u`` cuts out a face of ``P_w(lambda)``.

    The face is the slice of ``S_w(lambda)`` vanishing off ``R_u``. The
    system of ``w`` restricted to ``R_u`` keeps every inequality of ``w``
    with the coordinates off ``R_u`` set to zero, so its points are that
    slice by construction. What makes the slice ``S_u(lambda)`` is the
    Demazure character of ``u``, computed by Demazure operators without
    any path family of ``u``: the check passes when the weights of the
    slice match it.

    Args:
        lie_type: Lie type.
        start: First letter ``i`` of ``w``.
        substart: First letter ``k > i`` of the suffix ``u``.
        weight: Dominant weight ``lambda``.
        variant: Type D word variant.
        end: Type A hook end.
        max_points: Point limit per enumeration.

    Returns:
        Face report.

    Raises:
        dempoly.errors.exceptions.IndexRangeError: `substart` not after
            `start`.
        dempoly.errors.exceptions.ParameterError: ``R_u`` not inside
            ``R_w``.
    """
    if substart <= start:
        raise IndexRangeError(
            f"substart {substart} must exceed start {start}"
        )
    word = reflection_word(lie_type, start, variant, end)
    sub = word_suffix(word, substart)
    system = build_system_for_word(word)
    face_poset = inversion_set(sub)
    if not all(root in system.poset for root in face_poset.elements):
        raise ParameterError(
            f"inversion set of '{sub}' is not contained in the one of "
            f"'{word}'"
        )
    face_system = system.restricted(face_poset, word=sub)
    face = enumerate_points(face_system, weight, max_points)
    oracle = verify_against_points(sub, weight, face)
    report = FaceReport(
        passed=oracle.passed,
        face_count=len(face),
        oracle=oracle,
    )
    logger.debug(
        f"Face '{sub}' of '{word}' at lambda={tuple(weight)}: "
        f"{report.face_count} points, dimension {oracle.dimension}."
    )
    return report
