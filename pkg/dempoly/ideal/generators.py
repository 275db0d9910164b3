"""Monomial generators of the annihilating ideal and their oracle."""

from dataclasses import (dataclass, field)
import logging
from typing import (Any, Dict, Iterator, List, Optional, Sequence, Tuple)

from dempoly.errors.exceptions import BoxTooSmallError
from dempoly.polytope.points import (
    MultiExponent,
    PointSet,
    enumerate_points,
)
from dempoly.polytope.system import (
    Inequality,
    InequalitySystem,
)
from dempoly.rootsys.posets import RootPoset
from dempoly.rootsys.roots import succ_key

# Get logger instance
logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Provenance:
    """Path a generator comes from and its weighted sum on that path."""
    path: str
    kind: str
    weighted_sum: int

    def to_dict(self) -> Dict[str, Any]:
        return {
            "path": self.path,
            "kind": self.kind,
            "weighted_sum": self.weighted_sum,
        }


@dataclass
class GeneratorSet:
    """Generators with the paths they come from.

    Attributes:
        system: Inequality system.
        weight: Highest weight ``lambda``.
        generators: Provenances per generator.
    """
    system: InequalitySystem
    weight: Tuple[int, ...]
    generators: Dict[MultiExponent, List[Provenance]] = field(
        default_factory=dict
    )

    def __len__(self) -> int:
        return len(self.generators)

    def __contains__(self, point: object) -> bool:
        return point in self.generators

    def add(self, point: MultiExponent, provenance: Provenance) -> None:
        self.generators.setdefault(point, []).append(provenance)

    def sorted_points(self) -> List[MultiExponent]:
        """Generators, largest first in the homogeneous generator order."""
        return sorted(
            self.generators,
            key=lambda p: canonical_monomial_key(p, self.system.poset),
            reverse=True,
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            "lambda": list(self.weight),
            "order": self.system.order,
            "generators": [
                {
                    "point": list(point),
                    "provenance": [
                        p.to_dict() for p in self.generators[point]
                    ],
                }
                for point in self.sorted_points()
            ],
            "count": len(self.generators),
        }


def canonical_monomial_key(
    point: Sequence[int],
    poset: RootPoset,
) -> Tuple[int, Tuple[int, ...]]:
    """Homogeneous lexicographic key of ``f^s``.

    Total degree first, then the exponents listed from the largest to the
    smallest generator in the order ``f[1,-1] > f[1,-2] > .. > f[1,1]``.
    """
    ranked = sorted(
        range(len(poset.elements)),
        key=lambda pos: succ_key(poset.elements[pos]),
        reverse=True,
    )
    return sum(point), tuple(point[pos] for pos in ranked)


def _compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for head in range(total, -1, -1):
        for tail in _compositions(total - head, parts - 1):
            yield (head,) + tail


def _bounded_vectors(
    coeffs: Sequence[int],
    limit: int,
) -> Iterator[Tuple[int, ...]]:
    """Nonnegative vectors with weighted sum at most `limit`."""
    if not coeffs:
        yield ()
        return
    head, rest = coeffs[0], coeffs[1:]
    for value in range(limit // head + 1):
        for tail in _bounded_vectors(rest, limit - head * value):
            yield (value,) + tail


def _path_generators(
    ineq: Inequality,
    rhs: int,
) -> Iterator[Tuple[Tuple[int, ...], int]]:
    """Minimal violators of one inequality, on its support."""
    coeffs = [ineq.coeffs[pos] for pos in ineq.support]
    if all(c == 1 for c in coeffs):
        for local in _compositions(rhs + 1, len(coeffs)):
            yield local, rhs + 1
        return
    for local in _bounded_vectors(coeffs, rhs + 2):
        total = sum(c * s for c, s in zip(coeffs, local))
        if total <= rhs:
            continue
        if all(
            total - c <= rhs for c, s in zip(coeffs, local) if s > 0
        ):
            yield local, total


def theorem_generators(
    system: InequalitySystem,
    weight: Sequence[int],
) -> GeneratorSet:
    """Monomials supported on a single path exceeding its bound by one.

    Paths with coefficient 1 everywhere give every ``s`` on the path with
    ``sum s_alpha = q + 1``. Paths with coefficients give the ``s`` on the
    path with weighted sum ``q + 1`` or ``q + 2`` such that lowering any
    nonzero exponent by one satisfies the inequality again.

    Args:
        system: Inequality system.
        weight: Dominant weight ``lambda``.

    Returns:
        Generators with provenance.
    """
    weight = tuple(weight)
    generators = GeneratorSet(system=system, weight=weight)
    for ineq in system.inequalities:
        rhs = ineq.rhs(weight)
        support = ineq.support
        kind = ineq.path.kind.value if ineq.path is not None else ""
        for local, total in _path_generators(ineq, rhs):
            point = [0] * system.dim
            for pos, s in zip(support, local):
                point[pos] = s
            generators.add(
                tuple(point),
                Provenance(ineq.identifier, kind, total),
            )
    logger.debug(
        f"{len(generators)} theorem generators at lambda={weight}."
    )
    return generators


def default_box(points: PointSet, pad: int = 2) -> Tuple[int, ...]:
    """Componentwise maximum over the points plus `pad`."""
    return tuple(m + pad for m in points.maxima())


def complement_min_generators(
    points: PointSet,
    box: Optional[Sequence[int]] = None,
) -> List[MultiExponent]:
    """Minimal elements of the complement of ``S(lambda)`` in the box.

    ``S(lambda)`` is a down-set, so every minimal element of its complement
    is ``s + e_c`` for some ``s`` in ``S(lambda)``.

    Args:
        points: Enumerated ``S(lambda)``.
        box: Inclusive upper corner; defaults to :py:func:`default_box`.

    Returns:
        Sorted minimal generators.

    Raises:
        dempoly.errors.exceptions.BoxTooSmallError: Box below the maxima of
            the points plus one.
    """
    maxima = points.maxima()
    corner = tuple(box) if box is not None else default_box(points)
    if len(corner) != len(maxima) or any(
        b < m + 1 for b, m in zip(corner, maxima)
    ):
        raise BoxTooSmallError(
            f"box {corner} does not contain the point maxima {maxima} "
            f"plus one"
        )
    minimal = set()
    for point in points:
        for pos in range(len(point)):
            candidate = list(point)
            candidate[pos] += 1
            key = tuple(candidate)
            if key in points or key in minimal or candidate[pos] > corner[pos]:
                continue
            if all(
                tuple(
                    x - 1 if b == other else x
                    for other, x in enumerate(candidate)
                ) in points
                for b in range(len(candidate)) if candidate[b] > 0
            ):
                minimal.add(key)
    return sorted(minimal)


def _dominates(upper: Sequence[int], lower: Sequence[int]) -> bool:
    return all(u >= v for u, v in zip(upper, lower))


@dataclass
class UpsetReport:
    """Comparison of the theorem generators with the complement.

    Attributes:
        passed: Whether the up-closure of the theorem generators equals the
            complement of ``S(lambda)`` in the box.
        spurious: Theorem generators that lie in ``S(lambda)``.
        uncovered: Minimal complement points above no theorem generator.
        generator_count: Number of theorem generators.
        minimal_count: Number of minimal complement points.
    """
    passed: bool
    spurious: List[MultiExponent]
    uncovered: List[MultiExponent]
    generator_count: int
    minimal_count: int

    def to_dict(self) -> Dict[str, Any]:
        return {
            "passed": self.passed,
            "spurious": [list(p) for p in self.spurious],
            "uncovered": [list(p) for p in self.uncovered],
            "generator_count": self.generator_count,
            "minimal_count": self.minimal_count,
        }


def upset_equality(
    system: InequalitySystem,
    weight: Sequence[int],
    box: Optional[Sequence[int]] = None,
    box_pad: int = 2,
    max_points: Optional[int] = None,
) -> UpsetReport:
    """Compare the ideal of the theorem generators with the complement.

    Args:
        system: Inequality system.
        weight: Dominant weight ``lambda``.
        box: Inclusive upper corner of the scan box.
        box_pad: Padding of the default box.
        max_points: Point limit for the enumeration.

    Returns:
        Report listing the points in either difference.
    """
    points = enumerate_points(system, weight, max_points)
    corner = tuple(box) if box is not None else default_box(points, box_pad)
    generators = theorem_generators(system, weight)
    minimal = complement_min_generators(points, corner)
    spurious = sorted(p for p in generators.generators if p in points)
    uncovered = [
        m for m in minimal
        if not any(_dominates(m, g) for g in generators.generators)
    ]
    report = UpsetReport(
        passed=not spurious and not uncovered,
        spurious=spurious,
        uncovered=uncovered,
        generator_count=len(generators),
        minimal_count=len(minimal),
    )
    logger.debug(
        f"Ideal check at lambda={tuple(weight)}: {report.generator_count} "
        f"generators, {report.minimal_count} minimal complement points."
    )
    return report
