"""Minkowski sums, decomposition into fundamental summands and normality."""

from dataclasses import dataclass
import logging
from typing import (Any, Dict, Iterable, List, Optional, Sequence, Tuple)

from dempoly.errors.exceptions import (
    DecompositionError,
    OracleMismatchError,
    PreconditionError,
)
from dempoly.polytope.points import (
    MultiExponent,
    PointSet,
    enumerate_points,
    membership,
)
from dempoly.polytope.system import InequalitySystem
from dempoly.rootsys.weights import (
    add_weights,
    check_dominant,
    fundamental_weight,
    scale_weight,
)

# Get logger instance
logger = logging.getLogger(__name__)


def minkowski_sum(
    first: Iterable[Sequence[int]],
    second: Iterable[Sequence[int]],
) -> List[MultiExponent]:
    """Sorted set of all sums ``a + b``."""
    right = [tuple(b) for b in second]
    sums = {
        tuple(x + y for x, y in zip(a, b)) for a in first for b in right
    }
    return sorted(sums)


@dataclass
class MinkowskiReport:
    """Comparison of ``S(lambda) + S(mu)`` with ``S(lambda + mu)``.

    Attributes:
        passed: Whether both sets are equal.
        contained: Whether the sum is contained in ``S(lambda + mu)``.
        witness: Smallest point of the symmetric difference, if any.
        sum_count: Size of the Minkowski sum.
        target_count: Size of ``S(lambda + mu)``.
    """
    passed: bool
    contained: bool
    witness: Optional[MultiExponent]
    sum_count: int
    target_count: int

    def to_dict(self) -> Dict[str, Any]:
        return {
            "passed": self.passed,
            "contained": self.contained,
            "witness": list(self.witness) if self.witness else None,
            "sum_count": self.sum_count,
            "target_count": self.target_count,
        }


def compare_sets(
    left: Iterable[Sequence[int]],
    right: Iterable[Sequence[int]],
) -> MinkowskiReport:
    """Compare a computed sum `left` with a target set `right`."""
    left_set = {tuple(p) for p in left}
    right_set = {tuple(p) for p in right}
    difference = sorted(left_set ^ right_set)
    return MinkowskiReport(
        passed=not difference,
        contained=left_set <= right_set,
        witness=difference[0] if difference else None,
        sum_count=len(left_set),
        target_count=len(right_set),
    )


def minkowski_check(
    system: InequalitySystem,
    weight: Sequence[int],
    other: Sequence[int],
    max_points: Optional[int] = None,
) -> MinkowskiReport:
    """Check ``S(lambda) + S(mu) = S(lambda + mu)``.

    Args:
        system: Inequality system.
        weight: Dominant weight ``lambda``.
        other: Dominant weight ``mu``.
        max_points: Point limit per enumeration.

    Returns:
        Report with a witness from the symmetric difference on failure.
    """
    left = enumerate_points(system, weight, max_points)
    right = enumerate_points(system, other, max_points)
    target = enumerate_points(
        system, add_weights(weight, other), max_points
    )
    report = compare_sets(minkowski_sum(left, right), target)
    logger.debug(
        f"Minkowski check lambda={tuple(weight)}, mu={tuple(other)}: "
        f"{report.sum_count} vs {report.target_count} points."
    )
    return report


def _check_linear(
    system: InequalitySystem,
    weight: Sequence[int],
    k: int,
) -> None:
    for ineq in system.inequalities:
        if ineq.rhs(scale_weight(k, weight)) != k * ineq.rhs(weight):
            raise OracleMismatchError(
                f"bound of {ineq.identifier} is not linear in the weight"
            )


def normality_check(
    system: InequalitySystem,
    weight: Sequence[int],
    kmax: int,
    max_points: Optional[int] = None,
) -> Dict[int, bool]:
    """Check ``S(k lambda)`` against the ``k``-fold sum of ``S(lambda)``.

    Since every bound is linear in the weight, ``P(k lambda) = k P(lambda)``
    and the comparison tests normality.

    Args:
        system: Inequality system.
        weight: Dominant weight ``lambda``.
        kmax: Largest dilation factor, at least 1.
        max_points: Point limit per enumeration.

    Returns:
        Pass flag per ``k = 1..kmax``.

    Raises:
        dempoly.errors.exceptions.PreconditionError: `kmax` below 1.
    """
    if kmax < 1:
        raise PreconditionError(f"kmax must be at least 1, got {kmax}")
    base = enumerate_points(system, weight, max_points)
    results: Dict[int, bool] = {}
    folded: List[MultiExponent] = list(base.points)
    for k in range(1, kmax + 1):
        _check_linear(system, weight, k)
        if k > 1:
            folded = minkowski_sum(folded, base.points)
        dilated = enumerate_points(
            system, scale_weight(k, weight), max_points
        )
        results[k] = set(folded) == dilated.as_set()
        logger.debug(
            f"Normality at k={k}: {len(folded)} sums vs {len(dilated)} "
            f"points."
        )
    return results


def _fundamental_index(weight: Sequence[int]) -> Optional[int]:
    for pos, m in enumerate(weight, start=1):
        if m > 0:
            return pos
    return None


def _subtract(a: Sequence[int], b: Sequence[int]) -> MultiExponent:
    return tuple(x - y for x, y in zip(a, b))


def _candidates(
    system: InequalitySystem,
    point: Sequence[int],
    i: int,
    fundamental: PointSet,
) -> List[MultiExponent]:
    """Summand candidates: the greedy rule first, then every other option.

    The greedy rule takes the first coordinate ``beta`` of ``R_i`` with
    ``s_beta > 0`` and pairs it with the first other coordinate ``alpha``
    with ``s_alpha > 0`` such that ``e_beta + e_alpha`` lies in
    ``S(omega_i)``, falling back to ``e_beta``.
    """
    dim = system.dim
    support_i = [
        pos for pos, root in enumerate(system.poset.elements)
        if root.coeffs[i - 1] > 0 and point[pos] > 0
    ]
    ordered: List[MultiExponent] = []
    if support_i:
        beta = support_i[0]
        for alpha in range(dim):
            if alpha == beta or point[alpha] == 0:
                continue
            unit = [0] * dim
            unit[beta] = unit[alpha] = 1
            if tuple(unit) in fundamental:
                ordered.append(tuple(unit))
        unit = [0] * dim
        unit[beta] = 1
        ordered.append(tuple(unit))
    else:
        ordered.append(tuple(0 for _ in range(dim)))
    for candidate in fundamental.points:
        if candidate not in ordered and all(
            c <= s for c, s in zip(candidate, point)
        ):
            ordered.append(candidate)
    return ordered


def minkowski_decompose(
    system: InequalitySystem,
    point: Sequence[int],
    weight: Sequence[int],
    max_points: Optional[int] = None,
) -> List[Tuple[int, MultiExponent]]:
    """Split a point of ``S(lambda)`` into points of ``S(omega_i)``.

    Repeatedly picks the smallest ``i`` with ``m_i > 0`` and a summand from
    ``S(omega_i)`` whose removal leaves a point of ``S(lambda - omega_i)``.

    Args:
        system: Inequality system.
        point: Multi-exponent in ``S(lambda)``.
        weight: Dominant weight ``lambda``.
        max_points: Point limit per enumeration.

    Returns:
        Pairs ``(i, summand)``, one per unit of ``lambda``; a zero weight
        gives ``[(1, 0)]``.

    Raises:
        dempoly.errors.exceptions.PreconditionError: `point` not in
            ``S(lambda)``.
        dempoly.errors.exceptions.DecompositionError: No admissible summand.
    """
    weight = check_dominant(weight)
    if not membership(point, system, weight).member:
        raise PreconditionError(
            f"point {tuple(point)} is not in S({weight})"
        )
    lie_type = system.lie_type
    if not any(weight):
        return [(1, tuple(0 for _ in range(system.dim)))]
    fundamentals: Dict[int, PointSet] = {}
    remainder = tuple(point)
    current = weight
    summands: List[Tuple[int, MultiExponent]] = []
    while any(current):
        i = _fundamental_index(current)
        assert i is not None
        if i not in fundamentals:
            fundamentals[i] = enumerate_points(
                system, fundamental_weight(lie_type, i), max_points
            )
        rest_weight = _subtract(current, fundamental_weight(lie_type, i))
        for candidate in _candidates(system, remainder, i, fundamentals[i]):
            rest = _subtract(remainder, candidate)
            if candidate not in fundamentals[i]:
                continue
            if membership(rest, system, rest_weight).member:
                break
        else:
            raise DecompositionError(
                f"no summand of S(omega_{i}) splits {remainder} at "
                f"lambda={current}"
            )
        summands.append((i, candidate))
        remainder, current = rest, rest_weight
    logger.debug(f"Decomposed {tuple(point)} into {summands}.")
    return summands
