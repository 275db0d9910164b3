"""Lattice points of instantiated systems."""

from dataclasses import (dataclass, field)
from itertools import product
import logging
from multiprocessing.pool import Pool
from typing import (Any, Dict, Iterator, List, Optional, Sequence, Tuple)

import numpy as np

from dempoly.errors.exceptions import (
    ParameterError,
    ResourceLimitError,
)
from dempoly.polytope.system import (
    Inequality,
    InequalitySystem,
)
from dempoly.rootsys.weights import check_dominant

# Get logger instance
logger = logging.getLogger(__name__)

MultiExponent = Tuple[int, ...]
Rows = List[Tuple[Tuple[int, ...], int]]


@dataclass(frozen=True)
class PointSet:
    """Lattice points ``S_w(lambda)`` of a system.

    Attributes:
        system: Inequality system.
        weight: Highest weight ``lambda``.
        points: Points in lexicographic order of the chain coordinates.
    """
    system: InequalitySystem
    weight: Tuple[int, ...]
    points: Tuple[MultiExponent, ...]
    _members: frozenset = field(
        default=frozenset(), init=False, repr=False, compare=False,
    )

    def __post_init__(self) -> None:
        object.__setattr__(self, "_members", frozenset(self.points))

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[MultiExponent]:
        return iter(self.points)

    def __contains__(self, point: object) -> bool:
        return tuple(point) in self._members  # type: ignore

    @property
    def count(self) -> int:
        return len(self.points)

    def as_set(self) -> frozenset:
        return self._members

    def maxima(self) -> Tuple[int, ...]:
        """Componentwise maximum over the points."""
        if not self.points:
            return tuple(0 for _ in range(self.system.dim))
        return tuple(int(m) for m in np.max(np.array(self.points), axis=0))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "lambda": list(self.weight),
            "order": self.system.order,
            "points": [list(p) for p in self.points],
            "count": self.count,
        }


def _box(rows: Rows, dim: int) -> List[Optional[int]]:
    """Per-coordinate bound ``min floor(rhs / c)`` over covering rows."""
    upper: List[Optional[int]] = [None] * dim
    for coeffs, rhs in rows:
        for pos, c in enumerate(coeffs):
            if c > 0:
                cap = rhs // c
                if upper[pos] is None or cap < upper[pos]:  # type: ignore
                    upper[pos] = cap
    return upper


def _walk(
    rows: Rows,
    upper: Sequence[int],
    prefix: List[int],
    slacks: List[int],
    out: List[MultiExponent],
    limit: Optional[int],
) -> None:
    depth = len(prefix)
    if depth == len(upper):
        out.append(tuple(prefix))
        if limit is not None and len(out) > limit:
            raise ResourceLimitError(
                f"more than {limit} points; raise limits.max_points"
            )
        return
    active = [
        (row, coeffs[depth]) for row, (coeffs, _) in enumerate(rows)
        if coeffs[depth]
    ]
    cap = upper[depth]
    for row, c in active:
        cap = min(cap, slacks[row] // c)
    for value in range(cap + 1):
        for row, c in active:
            slacks[row] -= c * value
        prefix.append(value)
        _walk(rows, upper, prefix, slacks, out, limit)
        prefix.pop()
        for row, c in active:
            slacks[row] += c * value


def _enumerate_branch(
    args: Tuple[Rows, Sequence[int], int, Optional[int]],
) -> List[MultiExponent]:
    """Points with a fixed first coordinate; runs in pool workers."""
    rows, upper, first, limit = args
    slacks = [rhs - coeffs[0] * first for coeffs, rhs in rows]
    if any(s < 0 for s in slacks):
        return []
    out: List[MultiExponent] = []
    _walk(rows, upper, [first], slacks, out, limit)
    return out


def enumerate_points(
    system: InequalitySystem,
    weight: Sequence[int],
    max_points: Optional[int] = None,
    pool: Optional[Pool] = None,
) -> PointSet:
    """Enumerate ``S_w(lambda)`` exactly.

    Depth-first walk over the coordinates in chain order with running
    slacks per inequality; each coordinate is capped by the smallest
    quotient ``floor(rhs / c)`` of the inequalities containing it.

    Args:
        system: Inequality system.
        weight: Dominant weight ``lambda``.
        max_points: Abort when more points are found.
        pool: Worker pool; if given, the range of the first coordinate is
            distributed across the workers.

    Returns:
        Point set in lexicographic order.

    Raises:
        dempoly.errors.exceptions.NotDominantError: `weight` not dominant.
        dempoly.errors.exceptions.UnboundedSystemError: Coordinate not
            covered by any inequality.
        dempoly.errors.exceptions.ResourceLimitError: More than `max_points`
            points.
    """
    weight = check_dominant(weight)
    system.check_covered()
    rows = system.instantiate(weight)
    upper = [int(u or 0) for u in _box(rows, system.dim)]
    if system.dim == 0:
        points: List[MultiExponent] = [()]
    elif pool is None:
        points = []
        _walk(rows, upper, [], [rhs for _, rhs in rows], points, max_points)
    else:
        tasks = [(rows, upper, first, max_points) for first in range(
            upper[0] + 1
        )]
        points = []
        for branch in pool.map(_enumerate_branch, tasks):
            points.extend(branch)
            if max_points is not None and len(points) > max_points:
                raise ResourceLimitError(
                    f"more than {max_points} points; raise "
                    f"limits.max_points"
                )
    logger.debug(
        f"Enumerated {len(points)} points of {system.lie_type} at "
        f"lambda={weight} in box {upper}."
    )
    return PointSet(system=system, weight=weight, points=tuple(points))


def brute_force_points(
    system: InequalitySystem,
    weight: Sequence[int],
    max_box_volume: int = 10 ** 6,
) -> PointSet:
    """Scan the full box and keep the points satisfying every inequality.

    Raises:
        dempoly.errors.exceptions.ResourceLimitError: Box volume above
            `max_box_volume`.
    """
    weight = check_dominant(weight)
    system.check_covered()
    rows = system.instantiate(weight)
    upper = [int(u or 0) for u in _box(rows, system.dim)]
    volume = int(np.prod([u + 1 for u in upper], dtype=np.int64))
    if volume > max_box_volume:
        raise ResourceLimitError(
            f"box volume {volume} exceeds {max_box_volume}; raise "
            f"limits.max_box_volume"
        )
    coeffs = np.array([c for c, _ in rows], dtype=np.int64).reshape(
        len(rows), system.dim
    )
    rhs = np.array([b for _, b in rows], dtype=np.int64)
    points = []
    for first in range(upper[0] + 1):
        tail = [range(u + 1) for u in upper[1:]]
        grid = np.array(
            [(first,) + rest for rest in product(*tail)], dtype=np.int64
        ).reshape(-1, system.dim)
        feasible = np.all(grid @ coeffs.T <= rhs, axis=1)
        points.extend(tuple(int(x) for x in row) for row in grid[feasible])
    return PointSet(system=system, weight=weight, points=tuple(points))


@dataclass
class MembershipResult:
    """Outcome of a membership test.

    Attributes:
        member: Whether every inequality holds.
        violations: Violated inequalities with their (negative) slack.
    """
    member: bool
    violations: List[Tuple[Inequality, int]]

    def to_dict(self, order: Sequence[str]) -> Dict[str, Any]:
        return {
            "member": self.member,
            "violations": [
                dict(ineq.to_dict(order), slack=slack)
                for ineq, slack in self.violations
            ],
        }


def membership(
    point: Sequence[int],
    system: InequalitySystem,
    weight: Sequence[int],
) -> MembershipResult:
    """Check a multi-exponent against every inequality of the system.

    Raises:
        dempoly.errors.exceptions.ParameterError: Wrong length or negative
            entries.
    """
    if len(point) != system.dim:
        raise ParameterError(
            f"point of length {len(point)} for {system.dim} coordinates"
        )
    if any(s < 0 for s in point):
        raise ParameterError(f"point {tuple(point)} has negative entries")
    violations = []
    for ineq in system.inequalities:
        slack = ineq.slack(point, weight)
        if slack < 0:
            violations.append((ineq, slack))
    return MembershipResult(member=not violations, violations=violations)
