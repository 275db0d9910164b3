"""Inequality systems ``P_w(lambda)`` over the coordinates of ``R_w``."""

from dataclasses import dataclass
import logging
from typing import (Any, Dict, List, Optional, Sequence, Tuple)

import numpy as np

from dempoly.errors.exceptions import (
    ParameterError,
    UnboundedSystemError,
)
from dempoly.pathgen.families import paths_for_word
from dempoly.pathgen.paths import (
    BoundForm,
    PathSpec,
)
from dempoly.rootsys.cartan import LieType
from dempoly.rootsys.posets import (
    RootPoset,
    inversion_set,
)
from dempoly.rootsys.words import (
    ReflectionWord,
    reflection_word,
)

# Get logger instance
logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Inequality:
    """Inequality ``sum_alpha c_alpha s_alpha <= b . m``.

    Args:
        coeffs: Coefficient per coordinate, in the coordinate order of the
            system.
        bound: Right-hand side as a linear form in the weight.
        path: Path the inequality comes from, if any.
    """
    coeffs: Tuple[int, ...]
    bound: BoundForm
    path: Optional[PathSpec] = None

    def lhs(self, point: Sequence[int]) -> int:
        return sum(c * s for c, s in zip(self.coeffs, point) if c)

    def rhs(self, weight: Sequence[int]) -> int:
        return self.bound.evaluate(weight)

    def slack(self, point: Sequence[int], weight: Sequence[int]) -> int:
        """``rhs - lhs``; negative iff the inequality is violated."""
        return self.rhs(weight) - self.lhs(point)

    @property
    def support(self) -> Tuple[int, ...]:
        return tuple(pos for pos, c in enumerate(self.coeffs) if c)

    @property
    def identifier(self) -> str:
        return self.path.identifier if self.path is not None else ""

    def render(self, order: Sequence[str]) -> str:
        """Human-readable form, e.g. ``2s[1,1] + s[1,2] <= 2m1 + m2``."""
        terms = []
        for label, c in zip(order, self.coeffs):
            if c:
                name = "s" + label[1:]
                terms.append(name if c == 1 else f"{c}{name}")
        return f"{' + '.join(terms)} <= {self.bound}"

    def to_dict(self, order: Sequence[str]) -> Dict[str, Any]:
        entry: Dict[str, Any] = (
            self.path.to_dict() if self.path is not None else {}
        )
        entry.update({
            "coeffs": {
                label: c for label, c in zip(order, self.coeffs) if c
            },
            "bound": list(self.bound.b),
            "text": self.render(order),
        })
        return entry


@dataclass(frozen=True)
class InequalitySystem:
    """Inequalities of ``P_w(lambda)`` for a word ``w``.

    Attributes:
        word: Word ``w``.
        poset: Inversion set ``R_w`` fixing the coordinate order.
        inequalities: Inequalities in path emission order.
    """
    word: ReflectionWord
    poset: RootPoset
    inequalities: Tuple[Inequality, ...]

    @property
    def lie_type(self) -> LieType:
        return self.poset.lie_type

    @property
    def dim(self) -> int:
        return len(self.poset.elements)

    @property
    def order(self) -> List[str]:
        return self.poset.labels

    def __len__(self) -> int:
        return len(self.inequalities)

    def check_covered(self) -> None:
        """Raise if some coordinate occurs in no inequality.

        Raises:
            dempoly.errors.exceptions.UnboundedSystemError: Uncovered
                coordinate.
        """
        covered = set()
        for ineq in self.inequalities:
            covered.update(ineq.support)
        missing = [
            self.order[pos] for pos in range(self.dim) if pos not in covered
        ]
        if missing:
            raise UnboundedSystemError(
                f"coordinates {missing} are not bounded by any inequality"
            )

    def matrices(self) -> Tuple[np.ndarray, np.ndarray]:
        """Coefficient matrix ``A`` and bound matrix ``B``.

        The instantiated system at ``lambda`` is ``A s <= B lambda``.
        """
        rows = len(self.inequalities)
        coeffs = np.zeros((rows, self.dim), dtype=np.int64)
        bounds = np.zeros((rows, self.lie_type.rank), dtype=np.int64)
        for row, ineq in enumerate(self.inequalities):
            coeffs[row] = ineq.coeffs
            bounds[row] = ineq.bound.b
        return coeffs, bounds

    def instantiate(
        self,
        weight: Sequence[int],
    ) -> List[Tuple[Tuple[int, ...], int]]:
        """Rows ``(coefficients, rhs)`` of the system at `weight`."""
        if len(weight) != self.lie_type.rank:
            raise ParameterError(
                f"weight of length {len(weight)} for rank "
                f"{self.lie_type.rank}"
            )
        coeffs, bounds = self.matrices()
        rhs = bounds @ np.asarray(weight, dtype=np.int64)
        return [
            (tuple(int(c) for c in row), int(b))
            for row, b in zip(coeffs, rhs)
        ]

    def restricted(
        self,
        poset: RootPoset,
        word: Optional[ReflectionWord] = None,
    ) -> "InequalitySystem":
        """Restrict to the coordinates of `poset`, a subset of ``R_w``.

        Coordinates outside `poset` are set to zero; inequalities without
        remaining support are dropped.

        Args:
            poset: Coordinates to keep.
            word: Word the restricted system belongs to; defaults to the
                word of the system.

        Raises:
            dempoly.errors.exceptions.ParameterError: `poset` is not a
                subset of the coordinates.
        """
        positions = self.poset.positions()
        try:
            keep = [positions[root] for root in poset.elements]
        except KeyError as exc:
            raise ParameterError(
                f"{exc.args[0].label} is not a coordinate of the system"
            )
        inequalities = []
        for ineq in self.inequalities:
            coeffs = tuple(ineq.coeffs[pos] for pos in keep)
            if any(coeffs):
                inequalities.append(Inequality(coeffs, ineq.bound, ineq.path))
        return InequalitySystem(
            word=self.word if word is None else word,
            poset=poset,
            inequalities=tuple(inequalities),
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            "type": str(self.lie_type),
            "word": list(self.word.letters),
            "order": self.order,
            "inequalities": [
                ineq.to_dict(self.order) for ineq in self.inequalities
            ],
            "count": len(self.inequalities),
        }


def system_from_paths(
    word: ReflectionWord,
    paths: Sequence[PathSpec],
    poset: Optional[RootPoset] = None,
) -> InequalitySystem:
    """One inequality per path; coordinates off the path get 0."""
    poset = inversion_set(word) if poset is None else poset
    positions = poset.positions()
    inequalities = []
    for path in paths:
        coeffs = [0] * len(poset.elements)
        for root, c in path.coefficient_map().items():
            if root not in positions:
                raise ParameterError(
                    f"path {path.identifier} uses {root.label} outside "
                    f"the inversion set"
                )
            coeffs[positions[root]] = c
        inequalities.append(Inequality(tuple(coeffs), path.bound, path))
    return InequalitySystem(
        word=word,
        poset=poset,
        inequalities=tuple(inequalities),
    )


def build_system_for_word(
    word: ReflectionWord,
    include_redundant: bool = False,
    include_coefficients: bool = True,
) -> InequalitySystem:
    """Inequality system of the word."""
    paths = paths_for_word(
        word,
        include_redundant=include_redundant,
        include_coefficients=include_coefficients,
    )
    system = system_from_paths(word, paths)
    logger.debug(
        f"System for '{word}': {len(system)} inequalities in "
        f"{system.dim} coordinates."
    )
    return system


def build_system(
    lie_type: LieType,
    start: int = 1,
    variant: Optional[object] = None,
    end: Optional[int] = None,
    include_redundant: bool = False,
    include_coefficients: bool = True,
) -> InequalitySystem:
    """Inequality system of ``r_gamma`` for the word starting at `start`.

    Args:
        lie_type: Lie type.
        start: First letter of the word.
        variant: Type D word variant.
        end: Type A hook end.
        include_redundant: Whether to keep dominated inequalities.
        include_coefficients: ``False`` gives the system of ``P'_w``
            without coefficient paths.

    Returns:
        The inequality system.
    """
    word = reflection_word(lie_type, start, variant, end)
    return build_system_for_word(
        word,
        include_redundant=include_redundant,
        include_coefficients=include_coefficients,
    )

