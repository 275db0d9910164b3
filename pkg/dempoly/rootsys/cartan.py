"""Lie types and Cartan matrices of the classical families."""

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
import logging
import re
from typing import Union

import numpy as np

from dempoly.errors.exceptions import (
    IndexRangeError,
    InvalidInputError,
    RankDomainError,
)

# Get logger instance
logger = logging.getLogger(__name__)


class Family(Enum):
    """Enumerator for the classical Lie type families.

    Attributes:
        A: Special linear algebras sl(n+1).
        B: Odd orthogonal algebras so(2n+1).
        C: Symplectic algebras sp(2n).
        D: Even orthogonal algebras so(2n).
    """
    A = "A"
    B = "B"
    C = "C"
    D = "D"


MIN_RANK = {
    Family.A: 1,
    Family.B: 2,
    Family.C: 2,
    Family.D: 4,
}


@dataclass(frozen=True)
class LieType:
    """Classical Lie type of a given rank.

    Args:
        family: Lie type family; strings such as ``"C"`` are accepted.
        rank: Rank ``n`` of the algebra.

    Attributes:
        family: Lie type family.
        rank: Rank ``n`` of the algebra.

    Raises:
        dempoly.errors.exceptions.RankDomainError: Rank too small for the
            family. ``D3`` is rejected rather than aliased to ``A3``.

    Example:
        >>> LieType("C", 3)
        LieType(family=<Family.C: 'C'>, rank=3)
    """
    family: Family
    rank: int

    def __post_init__(self) -> None:
        try:
            family = Family(
                self.family.value if isinstance(self.family, Family)
                else str(self.family).upper()
            )
        except ValueError as exc:
            raise InvalidInputError(
                f"unknown Lie type family '{self.family}'"
            ) from exc
        object.__setattr__(self, "family", family)
        if not isinstance(self.rank, int) or self.rank < MIN_RANK[family]:
            raise RankDomainError(
                f"type {family.value} requires rank >= {MIN_RANK[family]}, "
                f"got {self.rank}"
            )

    def __str__(self) -> str:
        return f"{self.family.value}{self.rank}"

    @classmethod
    def parse(cls, name: str) -> "LieType":
        """Parse a name such as ``"B4"``."""
        match = re.fullmatch(r"\s*([A-Da-d])\s*(\d+)\s*", name)
        if match is None:
            raise InvalidInputError(f"'{name}' is not a Lie type name")
        return cls(Family(match.group(1).upper()), int(match.group(2)))

    def check_index(self, i: int) -> int:
        """Return `i` if it is a node of the Dynkin diagram.

        Raises:
            dempoly.errors.exceptions.IndexRangeError: `i` outside ``1..n``.
        """
        if not 1 <= i <= self.rank:
            raise IndexRangeError(
                f"simple root index {i} outside 1..{self.rank} for {self}"
            )
        return i


def as_lie_type(value: Union[LieType, str]) -> LieType:
    """Accept either a :py:class:`LieType` or its name."""
    return value if isinstance(value, LieType) else LieType.parse(value)


@lru_cache(maxsize=None)
def _cartan(lie_type: LieType) -> np.ndarray:
    n = lie_type.rank
    cartan = 2 * np.eye(n, dtype=np.int64)
    for i in range(n - 1):
        cartan[i, i + 1] = -1
        cartan[i + 1, i] = -1
    if lie_type.family is Family.B:
        # alpha_n short
        cartan[n - 1, n - 2] = -2
    elif lie_type.family is Family.C:
        # alpha_n long
        cartan[n - 2, n - 1] = -2
    elif lie_type.family is Family.D:
        cartan[n - 2, n - 1] = 0
        cartan[n - 1, n - 2] = 0
        cartan[n - 3, n - 1] = -1
        cartan[n - 1, n - 3] = -1
    cartan.setflags(write=False)
    logger.debug(f"Cartan matrix of {lie_type}: {cartan.tolist()}")
    return cartan


def cartan_matrix(lie_type: LieType) -> np.ndarray:
    """Return the Cartan matrix ``C`` with ``C[i, j] = <alpha_j, alpha_i^v>``.

    Column ``j`` holds the fundamental-weight coordinates of the simple root
    ``alpha_j``.

    Args:
        lie_type: Lie type.

    Returns:
        Writable copy of the ``n x n`` integer matrix.
    """
    return _cartan(lie_type).copy()


def simple_root_weight(lie_type: LieType, i: int) -> np.ndarray:
    """Fundamental-weight coordinates of the simple root ``alpha_i``."""
    lie_type.check_index(i)
    return _cartan(lie_type)[:, i - 1]
