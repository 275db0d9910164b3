"""Path specifications, symbolic bounds and the local frames they live in."""

from dataclasses import (dataclass, field)
from enum import Enum
import logging
from typing import (Any, Dict, Iterable, List, Optional, Sequence, Tuple)

from dempoly.errors.exceptions import ParameterError
from dempoly.rootsys.cartan import LieType
from dempoly.rootsys.roots import (
    Root,
    root_by_coeffs,
    root_by_label,
)

# Get logger instance
logger = logging.getLogger(__name__)


class PathKind(Enum):
    """Enumerator for path kinds.

    Attributes:
        DYCK: Dyck path, all coefficients 1.
        DEGREE: Degree path, all coefficients 1.
        COEFFICIENT: Degree path with a coefficient tuple in ``{1, 2}``.
    """
    DYCK = "dyck"
    DEGREE = "degree"
    COEFFICIENT = "coeff"


@dataclass(frozen=True)
class BoundForm:
    """Linear form ``b . m`` in the weight coordinates.

    Args:
        b: Nonnegative integer coefficient per fundamental weight.

    Example:
        >>> BoundForm((1, 2, 1)).evaluate((0, 1, 0))
        2
    """
    b: Tuple[int, ...]

    @classmethod
    def zero(cls, rank: int) -> "BoundForm":
        return cls(tuple(0 for _ in range(rank)))

    def evaluate(self, weight: Sequence[int]) -> int:
        if len(weight) != len(self.b):
            raise ParameterError(
                f"weight of length {len(weight)} for bound {self.b}"
            )
        return sum(c * m for c, m in zip(self.b, weight))

    def __add__(self, other: "BoundForm") -> "BoundForm":
        return BoundForm(tuple(x + y for x, y in zip(self.b, other.b)))

    def __le__(self, other: "BoundForm") -> bool:
        return all(x <= y for x, y in zip(self.b, other.b))

    def __str__(self) -> str:
        terms = []
        for pos, c in enumerate(self.b, start=1):
            if c:
                terms.append(f"m{pos}" if c == 1 else f"{c}m{pos}")
        return " + ".join(terms) if terms else "0"


@dataclass(frozen=True)
class PathSpec:
    """Root sequence with coefficient tuple and bound.

    Args:
        roots: Roots of the path, in chain order.
        kind: Path kind.
        coeffs: Positive coefficient per root.
        bound: Right-hand side of the path inequality.
        family: Short name of the generating family, e.g. ``D3`` or ``t1``.
        params: Family parameters as ``(name, value)`` pairs.
    """
    roots: Tuple[Root, ...]
    kind: PathKind
    coeffs: Tuple[int, ...]
    bound: BoundForm
    family: str = ""
    params: Tuple[Tuple[str, Any], ...] = field(default=())

    def __post_init__(self) -> None:
        if len(self.roots) != len(self.coeffs):
            raise ParameterError(
                f"{len(self.roots)} roots but {len(self.coeffs)} "
                f"coefficients"
            )
        if not self.roots:
            raise ParameterError("empty path")

    @property
    def identifier(self) -> str:
        args = ",".join(f"{key}={value}" for key, value in self.params)
        return f"{self.family}({args})"

    def coefficient_map(self) -> Dict[Root, int]:
        return dict(zip(self.roots, self.coeffs))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "id": self.identifier,
            "kind": self.kind.value,
            "roots": [root.label for root in self.roots],
            "coeffs": list(self.coeffs),
            "bound": list(self.bound.b),
            "params": dict(self.params),
        }


@dataclass
class _Draft:
    """Path in local labels before it is placed in a frame."""
    family: str
    kind: PathKind
    entries: List[Tuple[Any, int]]
    bound: Dict[int, int]
    params: Tuple[Tuple[str, Any], ...] = ()


def bound_terms(*spans: Tuple[int, int], times: int = 1) -> Dict[int, int]:
    """Local bound with `times` on every node of the inclusive spans."""
    terms: Dict[int, int] = {}
    for lo, hi in spans:
        for pos in range(lo, hi + 1):
            terms[pos] = terms.get(pos, 0) + times
    return terms


def add_terms(*terms: Dict[int, int]) -> Dict[int, int]:
    total: Dict[int, int] = {}
    for term in terms:
        for pos, c in term.items():
            total[pos] = total.get(pos, 0) + c
    return total


class _Frame:
    """Places local drafts into the root system of a Lie type."""

    def __init__(self, lie_type: LieType, nodes: Sequence[int]) -> None:
        self.lie_type = lie_type
        self.nodes = tuple(nodes)

    def root(self, label: Any) -> Root:
        raise NotImplementedError

    def bound(self, terms: Dict[int, int]) -> BoundForm:
        b = [0] * self.lie_type.rank
        for pos, c in terms.items():
            b[self.nodes[pos - 1] - 1] += c
        return BoundForm(tuple(b))

    def place(self, drafts: Iterable[_Draft]) -> List[PathSpec]:
        paths = []
        for draft in drafts:
            paths.append(PathSpec(
                roots=tuple(self.root(label) for label, _ in draft.entries),
                kind=draft.kind,
                coeffs=tuple(c for _, c in draft.entries),
                bound=self.bound(draft.bound),
                family=draft.family,
                params=draft.params,
            ))
        return paths


class HookFrame(_Frame):
    """Frame of a hook on a chain of Dynkin nodes.

    The local label ``(p, q)`` with ``p <= q`` names the root
    ``alpha_(nodes[p]) + .. + alpha_(nodes[q])``.
    """

    def root(self, label: Any) -> Root:
        p, q = label
        coeffs = [0] * self.lie_type.rank
        for node in self.nodes[p - 1:q]:
            coeffs[node - 1] += 1
        root = root_by_coeffs(self.lie_type, coeffs)
        if root is None:
            raise ParameterError(
                f"nodes {self.nodes[p - 1:q]} do not sum to a root of "
                f"{self.lie_type}"
            )
        return root


class RowFrame(_Frame):
    """Frame of the first row of a rank ``r`` system on nodes ``i..n``.

    The local label ``(j, barred)`` names ``alpha_(i, i+j-1)`` with the same
    bar.
    """

    def __init__(self, lie_type: LieType, start: int) -> None:
        super().__init__(lie_type, range(start, lie_type.rank + 1))
        self.start = start

    @property
    def local_rank(self) -> int:
        return len(self.nodes)

    def root(self, label: Any) -> Root:
        j, barred = label
        return root_by_label(
            self.lie_type, self.start, self.start + j - 1, barred
        )


def dominates(upper: PathSpec, lower: PathSpec) -> bool:
    """Whether the inequality of `upper` implies the one of `lower`.

    Coefficients of `upper` are componentwise at least those of `lower` and
    its bound is componentwise at most the one of `lower`.
    """
    upper_coeffs = upper.coefficient_map()
    return all(
        upper_coeffs.get(root, 0) >= c
        for root, c in lower.coefficient_map().items()
    ) and upper.bound <= lower.bound


def drop_dominated(paths: Sequence[PathSpec]) -> List[PathSpec]:
    """Remove paths whose inequality is implied by a different one.

    Of several identical inequalities the first is kept.
    """
    kept = []
    for pos, path in enumerate(paths):
        dominated: Optional[PathSpec] = None
        for other_pos, other in enumerate(paths):
            if other_pos == pos or not dominates(other, path):
                continue
            identical = dominates(path, other)
            if not identical or other_pos < pos:
                dominated = other
                break
        if dominated is None:
            kept.append(path)
        else:
            logger.debug(
                f"Dropping {path.identifier}, implied by "
                f"{dominated.identifier}."
            )
    return kept
