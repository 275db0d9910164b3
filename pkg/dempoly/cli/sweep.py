"""Batched oracle checks over ranges of Lie types and weights."""

from dataclasses import (dataclass, field)
import logging
from multiprocessing.pool import Pool
from typing import (
    Any,
    Dict,
    Iterator,
    List,
    Optional,
    Sequence,
    Tuple,
)

from dempoly.demchar.verify import verify_against_points
from dempoly.errors.exceptions import ResourceLimitError
from dempoly.models.config import SweepCheckEnum
from dempoly.polytope.minkowski import (
    minkowski_check,
    normality_check,
)
from dempoly.polytope.points import (
    brute_force_points,
    enumerate_points,
)
from dempoly.polytope.system import build_system_for_word
from dempoly.rootsys.cartan import (
    Family,
    LieType,
    MIN_RANK,
)
from dempoly.rootsys.weights import (
    dominant_weights,
    fundamental_weight,
)
from dempoly.rootsys.words import (
    WordVariant,
    reflection_word,
)
from dempoly.utils.misc import format_int_list

# Get logger instance
logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SweepCell:
    """Single ``(type, start, variant, lambda)`` instance of a sweep."""
    family: str
    rank: int
    start: int
    variant: Optional[str]
    weight: Tuple[int, ...]

    @property
    def hard(self) -> bool:
        """Whether a failure of the cell fails the sweep."""
        if self.family in ("A", "C"):
            return True
        return self.family == "B" and self.rank == 2 and self.start == 1


@dataclass
class SweepResult:
    """Rows of a sweep.

    Attributes:
        rows: One row per finished cell, in cell order.
        limited: Whether a cell hit the point or box volume limit; later
            cells were not run.
    """
    rows: List[Dict[str, Any]] = field(default_factory=list)
    limited: bool = False

    @property
    def passed(self) -> bool:
        return all(row["passed"] for row in self.rows if row["gate"] == "hard")

    @property
    def soft_failures(self) -> int:
        return sum(
            1 for row in self.rows
            if row["gate"] == "soft" and not row["passed"]
        )


def sweep_cells(
    families: Sequence[str],
    ranks: Sequence[int],
    max_weight_sum: int,
) -> Iterator[SweepCell]:
    """All cells of the given ranges; ranks below the family minimum are
    skipped.

    Type D runs both word variants and stops at start ``n - 1``.
    """
    for name in families:
        family = Family(name)
        for rank in ranks:
            if rank < MIN_RANK[family]:
                logger.debug(f"Skipping {name}{rank}: rank too small.")
                continue
            if family is Family.D:
                starts = range(1, rank)
                variants: Sequence[Optional[str]] = (
                    WordVariant.HATTED.value, WordVariant.FULL.value,
                )
            else:
                starts = range(1, rank + 1)
                variants = (None,)
            for start in starts:
                for variant in variants:
                    for weight in dominant_weights(rank, max_weight_sum):
                        yield SweepCell(
                            family=name,
                            rank=rank,
                            start=start,
                            variant=variant,
                            weight=weight,
                        )


def run_cell(
    args: Tuple[SweepCell, Tuple[str, ...], int, Optional[int], int],
) -> Dict[str, Any]:
    """Run the checks of one cell.

    Module-level so that worker processes can unpickle it.

    Args:
        args: Cell, names of the checks, largest dilation factor, point
            limit and box volume limit of the brute-force scan.

    Returns:
        Summary row; a cell exceeding the point or box volume limit has
        ``limited`` set.
    """
    cell, checks, kmax, max_points, max_box_volume = args
    lie_type = LieType(cell.family, cell.rank)
    row: Dict[str, Any] = {
        "type": str(lie_type),
        "start": cell.start,
        "variant": cell.variant or "",
        "lambda": format_int_list(cell.weight),
        "gate": "hard" if cell.hard else "soft",
    }
    outcomes: List[bool] = []
    try:
        word = reflection_word(lie_type, cell.start, cell.variant)
        system = build_system_for_word(word)
        points = enumerate_points(system, cell.weight, max_points)
        oracle = verify_against_points(word, cell.weight, points)
        row["points"] = oracle.point_count
        row["dim"] = oracle.dimension
        if SweepCheckEnum.dim.value in checks:
            row["dim_check"] = oracle.point_count == oracle.dimension
            outcomes.append(row["dim_check"])
        if SweepCheckEnum.weight.value in checks:
            row["weight_check"] = oracle.passed
            outcomes.append(oracle.passed)
        if SweepCheckEnum.minkowski.value in checks:
            report = minkowski_check(
                system,
                cell.weight,
                fundamental_weight(lie_type, 1),
                max_points,
            )
            row["minkowski"] = report.passed
            outcomes.append(report.passed)
        if SweepCheckEnum.normality.value in checks and any(cell.weight):
            normal = all(
                normality_check(
                    system, cell.weight, kmax, max_points
                ).values()
            )
            row["normality"] = normal
            outcomes.append(normal)
        if SweepCheckEnum.brute.value in checks:
            scanned = brute_force_points(system, cell.weight, max_box_volume)
            row["brute_check"] = scanned.as_set() == points.as_set()
            outcomes.append(row["brute_check"])
    except ResourceLimitError as exc:
        row["limited"] = str(exc)
        row["passed"] = False
        return row
    row["passed"] = all(outcomes)
    return row


def sweep(
    families: Sequence[str],
    ranks: Sequence[int],
    max_weight_sum: int,
    checks: Sequence[SweepCheckEnum],
    kmax: int = 2,
    max_points: Optional[int] = None,
    max_box_volume: int = 10 ** 6,
    pool: Optional[Pool] = None,
    chunksize: int = 1,
) -> SweepResult:
    """Run the selected checks on every cell of the ranges.

    Rows keep cell order whether or not a pool is used. The sweep stops at
    the first cell exceeding `max_points` or `max_box_volume` and returns
    the rows so far.

    Args:
        families: Family names.
        ranks: Ranks.
        max_weight_sum: Largest coordinate sum of the weights.
        checks: Checks per cell. The Minkowski check pairs ``lambda`` with
            ``omega_1``; the normality check skips ``lambda = 0``.
        kmax: Largest dilation factor of the normality check.
        max_points: Point limit per enumeration.
        max_box_volume: Box volume limit of the brute-force scan.
        pool: Worker pool; cells are distributed across its workers.
        chunksize: Cells per task of the pool.

    Returns:
        Sweep result.
    """
    names = tuple(check.value for check in checks)
    tasks = [
        (cell, names, kmax, max_points, max_box_volume)
        for cell in sweep_cells(families, ranks, max_weight_sum)
    ]
    logger.info(f"Sweeping {len(tasks)} cells with checks {list(names)}.")
    if pool is None:
        rows: Iterator[Dict[str, Any]] = map(run_cell, tasks)
    else:
        rows = pool.imap(run_cell, tasks, chunksize=chunksize)
    result = SweepResult()
    for row in rows:
        if "limited" in row:
            logger.warning(
                f"Sweep stopped at {row['type']}, start {row['start']}, "
                f"lambda=({row['lambda']}): {row['limited']}"
            )
            result.rows.append(row)
            result.limited = True
            break
        if not row["passed"]:
            log = logger.error if row["gate"] == "hard" else logger.warning
            log(
                f"Sweep cell {row['type']}, start {row['start']}, "
                f"lambda=({row['lambda']}) failed."
            )
        result.rows.append(row)
    logger.info(
        f"Sweep finished: {len(result.rows)} rows, "
        f"{result.soft_failures} soft failures."
    )
    return result
