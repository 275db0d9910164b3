"""Per-run parameters of a dempoly command."""

from enum import Enum
from pathlib import Path
from typing import (Any, Dict, List, Optional)

from pydantic import (root_validator, validator)  # pylint: disable=E0611

from dempoly.models.config import (
    DemPolyBaseConfig,
    OutputFormatEnum,
    SweepCheckEnum,
)
from dempoly.utils.misc import parse_int_list


class CommandEnum(Enum):
    """Enumerator for the commands of the command line interface."""
    roots = "roots"
    poset = "poset"
    word = "word"
    derivatives = "derivatives"
    paths = "paths"
    inequalities = "inequalities"
    points = "points"
    count = "count"
    membership = "membership"
    max_degree = "max-degree"
    dim_check = "dim-check"
    weight_check = "weight-check"
    minkowski = "minkowski"
    normality = "normality"
    decompose = "decompose"
    ideal_gens = "ideal-gens"
    ideal_min_gens = "ideal-min-gens"
    ideal_check = "ideal-check"
    face_check = "face-check"
    fixtures = "fixtures"
    sweep = "sweep"


# commands that work without a Lie type
UNTYPED_COMMANDS = {
    CommandEnum.fixtures,
    CommandEnum.sweep,
}

# commands that need a highest weight
WEIGHTED_COMMANDS = {
    CommandEnum.points,
    CommandEnum.count,
    CommandEnum.membership,
    CommandEnum.max_degree,
    CommandEnum.dim_check,
    CommandEnum.weight_check,
    CommandEnum.minkowski,
    CommandEnum.normality,
    CommandEnum.decompose,
    CommandEnum.ideal_gens,
    CommandEnum.ideal_min_gens,
    CommandEnum.ideal_check,
    CommandEnum.face_check,
}


def _parse_vector(value: Any) -> Any:
    if isinstance(value, str):
        return list(parse_int_list(value))
    return value


def _family_name(value: Any) -> str:
    name = str(value).strip().upper()
    if name not in ("A", "B", "C", "D"):
        raise ValueError(f"unknown Lie type family '{value}'")
    return name


class RunConfig(DemPolyBaseConfig):
    """Model for the parameters of a single command run.

    Args:
        command: Command to run.
        family: Lie type family ``A``, ``B``, ``C`` or ``D``.
        rank: Rank of the Lie type.
        start: First letter ``i`` of the word.
        end: Last node of a type A hook.
        variant: Type D word variant, ``hatted`` or ``full``.
        include_redundant: Whether to keep dominated inequalities.
        include_coefficients: Whether to include coefficient paths.
        weight: Highest weight ``lambda``; comma-separated strings are
            accepted.
        mu: Second weight for the Minkowski check.
        point: Multi-exponent for membership and decomposition.
        kmax: Largest dilation factor for the normality check.
        substart: First letter of the suffix word for the face check.
        box: Inclusive upper corner for the ideal scan box.
        box_pad: Padding of the default ideal scan box.
        fixture: Restrict the fixture check to this identifier.
        families: Sweep families.
        ranks: Sweep ranks.
        max_weight_sum: Sweep weight sum.
        checks: Sweep checks.
        format: Report format; defaults to the configured one.
        out: Output path; ``None`` writes to standard output.
        jobs: Number of worker processes.
        max_points: Point limit; defaults to the configured one.

    Raises:
        pydantic.ValidationError: The class was instantianted with an illegal
            data type or inconsistent parameters.

    Example:
        >>> RunConfig(
        ...     command="points", family="a", rank=3, weight="0,1,0"
        ... ).weight
        [0, 1, 0]
    """
    command: CommandEnum
    family: Optional[str] = None
    rank: Optional[int] = None
    start: int = 1
    end: Optional[int] = None
    variant: Optional[str] = None
    include_redundant: bool = False
    include_coefficients: bool = True
    weight: Optional[List[int]] = None
    mu: Optional[List[int]] = None
    point: Optional[List[int]] = None
    kmax: int = 3
    substart: Optional[int] = None
    box: Optional[List[int]] = None
    box_pad: int = 2
    fixture: Optional[str] = None
    families: Optional[List[str]] = None
    ranks: Optional[List[int]] = None
    max_weight_sum: Optional[int] = None
    checks: Optional[List[SweepCheckEnum]] = None
    format: Optional[OutputFormatEnum] = None
    out: Optional[Path] = None
    jobs: Optional[int] = None
    max_points: Optional[int] = None

    _parse_vectors = validator(
        'weight', 'mu', 'point', 'box', 'ranks', pre=True, allow_reuse=True,
    )(_parse_vector)

    @validator('family', 'families', pre=True, allow_reuse=True)
    def validate_family(cls, v, field):  # pylint: disable=E0213
        """Accept families case-insensitively, also as one string."""
        if v is None:
            return v
        if isinstance(v, str) and field.name == 'families':
            v = v.split(",")
        if isinstance(v, list):
            return [_family_name(item) for item in v]
        return _family_name(v)

    @validator('checks', pre=True, allow_reuse=True)
    def validate_checks(cls, v):  # pylint: disable=E0213
        """Split comma-separated check names."""
        if isinstance(v, str):
            return [item.strip() for item in v.split(",") if item.strip()]
        return v

    @validator('variant', allow_reuse=True)
    def validate_variant(cls, v):  # pylint: disable=E0213
        """Allow the type D word variants only."""
        if v is not None and v not in ("hatted", "full"):
            raise ValueError(
                f"word variant must be 'hatted' or 'full', got '{v}'"
            )
        return v

    @validator('kmax', 'box_pad', 'jobs', allow_reuse=True)
    def validate_non_negative(cls, v):  # pylint: disable=E0213
        """Reject negative counts."""
        if v is not None and v < 0:
            raise ValueError("value must not be negative")
        return v

    @root_validator(skip_on_failure=True, allow_reuse=True)
    def validate_command_inputs(cls, values):  # pylint: disable=E0213
        """Check that the command has the parameters it needs."""
        command = values['command']
        if command in UNTYPED_COMMANDS:
            return values
        if values.get('family') is None or values.get('rank') is None:
            raise ValueError(
                f"command '{command.value}' requires --type and --rank"
            )
        if command in WEIGHTED_COMMANDS and values.get('weight') is None:
            raise ValueError(
                f"command '{command.value}' requires --weight"
            )
        for name in ('weight', 'mu'):
            vector = values.get(name)
            if vector is not None and len(vector) != values['rank']:
                raise ValueError(
                    f"--{name} needs {values['rank']} entries, got "
                    f"{len(vector)}"
                )
        if command is CommandEnum.minkowski and values.get('mu') is None:
            raise ValueError("command 'minkowski' requires --mu")
        if command in (CommandEnum.membership, CommandEnum.decompose) and (
            values.get('point') is None
        ):
            raise ValueError(
                f"command '{command.value}' requires --point"
            )
        if command is CommandEnum.face_check and (
            values.get('substart') is None
        ):
            raise ValueError("command 'face-check' requires --substart")
        return values

    def describe(self) -> str:
        """Short description of the run for log messages."""
        if self.command is CommandEnum.sweep:
            return (
                f"families={self.families}, ranks={self.ranks}, "
                f"max_weight_sum={self.max_weight_sum}"
            )
        if self.family is None:
            return "all fixtures" if self.fixture is None else self.fixture
        parts = [f"{self.family}{self.rank}", f"start={self.start}"]
        if self.variant is not None:
            parts.append(f"variant={self.variant}")
        if self.weight is not None:
            parts.append(f"lambda={tuple(self.weight)}")
        return ", ".join(parts)

    def parameters(self) -> Dict[str, Any]:
        """Explicitly set parameters, for report headers."""
        params: Dict[str, Any] = {}
        for key, value in self.dict(exclude_none=True).items():
            if key in ('format', 'out', 'jobs'):
                continue
            if isinstance(value, Enum):
                value = value.value
            elif isinstance(value, list):
                value = [v.value if isinstance(v, Enum) else v for v in value]
            params[key] = value
        return params
