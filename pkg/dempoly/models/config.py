"""dempoly config models."""

from copy import deepcopy
from enum import Enum
from functools import reduce
import importlib
from typing import (Any, Dict, List, Optional, Union)

from pydantic import (BaseModel, Field, validator)  # pylint: disable=E0611

from dempoly.utils.misc import _get_by_path


def _validate_log_level_choices(level: int) -> int:
    """Custom validation function for Pydantic to ensure that a valid
    logging level is configured.

    Args:
        level: Log level choice to be validated.

    Returns:
        Unmodified `level` value if validation succeeds.

    Raises:
        ValueError: Raised if validation fails.
    """
    choices = [0, 10, 20, 30, 40, 50]
    if level not in choices:
        raise ValueError("illegal log level specified")
    return level


def _validate_positive(value: int) -> int:
    if value < 1:
        raise ValueError("value must be a positive integer")
    return value


class ExceptionLoggingEnum(Enum):
    """Enumerator for exception logging config values.

    Attributes:
        minimal: Exception title and message are logged on a single line.
        none: Exception details are not logged.
        oneline: Exception, including traceback, is logged on a single line.
        regular: The exception is logged with the entire traceback stack,
            typically on multiple lines.
    """
    minimal = "minimal"
    none = "none"
    regular = "regular"
    oneline = "oneline"


class OutputFormatEnum(Enum):
    """Enumerator for report formats.

    Attributes:
        json: One JSON document.
        csv: Comma-separated table rows with a header line.
        text: YAML-flavoured human readable text.
    """
    json = "json"
    csv = "csv"
    text = "text"


class SweepCheckEnum(Enum):
    """Enumerator for the checks a sweep can run per cell.

    Attributes:
        dim: Point count against the Demazure module dimension.
        weight: Point weights against the Demazure character.
        minkowski: ``S(lambda) + S(omega_1) = S(lambda + omega_1)``.
        normality: ``S(k lambda)`` against the ``k``-fold sum of
            ``S(lambda)``.
        brute: Enumerated points against a scan of the bounding box;
            boxes above ``limits.max_box_volume`` limit the cell.
    """
    dim = "dim"
    weight = "weight"
    minkowski = "minkowski"
    normality = "normality"
    brute = "brute"


class DemPolyBaseConfig(BaseModel):
    """Base configuration for dempoly models."""

    class Config:
        """Configuration for Pydantic model class."""
        extra = 'forbid'
        arbitrary_types_allowed = True


class ExceptionConfig(DemPolyBaseConfig):
    """Model for a custom exception handling configuration.

    Args:
        required_members: List of dictionary keys indicating which members
            are required for all exceptions. *Must* contain a member that
            represents the process exit code (cf. `code_member`).
        extension_members: Either a list of additionally allowed, optional
            extension members, or a Boolean expression indicating whether
            any (``True``) or no (``False``) additional members are allowed.
        code_member: Sequence of dictionary keys indicating the member that
            represents the exit code (e.g, ``2``).
        public_members: Filter to restrict which exception members are written
            to the problem document. Only members listed here, with each one
            specified as a sequence of keys, are included. Specify an empty
            list to suppress the problem document. Set to ``None`` to disable
            filtering. Note that only one of `public_members` and
            `private_members` filters can be active.
        private_members: Filter to restrict which exception members are
            written to the problem document. Members listed here, with each
            one specified as a sequence of keys, are excluded. Set to ``None``
            to disable filtering.
        exceptions: Dot-separated path to the dictionary mapping exception
            classes to their members, e.g., ``myapp.errors.exc_dict``. It is
            strongly advised to include the catch-all ``Exception``; any
            exception not listed exits with code 2 and no problem document.
        logging: Specifies if and how exception details are logged. Unless
            :py:attr:`dempoly.models.config.ExceptionLoggingEnum.none` is
            specified, the unfiltered members are logged on an additional
            line.
        mapping: The actual referenced dictionary from `exceptions`, populated
            by the validator.

    Attributes:
        required_members: List of dictionary keys indicating which members
            are required for all exceptions.
        extension_members: Additionally allowed members, or whether any
            additional members are allowed.
        code_member: Sequence of dictionary keys indicating the member that
            represents the exit code.
        public_members: Members written to the problem document.
        private_members: Members excluded from the problem document.
        exceptions: Dot-separated path to the exceptions dictionary.
        logging: Specifies if and how exception details are logged.
        mapping: The actual referenced dictionary from `exceptions`.

    Raises:
        pydantic.ValidationError: The class was instantianted with an illegal
            data type, or the referenced dictionary is not a valid mapping.

    Example:
        >>> ExceptionConfig(logging="minimal").code_member
        ['exit_code']
    """
    required_members: List[List[str]] = [["title"], ["exit_code"]]
    extension_members: Union[bool, List[List[str]]] = False
    code_member: List[str] = ["exit_code"]
    public_members: Optional[List[List[str]]] = None
    private_members: Optional[List[List[str]]] = None
    exceptions: str = "dempoly.errors.exceptions.exceptions"
    logging: ExceptionLoggingEnum = ExceptionLoggingEnum.oneline
    mapping: Optional[Dict[Any, Dict[str, Any]]] = None

    # set mapping
    @validator('mapping', always=True, allow_reuse=True)
    def validate_mapping(cls, v, *, values):  # pylint: disable=E0213
        """Validate that the exceptions dictionary can be imported, that all
        exceptions have all required members and no additional members
        (unless specifically allowed) and replace the default value of field
        mapping with the contents of the exceptions dictionary.
        """
        # Set allowed members
        limited_members = not (
            isinstance(values['extension_members'], bool) and
            values['extension_members']
        )
        allowed_members = deepcopy(values['required_members'])
        if isinstance(values['extension_members'], list):
            allowed_members += values['extension_members']
        # Ensure that `exceptions` module can be imported
        split_module = values['exceptions'].split('.')
        exc_dict_name = split_module.pop()
        module_path = '.'.join(split_module)
        try:
            mod = importlib.import_module(module_path)
        except ModuleNotFoundError:
            raise ValueError(
                f"Module '{module_path}' referenced in field 'exceptions' "
                "could not be found."
            )
        # Ensure that `exceptions` module has the referenced attribute
        try:
            exc_dict = getattr(mod, exc_dict_name)
        except AttributeError:
            raise ValueError(
                f"Module '{module_path}' referenced in field 'exceptions' "
                f"does not have attribute '{exc_dict_name}'."
            )
        if not isinstance(exc_dict, dict):
            raise TypeError(
                f"Attribute '{exc_dict_name}' in module '{module_path}' "
                "referenced in field 'exceptions' is not a dictionary."
            )
        # Ensure that `code_member` is a `required_member`
        if values['code_member'] not in values['required_members']:
            raise ValueError(
                "Exit code member is not among required members."
            )
        if limited_members and values['public_members']:
            if not all(m in allowed_members for m in values['public_members']):
                raise ValueError(
                    "Public members have more fields than are allowed by "
                    "'required_members' and 'extension_members'."
                )
        if limited_members and values['private_members']:
            if not all(
                m in allowed_members for m in values['private_members']
            ):
                raise ValueError(
                    "Private members have more fields than are allowed by "
                    "'required_members' and 'extension_members'."
                )
        if (
                isinstance(values['public_members'], list) and
                isinstance(values['private_members'], list)
        ):
            raise ValueError(
                "Both public and private member filters are active, but at "
                "most one is allowed."
            )
        for key, val in exc_dict.items():
            if not isinstance(val, dict):
                raise TypeError(
                    f"Exception '{key}' in 'exceptions' dictionary does not "
                    "have member dictionary as its value."
                )
            if not (isinstance(key, type) and issubclass(key, BaseException)):
                raise TypeError(
                    f"Key '{key}' in 'exceptions' dictionary does not appear "
                    "to be an Exception."
                )
            # Ensure that the exit code member can be cast to type `int`
            try:
                int(_get_by_path(
                    obj=val,
                    key_sequence=values['code_member'],
                ))
            except (KeyError, ValueError, TypeError):
                raise ValueError(
                    f"Exit code member in exception '{key}' cannot be cast "
                    "to type integer."
                )
            for keys in values['required_members']:
                try:
                    _get_by_path(
                        obj=val,
                        key_sequence=keys,
                    )
                except (KeyError, ValueError):
                    raise ValueError(
                        f"Exception '{key}' in 'exceptions' dictionary does "
                        "not have all fields required by 'required_members'."
                    )
            if limited_members:
                members = deepcopy(val)
                for keys in allowed_members:
                    try:
                        reduce(lambda v, k: v.pop(k), keys, members)
                    except KeyError:
                        pass
                if members:
                    raise ValueError(
                        f"Exception '{key}' in 'exceptions' dictionary has "
                        "more fields than are allowed by 'required_members' "
                        "and 'extension_members'."
                    )
        return exc_dict


class LimitsConfig(DemPolyBaseConfig):
    """Model for resource limits.

    Args:
        max_rank: Largest rank accepted on the command line.
        max_points: Largest point set an enumeration may produce.
        max_weight_sum: Largest ``m_1 + .. + m_n`` accepted for a weight.
        max_box_volume: Largest box the brute-force scan may visit.

    Attributes:
        max_rank: Largest rank accepted on the command line.
        max_points: Largest point set an enumeration may produce.
        max_weight_sum: Largest ``m_1 + .. + m_n`` accepted for a weight.
        max_box_volume: Largest box the brute-force scan may visit.

    Raises:
        pydantic.ValidationError: The class was instantianted with an illegal
            data type or a non-positive limit.

    Example:
        >>> LimitsConfig(max_rank=6)
        LimitsConfig(max_rank=6, max_points=1000000, max_weight_sum=12, max_bo\
x_volume=1000000)
    """
    max_rank: int = 8
    max_points: int = 10 ** 6
    max_weight_sum: int = 12
    max_box_volume: int = 10 ** 6

    _validate_limits = validator(
        'max_rank', 'max_points', 'max_weight_sum', 'max_box_volume',
        allow_reuse=True,
    )(_validate_positive)


class JobsConfig(DemPolyBaseConfig):
    """Model for configuring the worker pool used by enumerations and sweeps.

    Args:
        workers: Number of worker processes; ``1`` runs everything in the
            calling process, ``0`` starts one worker per CPU.
        chunksize: Number of tasks handed to a worker at once.

    Attributes:
        workers: Number of worker processes.
        chunksize: Number of tasks handed to a worker at once.

    Raises:
        pydantic.ValidationError: The class was instantianted with an illegal
            data type.

    Example:
        >>> JobsConfig(workers=4)
        JobsConfig(workers=4, chunksize=1)
    """
    workers: int = 1
    chunksize: int = 1

    _validate_chunksize = validator(
        'chunksize', allow_reuse=True,
    )(_validate_positive)

    @validator('workers', allow_reuse=True)
    def validate_workers(cls, v):  # pylint: disable=E0213
        """Allow ``0`` for one worker per CPU."""
        if v < 0:
            raise ValueError("number of workers must not be negative")
        return v


class OutputConfig(DemPolyBaseConfig):
    """Model for report output defaults.

    Args:
        format: Default report format.
        indent: JSON indentation; ``None`` writes a single line.

    Attributes:
        format: Default report format.
        indent: JSON indentation.

    Example:
        >>> OutputConfig()
        OutputConfig(format=<OutputFormatEnum.json: 'json'>, indent=2)
    """
    format: OutputFormatEnum = OutputFormatEnum.json
    indent: Optional[int] = 2


class SweepConfig(DemPolyBaseConfig):
    """Model for sweep defaults.

    Args:
        families: Lie type families to sweep.
        ranks: Ranks to sweep; ranks outside the domain of a family are
            skipped.
        max_weight_sum: Largest ``m_1 + .. + m_n`` per cell.
        checks: Checks to run per cell.
        kmax: Largest dilation factor for the normality check.

    Attributes:
        families: Lie type families to sweep.
        ranks: Ranks to sweep.
        max_weight_sum: Largest ``m_1 + .. + m_n`` per cell.
        checks: Checks to run per cell.
        kmax: Largest dilation factor for the normality check.

    Example:
        >>> SweepConfig().checks
        [<SweepCheckEnum.dim: 'dim'>, <SweepCheckEnum.weight: 'weight'>]
    """
    families: List[str] = ["A", "C"]
    ranks: List[int] = [2, 3, 4]
    max_weight_sum: int = 2
    checks: List[SweepCheckEnum] = [SweepCheckEnum.dim, SweepCheckEnum.weight]
    kmax: int = 2

    @validator('families', each_item=True, allow_reuse=True)
    def validate_families(cls, v):  # pylint: disable=E0213
        """Validate that every family is one of ``A``, ``B``, ``C``, ``D``."""
        if v.upper() not in ("A", "B", "C", "D"):
            raise ValueError(f"unknown Lie type family '{v}'")
        return v.upper()


class LogFormatterConfig(DemPolyBaseConfig):
    """Model for formatter for LogConfig.

    Args:
        class: Name of logging formatter class.
        style: Determines how the format string will be merged with its data.
        format: Format string any log messages.

    Attributes:
        class: Name of logging formatter class.
        style: Determines how the format string will be merged with its data.
        format: Format string any log messages.

    Raises:
        pydantic.ValidationError: The class was instantianted with an illegal
            data type.

    Example:
        >>> LogFormatterConfig(style="{")
        LogFormatterConfig(class_formatter='logging.Formatter', style='{', for\
mat='[{asctime}: {levelname:<8}] {message} [{name}]')
    """
    class_formatter: str = Field(
        "logging.Formatter",
        alias="class",
    )
    style: str = "{"
    format: str = "[{asctime}: {levelname:<8}] {message} [{name}]"


class LogHandlerConfig(DemPolyBaseConfig):
    """Model for passing logging handler parameters.

    Args:
        class: Name of logging handler class.
        level: Numeric value of logging level.
        formatter: Name of logging formatter.
        stream: Device to which log is streamed.

    Attributes:
        class: Name of logging handler class.
        level: Numeric value of logging level.
        formatter: Name of logging formatter.
        stream: Device to which log is streamed.

    Raises:
        pydantic.ValidationError: The class was instantianted with an illegal
            data type.

    Example:
        >>> LogHandlerConfig(level=30)
        LogHandlerConfig(class_handler='logging.StreamHandler', level=30, form\
atter='standard', stream='ext://sys.stderr')
    """
    class_handler: str = Field(
        "logging.StreamHandler",
        alias="class",
    )
    level: int = 20
    formatter: str = "standard"
    stream: str = "ext://sys.stderr"

    _validate_level = validator('level', allow_reuse=True)(
        _validate_log_level_choices
    )


class LogRootConfig(DemPolyBaseConfig):
    """Model for root log configuration.

    Args:
        level: Numeric value of logging level.
        handlers: List of logging handlers by name.

    Attributes:
        level: Numeric value of logging level.
        handlers: List of logging handlers by name.

    Example:
        >>> LogRootConfig(level=20)
        LogRootConfig(level=20, handlers=['console'])
    """
    level: int = 10
    handlers: Optional[List[str]] = ["console"]

    _validate_level = validator('level', allow_reuse=True)(
        _validate_log_level_choices
    )


class LogConfig(DemPolyBaseConfig):
    """Model for passing parameters for configuring logging.

    The model follows the schema of :py:func:`logging.config.dictConfig`.

    Args:
        version: Schema version.
        disable_existing_loggers: Whether any existing non-root loggers are to
            be disabled.
        formatters: Logging formatters by name.
        handlers: Logging handlers by name.
        root: Configuration of the root logger.

    Attributes:
        version: Represents current schema version.
        disable_existing_loggers: Whether any existing non-root loggers are to
            be disabled.
        formatters: Logging formatters by name.
        handlers: Logging handlers by name.
        root: Configuration of the root logger.

    Raises:
        pydantic.ValidationError: The class was instantianted with an illegal
            data type.
    """
    version: int = 1
    disable_existing_loggers: bool = False
    formatters: Optional[Dict[str, LogFormatterConfig]] = {
        "standard": LogFormatterConfig(),
    }
    handlers: Optional[Dict[str, LogHandlerConfig]] = {
        "console": LogHandlerConfig(),
    }
    root: Optional[LogRootConfig] = LogRootConfig()


class Config(DemPolyBaseConfig):
    """Model for all configuration parameters.

    Args:
        exceptions: Exception handling parameters.
        limits: Resource limits.
        jobs: Worker pool parameters.
        output: Report output defaults.
        sweep: Sweep defaults.
        log: Logger config parameters.

    Attributes:
        exceptions: Exception handling parameters.
        limits: Resource limits.
        jobs: Worker pool parameters.
        output: Report output defaults.
        sweep: Sweep defaults.
        log: Logger config parameters.

    Raises:
        pydantic.ValidationError: The class was instantianted with an illegal
            data type.

    Example:
        >>> Config().limits.max_rank
        8
    """
    exceptions: ExceptionConfig = ExceptionConfig()
    limits: LimitsConfig = LimitsConfig()
    jobs: JobsConfig = JobsConfig()
    output: OutputConfig = OutputConfig()
    sweep: SweepConfig = SweepConfig()
    log: LogConfig = LogConfig()

    class Config:
        """Configuration for Pydantic model class."""
        extra = 'allow'
