"""Command line entry point."""

import argparse
import logging
import sys
from typing import (Any, Dict, List, Optional, TextIO)

from dempoly.dempoly import DemPoly
from dempoly.models.config import (
    OutputFormatEnum,
    SweepCheckEnum,
)
from dempoly.models.run_config import CommandEnum
from dempoly.version import __version__

# Get logger instance
logger = logging.getLogger(__name__)

# argument destinations renamed for the run configuration
RENAMED = {
    "type": "family",
    "word": "variant",
    "no_coeff": "include_coefficients",
}


def build_parser() -> argparse.ArgumentParser:
    """Parser for the ``dempoly`` command.

    Optional arguments that are not given do not appear in the namespace,
    so that defaults are taken from the run and application configuration.
    """
    parser = argparse.ArgumentParser(
        prog="dempoly",
        description=(
            "Lattice points of Demazure module polytopes in types A, B, C "
            "and D, and their verification against Demazure characters."
        ),
        argument_default=argparse.SUPPRESS,
    )
    parser.add_argument(
        "command",
        choices=[command.value for command in CommandEnum],
        metavar="COMMAND",
        help=(
            "one of: "
            + ", ".join(command.value for command in CommandEnum)
        ),
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}",
    )
    parser.add_argument(
        "--config", metavar="PATH", action="append",
        help="configuration file in YAML format; repeat to overlay files",
    )

    lie = parser.add_argument_group("Lie type and word")
    lie.add_argument("--type", metavar="{A,B,C,D}", help="Lie type family")
    lie.add_argument("--rank", type=int, metavar="N", help="rank")
    lie.add_argument("--start", type=int, metavar="I", help="first letter")
    lie.add_argument(
        "--end", type=int, metavar="K", help="last node of a type A hook",
    )
    lie.add_argument(
        "--word", choices=["hatted", "full"], help="type D word variant",
    )
    lie.add_argument(
        "--include-redundant", action="store_true",
        help="keep dominated inequalities",
    )
    lie.add_argument(
        "--no-coeff", action="store_false",
        help="drop paths with coefficients",
    )

    inputs = parser.add_argument_group("inputs")
    inputs.add_argument(
        "--weight", metavar="m1,...,mn", help="highest weight",
    )
    inputs.add_argument(
        "--mu", metavar="m1,...,mn", help="second weight for 'minkowski'",
    )
    inputs.add_argument(
        "--point", metavar="s1,...,sN",
        help="multi-exponent in the coordinate order of 'poset'",
    )
    inputs.add_argument(
        "--kmax", type=int, metavar="K",
        help="largest dilation factor for 'normality'",
    )
    inputs.add_argument(
        "--substart", type=int, metavar="K",
        help="first letter of the suffix word for 'face-check'",
    )
    inputs.add_argument(
        "--box", metavar="b1,...,bN",
        help="inclusive upper corner of the ideal scan box",
    )
    inputs.add_argument(
        "--box-pad", type=int, metavar="P",
        help="padding of the default ideal scan box",
    )
    inputs.add_argument(
        "--fixture", metavar="ID", help="run a single fixture",
    )

    sweeps = parser.add_argument_group("sweep ranges")
    sweeps.add_argument(
        "--families", metavar="A,C", help="families to sweep",
    )
    sweeps.add_argument("--ranks", metavar="2,3,4", help="ranks to sweep")
    sweeps.add_argument(
        "--max-weight-sum", type=int, metavar="S",
        help="largest coordinate sum of the swept weights",
    )
    sweeps.add_argument(
        "--checks", metavar="dim,weight",
        help=(
            "checks per cell: "
            + ", ".join(check.value for check in SweepCheckEnum)
        ),
    )

    output = parser.add_argument_group("output and resources")
    output.add_argument(
        "--format", choices=[fmt.value for fmt in OutputFormatEnum],
        help="report format",
    )
    output.add_argument("--out", metavar="PATH", help="report file")
    output.add_argument(
        "--jobs", type=int, metavar="K",
        help="worker processes; 0 uses one per CPU",
    )
    output.add_argument(
        "--max-points", type=int, metavar="M",
        help="abort enumerations with more points",
    )
    return parser


def to_params(args: argparse.Namespace) -> Dict[str, Any]:
    """Map parsed arguments to run configuration parameters."""
    params: Dict[str, Any] = {}
    for key, value in vars(args).items():
        if key == "config":
            continue
        params[RENAMED.get(key, key)] = value
    return params


def main(
    argv: Optional[List[str]] = None,
    stream: Optional[TextIO] = None,
    error_stream: Optional[TextIO] = None,
) -> int:
    """Run the ``dempoly`` command.

    Args:
        argv: Arguments without the program name; defaults to
            ``sys.argv[1:]``.
        stream: Where to write the report; defaults to ``sys.stdout``.
        error_stream: Where to write problem documents; defaults to
            ``sys.stderr``.

    Returns:
        Exit code: ``0`` on success, ``1`` if a check failed, ``2`` on
        invalid input, including unknown commands and flags.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(sys.argv[1:] if argv is None else argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    config_files = getattr(args, "config", None)
    if config_files is not None and len(config_files) == 1:
        config_files = config_files[0]
    try:
        app = DemPoly(config_file=config_files)
    except (OSError, ValueError) as exc:
        (sys.stderr if error_stream is None else error_stream).write(
            f"{parser.prog}: error: {exc}\n"
        )
        return 2
    return app.run(to_params(args), stream=stream, error_stream=error_stream)


if __name__ == "__main__":
    sys.exit(main())
