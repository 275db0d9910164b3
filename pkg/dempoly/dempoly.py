"""Class for setting up dempoly and running its commands."""

import logging
from pathlib import Path
import sys
from typing import (Any, Dict, Optional, Sequence, TextIO, Tuple, Union)

from dempoly.cli.commands import (
    COMMANDS,
    CommandContext,
)
from dempoly.cli.reports import Report
from dempoly.config.config_parser import ConfigParser
from dempoly.errors.exceptions import handle_problem
from dempoly.factories.pool import create_worker_pool
from dempoly.models.run_config import RunConfig

# Get logger instance
logger = logging.getLogger(__name__)

ConfigFiles = Union[str, Path, Sequence[Union[str, Path]]]


class DemPoly:
    def __init__(
        self,
        config_file: Optional[ConfigFiles] = None,
        format_logs: bool = True,
    ) -> None:
        """Instantiate dempoly.

        Args:
            config_file: Path to application configuration file in YAML
                format, or several paths merged in order. Cf.
                :py:class:`dempoly.models.config.Config` for the required
                file structure.
            format_logs: Whether log formatting should be configured from
                the configuration.

        Attributes:
            config_file: Path(s) to application configuration file(s).
            conf: App configuration. Instance of
                :py:class:`dempoly.models.config.Config`.
        """
        self.config_file = config_file
        self.conf = ConfigParser(
            config_file=config_file,
            format_logs=format_logs,
        ).config
        if format_logs:
            logger.info("Log formatting configured.")
        if self.config_file is not None:
            logger.info(f"Configuration file '{self.config_file}' parsed.")
        else:
            logger.info("Default app configuration used.")

    def dispatch(
        self,
        run_config: RunConfig,
        stream: Optional[TextIO] = None,
    ) -> Tuple[int, Optional[Report]]:
        """Run a validated command.

        Errors are converted into problem documents written to `stream` and
        the exit code they are mapped to.

        Args:
            run_config: Validated run parameters.
            stream: Where to write problem documents; defaults to
                ``sys.stderr``.

        Returns:
            Exit code and report; the report is ``None`` if the command
            failed with an error.
        """
        pool = create_worker_pool(self.conf.jobs, run_config.jobs)
        context = CommandContext(config=self.conf, pool=pool)
        try:
            report = COMMANDS[run_config.command](run_config, context)
        except Exception as exc:
            return handle_problem(exc, self.conf.exceptions, stream), None
        finally:
            if pool is not None:
                pool.terminate()
                pool.join()
        return report.code, report

    def run(
        self,
        params: Dict[str, Any],
        stream: Optional[TextIO] = None,
        error_stream: Optional[TextIO] = None,
    ) -> int:
        """Validate parameters, run the command and write its report.

        Args:
            params: Parameters of
                :py:class:`dempoly.models.run_config.RunConfig`.
            stream: Where to write the report unless ``out`` is given;
                defaults to ``sys.stdout``.
            error_stream: Where to write problem documents; defaults to
                ``sys.stderr``.

        Returns:
            Exit code.
        """
        try:
            run_config = RunConfig(**params)
        except Exception as exc:
            return handle_problem(exc, self.conf.exceptions, error_stream)
        code, report = self.dispatch(run_config, error_stream)
        if report is None:
            return code
        try:
            report.write(
                format=run_config.format or self.conf.output.format,
                indent=self.conf.output.indent,
                out=run_config.out,
                stream=sys.stdout if stream is None else stream,
            )
        except OSError as exc:
            return handle_problem(exc, self.conf.exceptions, error_stream)
        return code
