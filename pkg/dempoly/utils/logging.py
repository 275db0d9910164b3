"""Utility functions for logging."""

import logging
from functools import wraps
from typing import (Callable, Optional)

logger = logging.getLogger(__name__)


def log_command(
    _fn: Optional[Callable] = None,
    log_call: bool = True,
    log_result: bool = True,
    log_level: int = logging.INFO,
) -> Callable:
    """Decorator for logging command handlers and their results.

    The decorated handler is expected to take a run configuration as first
    argument and to return a report with a ``summary()`` method.

    Args:
        log_call: Whether or not the command and its parameters should be
            logged.
        log_result: Whether or not the result summary should be logged.
        log_level: Logging level, cf.
            https://docs.python.org/3/library/logging.html#logging-levels

    Returns:
        The decorated function.
    """

    def _decorator_log_command(fn):
        """Logging decorator. Used to facilitate optional decorator arguments.

        Args:
            fn: The function to be decorated.

        Returns:
            The report returned from the input function.
        """
        @wraps(fn)
        def _wrapper(run_config, *args, **kwargs):
            """Wrapper for logging decorator.

            Args:
                run_config: Run configuration passed through to `fn`.
                args: positional arguments passed through to `fn`.
                kwargs: keyword arguments passed through to `fn`.

            Returns:
                Wrapper function.
            """
            call = f"'{run_config.command.value}' for {run_config.describe()}"
            if log_call:
                logger.log(
                    level=log_level,
                    msg=f"Running command {call}",
                )

            report = fn(run_config, *args, **kwargs)
            if log_result:
                logger.log(
                    level=log_level,
                    msg=f"Result of command {call}: {report.summary()}",
                )
            return report

        return _wrapper

    if _fn is None:
        return _decorator_log_command
    else:
        return _decorator_log_command(_fn)
