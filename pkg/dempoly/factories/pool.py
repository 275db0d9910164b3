"""Factory for creating worker pools for enumerations and sweeps."""

from inspect import stack
import logging
from multiprocessing import cpu_count
from multiprocessing.pool import Pool
from typing import Optional

from dempoly.models.config import JobsConfig

# Get logger instance
logger = logging.getLogger(__name__)


def create_worker_pool(
    conf: JobsConfig,
    workers: Optional[int] = None,
) -> Optional[Pool]:
    """Create a process pool, or nothing for serial execution.

    Args:
        conf: Worker pool configuration.
        workers: Number of workers overriding ``conf.workers``, e.g., from
            ``--jobs``; ``0`` uses one worker per CPU.

    Returns:
        Process pool, or ``None`` if a single worker is requested. The caller
        owns the pool and has to close it.
    """
    count = conf.workers if workers is None else workers
    if count == 0:
        count = cpu_count()
    if count <= 1:
        logger.debug("Running serially.")
        return None
    pool = Pool(processes=count)
    calling_module = ':'.join([stack()[1].filename, stack()[1].function])
    logger.debug(
        f"Worker pool with {count} processes created from "
        f"'{calling_module}'."
    )
    return pool
