"""Unit test for factories.pool.py"""

from multiprocessing.pool import Pool

from dempoly.factories.pool import create_worker_pool
from dempoly.models.config import JobsConfig


def _square(x):
    return x * x


def test_create_worker_pool_serial():
    """Test that a single worker runs serially."""
    assert create_worker_pool(JobsConfig()) is None


def test_create_worker_pool_override_serial():
    """Test that the worker count argument overrides the configuration."""
    assert create_worker_pool(JobsConfig(workers=4), workers=1) is None


def test_create_worker_pool():
    """Test that a pool is created and works."""
    pool = create_worker_pool(JobsConfig(), workers=2)
    try:
        assert isinstance(pool, Pool)
        assert pool.map(_square, [1, 2, 3]) == [1, 4, 9]
    finally:
        pool.terminate()
        pool.join()


def test_create_worker_pool_all_cpus(monkeypatch):
    """Test that zero workers use one worker per CPU."""
    monkeypatch.setattr('dempoly.factories.pool.cpu_count', lambda: 1)
    assert create_worker_pool(JobsConfig(workers=0)) is None
