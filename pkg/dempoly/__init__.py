"""dempoly root package."""

from dempoly.dempoly import DemPoly  # noqa: F401
from dempoly.version import __version__  # noqa: F401
