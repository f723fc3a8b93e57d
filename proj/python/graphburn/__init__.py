"""Graph burning solvers with a C++ core."""

from ._graphburn import *  # noqa: F401,F403
from ._graphburn import __version__

__all__ = [name for name in dir() if not name.startswith("_")]
