"""Total preorders, TeamQueue combinators and iterated belief change."""

from ._core import *  # noqa: F401,F403
from ._core import Error, Frame, Tpo, Vocabulary, WorldSet  # noqa: F401

__all__ = [name for name in dir() if not name.startswith("_")]
