"""Two-user downlink multiple access over reconfigurable mmWave antennas."""

from ._core import *  # noqa: F401,F403
from ._core import RamaError

__all__ = [name for name in dir() if not name.startswith("_")]
