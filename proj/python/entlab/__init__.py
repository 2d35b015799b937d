"""Python surface of the entlab core library."""

from entlab._core import *  # noqa: F401,F403
from entlab._core import __doc__  # noqa: F401
