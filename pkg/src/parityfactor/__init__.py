"""Parity factors of graphs and eigenvalue conditions that guarantee them."""

from .constructions import *  # noqa: F401,F403
from .errors import *  # noqa: F401,F403
from .factor import *  # noqa: F401,F403
from .graph import *  # noqa: F401,F403
from .matching import max_matching  # noqa: F401
from .spectral import *  # noqa: F401,F403
from .theorem import *  # noqa: F401,F403

__version__ = "0.1.0"
