"""d-lucky labelings of graphs."""

from ._core import *  # noqa: F401,F403
from ._core import BudgetExceeded, ConstructionError, FormatError  # noqa: F401

__version__ = "0.1.0"
