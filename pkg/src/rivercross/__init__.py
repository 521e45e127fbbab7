"""
rivercross: jealous husbands and missionaries and cannibals, exactly
"""

# Import core functionality
from .config import (  # noqa: F401
    Budgets,
    BudgetExceededError,
    RivercrossError,
    RunConfig,
)
from .graph import StateGraph, build_graph, is_feasible
from .lift import enumerate_lifts, lift_path, lift_solution
from .logger import LogLevel, RunLogger  # noqa: F401
from .model import (
    Flavor,
    HwMove,
    HwState,
    McMove,
    McState,
    Side,
    capacity,
    parse_state,
)
from .paths import InvalidPathError, Path
from .solver import (
    InfeasibleInstanceError,
    enumerate_solutions,
    shortest_solutions,
)
from .status import RunStatus  # noqa: F401
from .symmetry import Permutation, orbit, project, section

__version__ = "0.1.0"
__author__ = "Rivercross Developers"
__email__ = "rivercross@users.noreply.github.com"

# Package metadata
__title__ = "rivercross"
__description__ = (
    "Exact solving, symmetry quotients and category checks for "
    "river-crossing puzzles"
)

__url__ = "https://github.com/rivercross/rivercross"
__license__ = "MIT"

# Version tuple for programmatic access (only numeric parts)
VERSION = tuple(int(part) for part in __version__.split(".") if part.isdigit())

__all__ = [
    "__version__",
    "__author__",
    "__email__",
    "VERSION",
    # Configuration and errors
    "BudgetExceededError",
    "Budgets",
    "InfeasibleInstanceError",
    "InvalidPathError",
    "RivercrossError",
    # Model
    "Flavor",
    "HwMove",
    "HwState",
    "McMove",
    "McState",
    "Path",
    "Side",
    "StateGraph",
    "build_graph",
    "capacity",
    "parse_state",
    # Solving, symmetry and lifting
    "Permutation",
    "enumerate_lifts",
    "enumerate_solutions",
    "is_feasible",
    "lift_path",
    "lift_solution",
    "orbit",
    "project",
    "section",
    "shortest_solutions",
]
