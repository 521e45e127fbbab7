"""
Pytest configuration for rivercross tests.

Provides the worked n = 3 solutions and cached state graphs shared by the
unit, functional and integration suites.
"""

from pathlib import Path as FilePath

import pytest

from rivercross.graph import StateGraph, build_graph
from rivercross.model import Flavor, HwState, McState
from rivercross.paths import Path, path_from_states

DATA_DIR = FilePath(__file__).parent / "data" / "functional" / "rivercross"

WORKED_MC_STATES = (
    "[(3,3)|(0,0):L]",
    "[(1,3)|(2,0):R]",
    "[(2,3)|(1,0):L]",
    "[(0,3)|(3,0):R]",
    "[(1,3)|(2,0):L]",
    "[(1,1)|(2,2):R]",
    "[(2,2)|(1,1):L]",
    "[(2,0)|(1,3):R]",
    "[(3,0)|(0,3):L]",
    "[(1,0)|(2,3):R]",
    "[(2,0)|(1,3):L]",
    "[(0,0)|(3,3):R]",
)

WORKED_HW_STATES = (
    "[w1 w2 w3 h1 h2 h3 | : L]",
    "[w3 h1 h2 h3 | w1 w2 : R]",
    "[w2 w3 h1 h2 h3 | w1 : L]",
    "[h1 h2 h3 | w1 w2 w3 : R]",
    "[w1 h1 h2 h3 | w2 w3 : L]",
    "[w1 h1 | w2 w3 h2 h3 : R]",
    "[w1 w3 h1 h3 | w2 h2 : L]",
    "[w1 w3 | w2 h1 h2 h3 : R]",
    "[w1 w2 w3 | h1 h2 h3 : L]",
    "[w2 | w1 w3 h1 h2 h3 : R]",
    "[w1 w2 | w3 h1 h2 h3 : L]",
    "[ | w1 w2 w3 h1 h2 h3 : R]",
)

# Relabelling applied before each trip of the worked lift
E, PI, PI_INV = "[1,2,3]", "[3,1,2]", "[2,3,1]"
WORKED_PERMUTATIONS = (E, PI, PI, E, PI_INV, PI, PI, PI_INV, E, PI, PI)


@pytest.fixture(scope="session")
def data_dir() -> FilePath:
    """Directory of tracked test data files."""
    return DATA_DIR


@pytest.fixture(scope="session")
def worked_mc_solution() -> Path:
    """The worked 11-trip MC solution for n = 3."""
    return path_from_states([McState.parse(s) for s in WORKED_MC_STATES], 2)


@pytest.fixture(scope="session")
def worked_hw_solution() -> Path:
    """The HW solution lifted from the worked MC solution."""
    states = [HwState.parse(s, 3) for s in WORKED_HW_STATES]
    return path_from_states(states, 2)


@pytest.fixture(scope="session")
def mc3_graph() -> StateGraph:
    """MC state graph for n = 3, b = 2."""
    return build_graph(3, 2, Flavor.MC)


@pytest.fixture(scope="session")
def hw3_graph() -> StateGraph:
    """HW state graph for n = 3, b = 2."""
    return build_graph(3, 2, Flavor.HW)


@pytest.fixture(scope="session")
def mc42_graph() -> StateGraph:
    """MC state graph for the infeasible instance n = 4, b = 2."""
    return build_graph(4, 2, Flavor.MC)
