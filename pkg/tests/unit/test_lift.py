"""Unit tests for lifting MC paths to HW paths and for fibers."""

import random

import pytest

from rivercross.config import Budgets, BudgetExceededError
from rivercross.graph import build_graph
from rivercross.lift import (
    LiftStrategy,
    canonical_load,
    enumerate_lifts,
    lift_path,
    lift_permutations_in_rotation_subgroup,
    lift_solution,
)
from rivercross.model import (
    Flavor,
    HwMove,
    HwState,
    McMove,
    McState,
    Side,
    capacity,
)
from rivercross.paths import InvalidPathError, Path, validate_path
from rivercross.solver import project_solution, shortest_solutions
from rivercross.symmetry import Permutation, orbit, section
from rivercross.taxonomy import TransitionCase

from tests.conftest import WORKED_PERMUTATIONS

WORKED_CASES = ["ii'", "i'", "ii'", "i'", "iv'", "vi'", "v'", "ii'", "i'",
                "ii'", "i'"]  # fmt: skip

WORKED_LAYER_SIZES = (1, 3, 3, 1, 3, 3, 3, 3, 1, 3, 3, 1)


def _random_walk(rng, graph, length):
    state = rng.choice(graph.states)
    states = [state]
    for _ in range(length):
        options = list(graph.successors(state))
        if not options:
            break
        _, state = rng.choice(options)
        states.append(state)
    moves = tuple(a.move_to(b) for a, b in zip(states, states[1:]))
    return Path(tuple(states), moves)


# Test lifting the worked MC solution
@pytest.mark.parametrize("strategy", list(LiftStrategy))
def test_lift_worked_solution(
    worked_mc_solution, worked_hw_solution, strategy
):
    """Both strategies give the worked HW solution."""
    trace = lift_solution(worked_mc_solution, 2, strategy)
    assert trace.path == worked_hw_solution
    assert trace.strategy is strategy
    validate_path(trace.path, 2)
    assert trace.path.is_solution()


# Test the relabelling sequence of the worked lift
def test_worked_permutations(worked_mc_solution):
    """Three relabellings appear and all are rotations."""
    trace = lift_solution(worked_mc_solution, 2)
    assert [str(p) for p in trace.permutations] == list(WORKED_PERMUTATIONS)
    assert {str(p) for p in trace.distinct_permutations} == {
        "[1,2,3]",
        "[3,1,2]",
        "[2,3,1]",
    }
    assert lift_permutations_in_rotation_subgroup(trace)


# Test the cases recorded by the lift
def test_worked_cases(worked_mc_solution):
    """One case label per trip."""
    trace = lift_path(worked_mc_solution)
    assert [str(c) for c in trace.cases] == WORKED_CASES


# Test canonical loads from the initial state
@pytest.mark.parametrize(
    "mc_move,case,expected",
    [
        (McMove(2, 0, Side.LEFT), TransitionCase.II, "{w2 w3 : L}"),
        (McMove(1, 0, Side.LEFT), TransitionCase.II, "{w3 : L}"),
        (McMove(1, 1, Side.LEFT), TransitionCase.IV, "{w3 h3 : L}"),
    ],
)
def test_canonical_load_initial(mc_move, case, expected):
    """The highest-numbered departing wives travel."""
    load = canonical_load(HwState.initial(3), mc_move, case)
    assert load == HwMove.parse(expected)


# Test canonical loads for husband-carrying cases
def test_canonical_load_cases():
    """Case v takes the departing couples' husbands, vi whole couples."""
    state = HwState.parse("[w1 w2 h1 h2 | w3 h3 : L]", 3)
    assert canonical_load(
        state, McMove(0, 2, Side.LEFT), TransitionCase.V
    ) == HwMove.parse("{h1 h2 : L}")
    assert canonical_load(
        state, McMove(1, 1, Side.LEFT), TransitionCase.VI
    ) == HwMove.parse("{w2 h2 : L}")
    assert canonical_load(
        HwState.parse("[w1 h1 h2 h3 | w2 w3 : L]", 3),
        McMove(0, 3, Side.LEFT),
        TransitionCase.III,
    ) == HwMove.parse("{h1 h2 h3 : L}")


# Test eager and lazy agree on every optimal solution
@pytest.mark.parametrize("n,b", [(2, 2), (3, 2), (4, 3), (5, 3), (6, 4)])
def test_strategies_agree(n, b):
    """Lifts are solutions lying over their MC solution."""
    result = shortest_solutions(build_graph(n, b, Flavor.MC))
    for solution in result.solutions:
        eager = lift_solution(solution, b, LiftStrategy.EAGER)
        lazy = lift_solution(solution, b, LiftStrategy.LAZY)
        assert eager.path == lazy.path
        assert eager.permutations == lazy.permutations
        validate_path(eager.path, b)
        assert eager.path.is_solution()
        assert project_solution(eager.path) == solution


# Test optimal solutions lift through rotations only
@pytest.mark.parametrize("n", [2, 3, 4, 5])
@pytest.mark.parametrize("strategy", list(LiftStrategy))
def test_optimal_lifts_use_rotations(n, strategy):
    """Every relabelling is a cyclic rotation at the minimal capacity."""
    b = capacity(n)
    result = shortest_solutions(build_graph(n, b, Flavor.MC))
    assert result.solutions
    for solution in result.solutions:
        trace = lift_solution(solution, b, strategy)
        assert lift_permutations_in_rotation_subgroup(trace), [
            str(pi) for pi in trace.permutations
        ]
        assert all(pi.is_rotation() for pi in trace.permutations)
        assert len(trace.permutations) == solution.length


# Test lifting random walks
@pytest.mark.parametrize("n,b", [(2, 2), (3, 2), (3, 3), (4, 3), (5, 4)])
def test_lift_random_walks(n, b):
    """Any valid MC path lifts, not only solutions."""
    rng = random.Random(n * 100 + b)
    graph = build_graph(n, b, Flavor.MC)
    for _ in range(100):
        walk = _random_walk(rng, graph, rng.randint(0, 14))
        for strategy in LiftStrategy:
            trace = lift_path(walk, b, strategy)
            validate_path(trace.path, b)
            assert project_solution(trace.path) == walk
            assert trace.path.source in orbit(section(walk.source))


# Test the identity path lifts to the identity
def test_lift_identity():
    """No trips, no relabellings."""
    trace = lift_path(Path.identity(McState.parse("[(1,1)|(2,2):R]")))
    assert trace.path == Path.identity(section(trace.path.source))
    assert trace.permutations == ()


# Test only MC paths lift
def test_lift_rejects_hw_path(worked_hw_solution):
    """HW paths are already lifted."""
    with pytest.raises(InvalidPathError):
        lift_path(worked_hw_solution)


# Test lift_solution needs a solution
def test_lift_solution_rejects_partial(worked_mc_solution):
    """A prefix is a path but not a solution."""
    with pytest.raises(InvalidPathError):
        lift_solution(worked_mc_solution.segment(0, 4))
    assert lift_path(worked_mc_solution.segment(0, 4)).path.length == 4


# Test lifting validates against the capacity
def test_lift_validates_capacity():
    """A three-cannibal trip is not allowed when b = 2."""
    mc = Path(
        (McState.initial(3), McState.parse("[(0,3)|(3,0):R]")),
        (McMove(3, 0, Side.LEFT),),
    )
    with pytest.raises(InvalidPathError):
        lift_path(mc, 2)
    assert lift_path(mc, 3).path.length == 1


# Test the fiber of the worked solution
def test_worked_fiber(worked_mc_solution, worked_hw_solution):
    """216 lifts in orbit-sized layers."""
    lattice = enumerate_lifts(worked_mc_solution, 2)
    assert lattice.count == 216
    assert lattice.layer_sizes == WORKED_LAYER_SIZES
    assert worked_hw_solution in lattice
    assert len(lattice.moves_at(1)) == 3


# Test the fiber lists exactly its counted paths
def test_fiber_paths(worked_mc_solution):
    """Every listed lift is a distinct solution over the MC solution."""
    lattice = enumerate_lifts(worked_mc_solution, 2)
    paths = list(lattice.paths())
    assert len(paths) == len(set(paths)) == 216
    for path in paths[:: 17]:
        validate_path(path, 2)
        assert project_solution(path) == worked_mc_solution
        assert path in lattice


# Test fibers partition the HW optima
def test_fibers_partition_hw_optima(mc3_graph):
    """The four MC fibers hold all 486 HW optima."""
    result = shortest_solutions(mc3_graph)
    counts = [enumerate_lifts(s, 2).count for s in result.solutions]
    assert sum(counts) == 486
    assert 216 in counts


# Test membership rejects foreign paths
def test_fiber_membership(worked_mc_solution, worked_hw_solution):
    """Prefixes and MC paths are not in the fiber."""
    lattice = enumerate_lifts(worked_mc_solution, 2)
    assert worked_hw_solution.segment(0, 5) not in lattice
    assert worked_mc_solution not in lattice
    assert "path" not in lattice


# Test starting anywhere in the source orbit
def test_fiber_from_source_orbit(worked_mc_solution):
    """Each start in the orbit carries the same number of lifts."""
    tail = worked_mc_solution.segment(1, 6)
    narrow = enumerate_lifts(tail, 2)
    wide = enumerate_lifts(tail, 2, from_source_orbit=True)
    assert wide.layer_sizes[0] == 3
    assert wide.count == 3 * narrow.count


# Test the fiber budget
def test_fiber_budget(worked_mc_solution):
    """216 lifts do not fit in a budget of 100."""
    with pytest.raises(BudgetExceededError):
        enumerate_lifts(worked_mc_solution, 2, budgets=Budgets(max_paths=100))


# Test rotation detection on a non-rotation lift
def test_rotation_subgroup_flag_false(worked_mc_solution):
    """A trace using a transposition is not inside the rotations."""
    trace = lift_solution(worked_mc_solution, 2)
    swapped = trace.__class__(
        trace.path,
        trace.permutations + (Permutation.parse("[2,1,3]"),),
        trace.cases,
    )
    assert not lift_permutations_in_rotation_subgroup(swapped)
