"""
Solution search, counting and projection.

A solution is a simple path from the initial state (everyone on the left,
boat on the left) to the final state (everyone on the right, boat on the
right). Optimal solutions are counted on the shortest-path DAG cut out by
the BFS layers from both ends, and listed by a traversal of that DAG.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any, Dict, Iterable, Iterator, List, Optional, Tuple

import networkx as nx  # type: ignore[import-untyped]

from rivercross.config import DEFAULT_BUDGETS, Budgets, RivercrossError
from rivercross.graph import StateGraph, reachable_component
from rivercross.model import Flavor, HwState, Move, State
from rivercross.paths import InvalidPathError, Path, validate_path
from rivercross.symmetry import project, project_move

logger = logging.getLogger(__name__)


class InfeasibleInstanceError(RivercrossError):
    """Raised when the final state is unreachable.

    Attributes:
        component_size: Number of states reachable from the initial state.
    """

    def __init__(self, message: str, component_size: int) -> None:
        super().__init__(message)
        self.component_size = component_size


@dataclass(frozen=True)
class ShortestSolutions:
    """Optimal solutions of one instance.

    Attributes:
        n: Instance size.
        b: Boat capacity.
        flavor: HW or MC.
        length: Number of trips in an optimal solution.
        count: Number of optimal solutions.
        solutions: The solutions in canonical order; empty when only the
            count was requested.
    """

    n: int
    b: int
    flavor: Flavor
    length: int
    count: int
    solutions: Tuple[Path, ...] = ()


@dataclass(frozen=True)
class _Layers:
    length: int
    forward: Dict[Any, int]
    backward: Dict[Any, int]

    def on_optimal_path(self, state: Any) -> bool:
        return (
            state in self.forward
            and state in self.backward
            and self.forward[state] + self.backward[state] == self.length
        )

    def is_optimal_edge(self, source: Any, target: Any) -> bool:
        return (
            self.on_optimal_path(source)
            and self.on_optimal_path(target)
            and self.forward[target] == self.forward[source] + 1
        )


def _layers(graph: StateGraph) -> _Layers:
    forward = graph.distances_from(graph.initial)
    if graph.final not in forward:
        size = len(forward)
        raise InfeasibleInstanceError(
            f"{graph.label()}: final state unreachable; component={size}",
            component_size=size,
        )
    # every transition is reversible, so distances to the final state are
    # BFS distances from it
    backward = graph.distances_from(graph.final)
    return _Layers(forward[graph.final], forward, backward)


def optimal_subgraph(graph: StateGraph) -> nx.DiGraph:
    """Union of all optimal solutions as a layered DAG.

    Nodes carry their BFS ``layer``; edges carry their ``move``.

    Raises:
        InfeasibleInstanceError: If the instance has no solution.
    """
    layers = _layers(graph)
    dag = nx.DiGraph()
    for state in graph.states:
        if layers.on_optimal_path(state):
            dag.add_node(state, layer=layers.forward[state])
    for source, move, target in graph.edges():
        if layers.is_optimal_edge(source, target):
            dag.add_edge(source, target, move=move)
    return dag


def count_optimal(dag: nx.DiGraph, source: Any, target: Any) -> int:
    """Number of source-target paths in a DAG, by dynamic programming."""
    counts: Dict[Any, int] = {source: 1}
    for node in nx.topological_sort(dag):
        here = counts.get(node, 0)
        if not here:
            continue
        for successor in dag.successors(node):
            counts[successor] = counts.get(successor, 0) + here
    return counts.get(target, 0)


def _dag_paths(dag: nx.DiGraph, source: Any, target: Any) -> Iterator[Path]:
    # depth-first over the DAG, successors in canonical order
    stack: List[Tuple[List[Any], List[Move]]] = [([source], [])]
    while stack:
        states, moves = stack.pop()
        last = states[-1]
        if last == target:
            yield Path(tuple(states), tuple(moves))
            continue
        branches = sorted(dag.successors(last))
        for successor in reversed(branches):
            move = dag.edges[last, successor]["move"]
            stack.append((states + [successor], moves + [move]))


def shortest_solutions(
    graph: StateGraph,
    budgets: Budgets = DEFAULT_BUDGETS,
    materialize: bool = True,
) -> ShortestSolutions:
    """Length, count and list of the optimal solutions.

    Args:
        graph: Full state graph of the instance.
        budgets: ``max_paths`` caps the listed solutions.
        materialize: If False only the length and count are computed.

    Returns:
        ShortestSolutions in canonical order.

    Raises:
        InfeasibleInstanceError: If the final state is unreachable.
        BudgetExceededError: If listing would exceed ``max_paths``.
    """
    dag = optimal_subgraph(graph)
    length = int(dag.nodes[graph.final]["layer"])
    count = count_optimal(dag, graph.initial, graph.final)
    logger.info(f"{graph.label()}: optimal length {length}, count {count}")
    solutions: Tuple[Path, ...] = ()
    if materialize:
        budgets.check_paths(count)
        solutions = tuple(_dag_paths(dag, graph.initial, graph.final))
    return ShortestSolutions(
        graph.n, graph.b, graph.flavor, length, count, solutions
    )


def _simple_paths_from(
    graph: StateGraph,
    prefix: Path,
    max_len: int,
    to_final: Dict[Any, int],
) -> Iterator[Path]:
    final = graph.final
    stack: List[Tuple[List[Any], List[Move]]] = [
        (list(prefix.states), list(prefix.moves))
    ]
    while stack:
        states, moves = stack.pop()
        last = states[-1]
        if last == final:
            yield Path(tuple(states), tuple(moves))
            continue
        branches = []
        for move, target in graph.successors(last):
            if target in states or target not in to_final:
                continue
            if len(moves) + 1 + to_final[target] > max_len:
                continue
            branches.append((move, target))
        for move, target in reversed(branches):
            stack.append((states + [target], moves + [move]))


def enumerate_solutions(
    graph: StateGraph,
    max_len: Optional[int] = None,
    budgets: Budgets = DEFAULT_BUDGETS,
    jobs: int = 1,
) -> Iterator[Path]:
    """All simple-path solutions up to ``max_len`` trips.

    The search is partitioned by first move; with ``jobs > 1`` partitions
    run on a thread pool and are merged in first-move order, so the output
    order does not depend on ``jobs``.

    Args:
        graph: Full state graph of the instance.
        max_len: Longest solution to emit; None means no length cap
            (simple paths are finite).
        budgets: ``max_paths`` caps the number of emitted solutions.
        jobs: Worker threads.

    Yields:
        Solutions in canonical depth-first order. An infeasible instance
        yields nothing.

    Raises:
        BudgetExceededError: If more than ``max_paths`` solutions exist.
    """
    to_final = graph.distances_from(graph.final)
    if graph.initial not in to_final:
        return
    cap = len(graph) if max_len is None else max_len
    heads = [
        Path((graph.initial, target), (move,))
        for move, target in graph.successors(graph.initial)
        if target in to_final and 1 + to_final[target] <= cap
    ]

    def partition(head: Path) -> List[Path]:
        found = []
        for solution in _simple_paths_from(graph, head, cap, to_final):
            found.append(solution)
            budgets.check_paths(len(found))
        return found

    emitted = 0
    batches: Iterable[List[Path]]
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            batches = list(pool.map(partition, heads))
    else:
        batches = map(partition, heads)
    for batch in batches:
        for solution in batch:
            emitted += 1
            budgets.check_paths(emitted)
            yield solution


def project_solution(solution: Path) -> Path:
    """Image of an HW path under the quotient map.

    Each state becomes its head-count MC state and each move its
    ``(wives, husbands)`` count move.
    """
    if not all(isinstance(s, HwState) for s in solution.states):
        raise InvalidPathError("Only HW paths can be projected")
    return Path(
        tuple(project(s) for s in solution.states),
        tuple(project_move(f) for f in solution.moves),
    )


def check_solution(solution: Path, b: int) -> Path:
    """Validate a solution's endpoints and every step.

    Raises:
        InvalidPathError: If the path is broken or is not a solution.
    """
    validate_path(solution, b)
    if not solution.is_solution():
        raise InvalidPathError(
            "Path does not run from the initial to the final state"
        )
    if not solution.is_simple():
        raise InvalidPathError("Solution revisits a state")
    return solution


def infeasibility_certificate(graph: StateGraph) -> Tuple[State, ...]:
    """The closed component of the initial state, when it misses the goal.

    Raises:
        ValueError: If the instance is in fact feasible.
    """
    component = reachable_component(graph)
    if graph.final in component:
        raise ValueError(f"{graph.label()} is feasible")
    return component


__all__ = [
    "InfeasibleInstanceError",
    "ShortestSolutions",
    "check_solution",
    "count_optimal",
    "enumerate_solutions",
    "infeasibility_certificate",
    "optimal_subgraph",
    "project_solution",
    "shortest_solutions",
]
