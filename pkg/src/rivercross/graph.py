"""
State-space graphs of the HW and MC problems.

Vertices are admissible states and edges are transitions, stored on a
``networkx.DiGraph`` with the move as the ``move`` edge attribute. Nodes and
edges are inserted in canonical state order, so every traversal of the
graph is deterministic.
"""

import logging
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Optional, Tuple

import networkx as nx  # type: ignore[import-untyped]

from rivercross.config import DEFAULT_BUDGETS, Budgets
from rivercross.model import (
    Flavor,
    McState,
    Move,
    Side,
    State,
    enumerate_states,
    final_state,
    initial_state,
    successors,
)
from rivercross.symmetry import project, project_move

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class StateGraph:
    """The full admissible state graph of one instance.

    Attributes:
        n: Instance size.
        b: Boat capacity.
        flavor: HW or MC.
        digraph: Directed graph; every edge carries its ``move``. Each
            edge's reverse is also present.
    """

    n: int
    b: int
    flavor: Flavor
    digraph: nx.DiGraph

    @property
    def initial(self) -> State:
        return initial_state(self.n, self.flavor)

    @property
    def final(self) -> State:
        return final_state(self.n, self.flavor)

    @property
    def states(self) -> Tuple[State, ...]:
        return tuple(self.digraph.nodes)

    def __len__(self) -> int:
        return int(self.digraph.number_of_nodes())

    def __contains__(self, state: object) -> bool:
        return state in self.digraph

    def edges(self) -> Iterator[Tuple[State, Move, State]]:
        """Iterate ``(source, move, target)`` in canonical order."""
        for source, target, data in self.digraph.edges(data=True):
            yield source, data["move"], target

    def successors(self, state: State) -> Iterator[Tuple[Move, State]]:
        """Outgoing ``(move, target)`` pairs of ``state``."""
        for target, data in self.digraph.adj[state].items():
            yield data["move"], target

    def move(self, source: State, target: State) -> Move:
        return self.digraph.edges[source, target]["move"]

    def distances_from(self, state: State) -> Dict[State, int]:
        """BFS distances from ``state`` to every reachable state."""
        return dict(nx.single_source_shortest_path_length(self.digraph, state))

    def label(self) -> str:
        return f"{self.flavor.value} n={self.n} b={self.b}"


def build_graph(
    n: int,
    b: int,
    flavor: Flavor,
    budgets: Budgets = DEFAULT_BUDGETS,
) -> StateGraph:
    """Build the full admissible state graph.

    Args:
        n: Instance size (at least 2).
        b: Boat capacity (at least 1).
        flavor: HW or MC.
        budgets: Enumeration budgets (``max_n`` applies).

    Returns:
        StateGraph whose edges are exactly the successor relation.

    Raises:
        ValueError: If n < 2 or b < 1.
        BudgetExceededError: If n exceeds the configured cap.
    """
    if b < 1:
        raise ValueError(f"Boat capacity must be at least 1, got {b}")
    states = enumerate_states(n, flavor, budgets)
    digraph = nx.DiGraph()
    digraph.add_nodes_from((s, {"boat": s.boat}) for s in states)
    for state in states:
        for move, target in successors(state, b):
            digraph.add_edge(state, target, move=move)
    logger.debug(
        f"Built {flavor.value} graph n={n} b={b}: "
        f"{digraph.number_of_nodes()} states, "
        f"{digraph.number_of_edges()} transitions"
    )
    return StateGraph(n, b, flavor, digraph)


def reachable_component(
    graph: StateGraph, source: Optional[State] = None
) -> Tuple[State, ...]:
    """States reachable from ``source`` (default: the initial state).

    Returns:
        The BFS closure including ``source``, in canonical order.
    """
    start = graph.initial if source is None else source
    reached = nx.descendants(graph.digraph, start) | {start}
    return tuple(sorted(reached))


def is_feasible(
    n: int,
    b: int,
    flavor: Flavor = Flavor.MC,
    budgets: Budgets = DEFAULT_BUDGETS,
) -> bool:
    """Return True if the final state is reachable from the initial one.

    The HW answer agrees with MC through the orbit correspondence, so MC is
    the default and the cheap choice.
    """
    graph = build_graph(n, b, flavor, budgets)
    return bool(nx.has_path(graph.digraph, graph.initial, graph.final))


def connected_components(graph: StateGraph) -> Tuple[Tuple[State, ...], ...]:
    """Weak components, largest first, ties by their least state."""
    components = [
        tuple(sorted(c))
        for c in nx.weakly_connected_components(graph.digraph)
    ]
    components.sort(key=lambda c: (-len(c), c[0].sort_key))
    return tuple(components)


def in_infeasible_regime(n: int, b: int) -> bool:
    """Return True for ``b = 2, n in {4, 5}`` or ``b = 3, n >= 6``."""
    return (b == 2 and n in (4, 5)) or (b == 3 and n >= 6)


def predicted_component(n: int, b: int) -> Tuple[McState, ...]:
    """Closed-form reachable MC component in the infeasible regimes.

    From the initial state only these are reachable: the initial state,
    ``((n-p, n-p), (p, p), loc)`` for ``p = 1..b-1`` on either side,
    ``((n-b, n-b), (b, b), R)``, ``((n-q, n), (q, 0), loc)`` for
    ``q = 1..n-1`` on either side, and ``((0, n), (n, 0), R)``. That is
    ``2(n + b) - 1`` states.

    Raises:
        ValueError: Outside ``b = 2, n in {4, 5}`` and ``b = 3, n >= 6``.
    """
    if not in_infeasible_regime(n, b):
        raise ValueError(
            f"No closed-form component for n={n}, b={b}: the instance is "
            f"outside the known infeasible regimes"
        )
    states: List[McState] = [McState.initial(n)]
    for side in (Side.LEFT, Side.RIGHT):
        for p in range(1, b):
            states.append(McState.from_left(n - p, n - p, side, n))
        for q in range(1, n):
            states.append(McState.from_left(n - q, n, side, n))
    states.append(McState.from_left(n - b, n - b, Side.RIGHT, n))
    states.append(McState.from_left(0, n, Side.RIGHT, n))
    return tuple(sorted(states))


def feasibility_frontier(
    n_values: Iterable[int],
    b_values: Iterable[int],
    budgets: Budgets = DEFAULT_BUDGETS,
) -> Dict[Tuple[int, int], bool]:
    """Feasibility of every (n, b) pair, decided on the MC graph."""
    b_list = list(b_values)
    table: Dict[Tuple[int, int], bool] = {}
    for n in n_values:
        for b in b_list:
            table[(n, b)] = is_feasible(n, b, Flavor.MC, budgets)
    return table


def least_feasible_capacity(
    n: int, b_max: int = 8, budgets: Budgets = DEFAULT_BUDGETS
) -> Optional[int]:
    """Smallest b in ``1..b_max`` making the instance feasible."""
    for b in range(1, b_max + 1):
        if is_feasible(n, b, Flavor.MC, budgets):
            return b
    return None


def quotient_graph(hw_graph: StateGraph) -> nx.DiGraph:
    """Orbit graph of an HW graph, labelled by MC states and moves.

    Each HW state is replaced by its projection and each move by the
    projected move; parallel edges collapse.
    """
    if hw_graph.flavor is not Flavor.HW:
        raise ValueError("quotient_graph needs an HW graph")
    quotient = nx.DiGraph()
    for state in sorted({project(s) for s in hw_graph.states}):
        quotient.add_node(state, boat=state.boat)
    for source, move, target in hw_graph.edges():
        quotient.add_edge(
            project(source), project(target), move=project_move(move)
        )
    return quotient


def quotient_matches(hw_graph: StateGraph, mc_graph: StateGraph) -> bool:
    """Check the HW orbit graph equals the MC graph as a labelled graph.

    Compares vertex sets, labelled edge sets, and runs a labelled
    isomorphism test with boat sides on vertices and moves on edges.
    """
    quotient = quotient_graph(hw_graph)
    target = mc_graph.digraph
    if set(quotient.nodes) != set(target.nodes):
        return False
    quotient_edges = {
        (u, d["move"], v) for u, v, d in quotient.edges(data=True)
    }
    if quotient_edges != set(mc_graph.edges()):
        return False
    return bool(
        nx.is_isomorphic(
            quotient,
            target,
            node_match=lambda a, b: a["boat"] is b["boat"],
            edge_match=lambda a, b: a["move"] == b["move"],
        )
    )


__all__ = [
    "StateGraph",
    "build_graph",
    "connected_components",
    "feasibility_frontier",
    "in_infeasible_regime",
    "is_feasible",
    "least_feasible_capacity",
    "predicted_component",
    "quotient_graph",
    "quotient_matches",
    "reachable_component",
]
