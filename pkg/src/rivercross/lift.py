"""
Lifting MC paths to HW paths.

Before each trip the constructed HW prefix is relabelled so that the wives
on the departure bank are ``w_1..w_x``, and the trip is then played with a
canonical load read off the MC move and its transition case: the
highest-numbered departing wives ``W_{x-c+1,x}`` together with the husbands
the case demands. The result projects back onto the MC path step for step.

Two strategies produce the same path. ``eager`` relabels the whole prefix
before every trip. ``lazy`` records each trip in the frame it was played in
and applies the accumulated relabellings once at the end.

The fiber of an MC path, every HW path projecting onto it, is built as a
layered graph whose layer j is the orbit over the j-th MC state.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, FrozenSet, Iterator, List, Optional, Tuple

import networkx as nx  # type: ignore[import-untyped]

from rivercross.config import DEFAULT_BUDGETS, Budgets, RivercrossError
from rivercross.model import (
    HwMove,
    HwState,
    InvalidMoveError,
    McMove,
    McState,
    husbands,
    successors,
    wives,
)
from rivercross.paths import InvalidPathError, Path, validate_path
from rivercross.symmetry import (
    Permutation,
    act_on_move,
    act_on_state,
    departure_sorting_permutation,
    orbit,
    project,
    project_move,
    section,
)
from rivercross.taxonomy import CaseLabel, TransitionCase, classify_transition

logger = logging.getLogger(__name__)


class LiftError(RivercrossError):
    """Raised when a lifted trip does not land over the MC target state.

    Attributes:
        step: 1-based index of the failing trip.
    """

    def __init__(self, message: str, step: int) -> None:
        super().__init__(message)
        self.step = step


class LiftStrategy(str, Enum):
    """How prefix relabellings are applied."""

    EAGER = "eager"
    LAZY = "lazy"


@dataclass(frozen=True)
class LiftTrace:
    """Outcome of lifting one MC path.

    Attributes:
        path: The lifted HW path.
        permutations: Relabelling applied before each trip.
        cases: Transition case of each MC trip.
        strategy: Strategy that produced the path.
    """

    path: Path
    permutations: Tuple[Permutation, ...]
    cases: Tuple[CaseLabel, ...]
    strategy: LiftStrategy = LiftStrategy.EAGER

    @property
    def distinct_permutations(self) -> FrozenSet[Permutation]:
        return frozenset(self.permutations)


def canonical_load(
    state: HwState, move: McMove, case: TransitionCase
) -> HwMove:
    """HW load for an MC move from a state sorted on its departure bank.

    With the departure bank holding wives ``w_1..w_x`` and the move carrying
    ``c`` cannibals, the wives taken are ``W_{x-c+1,x}``. Husbands by case:
    none for i and ii, all for iii, ``H_{x-c+1,n}`` for iv, ``H_{1,x}`` for
    v and ``H_{x-c+1,x}`` for vi.
    """
    n = state.n
    x = sum(1 for p in state.bank(move.side) if p.is_wife)
    c = move.cannibals
    load = wives(x - c + 1, x)
    if case is TransitionCase.III:
        load |= husbands(1, n)
    elif case is TransitionCase.IV:
        load |= husbands(x - c + 1, n)
    elif case is TransitionCase.V:
        load |= husbands(1, x)
    elif case is TransitionCase.VI:
        load |= husbands(x - c + 1, x)
    return HwMove(load, move.side)


def _play(
    current: HwState,
    source: McState,
    move: McMove,
    target: McState,
    step: int,
) -> Tuple[HwMove, HwState, CaseLabel]:
    label = classify_transition(move, source)
    load = canonical_load(current, move, label.case)
    try:
        landed = current.apply(load)
    except InvalidMoveError as e:
        raise LiftError(f"Step {step}: {e}", step=step) from e
    if project(landed) != target or not landed.is_admissible():
        raise LiftError(
            f"Step {step}: {current} --{load}--> {landed} does not lie "
            f"over {target}",
            step=step,
        )
    return load, landed, label


def _lift_eager(
    mc_path: Path,
) -> Tuple[Path, List[Permutation], List[CaseLabel]]:
    states: List[HwState] = [section(mc_path.source)]
    moves: List[HwMove] = []
    permutations: List[Permutation] = []
    cases: List[CaseLabel] = []
    for step, (source, move, target) in enumerate(mc_path.steps(), start=1):
        pi = departure_sorting_permutation(states[-1])
        permutations.append(pi)
        if not pi.is_identity():
            states = [act_on_state(pi, s) for s in states]
            moves = [act_on_move(pi, f) for f in moves]
        load, landed, label = _play(states[-1], source, move, target, step)
        moves.append(load)
        states.append(landed)
        cases.append(label)
    return Path(tuple(states), tuple(moves)), permutations, cases


def _lift_lazy(
    mc_path: Path,
) -> Tuple[Path, List[Permutation], List[CaseLabel]]:
    raw_states: List[HwState] = [section(mc_path.source)]
    raw_moves: List[HwMove] = []
    permutations: List[Permutation] = []
    cases: List[CaseLabel] = []
    current = raw_states[0]
    for step, (source, move, target) in enumerate(mc_path.steps(), start=1):
        pi = departure_sorting_permutation(current)
        permutations.append(pi)
        current = act_on_state(pi, current)
        load, current, label = _play(current, source, move, target, step)
        raw_moves.append(load)
        raw_states.append(current)
        cases.append(label)

    # state i lives in the frame after trip i; later relabellings compose
    # on the left
    k = len(raw_moves)
    frame = Permutation.identity(mc_path.source.n)
    states: List[HwState] = [raw_states[k]]
    moves: List[HwMove] = []
    for i in range(k, 0, -1):
        moves.append(act_on_move(frame, raw_moves[i - 1]))
        frame = frame * permutations[i - 1]
        states.append(act_on_state(frame, raw_states[i - 1]))
    states.reverse()
    moves.reverse()
    return Path(tuple(states), tuple(moves)), permutations, cases


def lift_path(
    mc_path: Path,
    b: Optional[int] = None,
    strategy: LiftStrategy = LiftStrategy.EAGER,
) -> LiftTrace:
    """Lift an MC path to an HW path lying over it.

    The lift starts at ``section(source)``; prefix relabellings may move
    the start elsewhere in its orbit, except for the initial state, which
    every relabelling fixes.

    Args:
        mc_path: A valid MC path; it need not be a solution.
        b: If given, the MC path is validated against capacity ``b`` first.
        strategy: Eager or lazy relabelling.

    Returns:
        LiftTrace whose path projects onto ``mc_path``.

    Raises:
        InvalidPathError: If ``mc_path`` is not valid for ``b``.
        LiftError: If a trip cannot be lifted.
    """
    if not all(isinstance(s, McState) for s in mc_path.states):
        raise InvalidPathError("Only MC paths can be lifted")
    if b is not None:
        validate_path(mc_path, b)
    if strategy is LiftStrategy.EAGER:
        path, permutations, cases = _lift_eager(mc_path)
    else:
        path, permutations, cases = _lift_lazy(mc_path)
    logger.debug(
        f"Lifted {mc_path.length}-trip path with "
        f"{len(set(permutations))} distinct relabellings"
    )
    return LiftTrace(path, tuple(permutations), tuple(cases), strategy)


def lift_solution(
    mc_solution: Path,
    b: Optional[int] = None,
    strategy: LiftStrategy = LiftStrategy.EAGER,
) -> LiftTrace:
    """Lift an MC solution to an HW solution.

    Raises:
        InvalidPathError: If ``mc_solution`` is not a valid solution.
        LiftError: If a trip cannot be lifted.
    """
    if not mc_solution.is_solution():
        raise InvalidPathError(
            "Path does not run from the initial to the final state"
        )
    return lift_path(mc_solution, b, strategy)


def lift_permutations_in_rotation_subgroup(trace: LiftTrace) -> bool:
    """Return True if every relabelling used is a cyclic rotation."""
    return all(pi.is_rotation() for pi in trace.permutations)


# ============================================================================
# Fibers
# ============================================================================


Node = Tuple[int, HwState]


@dataclass(frozen=True)
class FiberLattice:
    """All HW paths lying over one MC path, as a layered graph.

    Attributes:
        mc_path: The MC path.
        layers: Layer j lists the HW states over ``mc_path.states[j]``.
        graph: DAG on ``(j, state)`` nodes; edges carry their ``move``.
        count: Number of source-to-last-layer paths.
    """

    mc_path: Path
    layers: Tuple[Tuple[HwState, ...], ...]
    graph: nx.DiGraph
    count: int

    @property
    def layer_sizes(self) -> Tuple[int, ...]:
        return tuple(len(layer) for layer in self.layers)

    def moves_at(self, step: int) -> FrozenSet[HwMove]:
        """Distinct HW moves used by trip ``step`` (1-based)."""
        return frozenset(
            data["move"]
            for (j, _), _, data in self.graph.edges(data=True)
            if j == step - 1
        )

    def paths(self) -> Iterator[Path]:
        """Every lifted path, in canonical order."""
        last = len(self.layers) - 1
        starts = [(0, s) for s in self.layers[0]]
        stack: List[Tuple[List[Node], List[HwMove]]] = [
            ([node], []) for node in reversed(starts)
        ]
        while stack:
            nodes, moves = stack.pop()
            head = nodes[-1]
            if head[0] == last:
                yield Path(tuple(s for _, s in nodes), tuple(moves))
                continue
            for successor in reversed(sorted(self.graph.successors(head))):
                move = self.graph.edges[head, successor]["move"]
                stack.append((nodes + [successor], moves + [move]))

    def __contains__(self, path: object) -> bool:
        if not isinstance(path, Path) or path.length != self.mc_path.length:
            return False
        nodes = list(enumerate(path.states))
        if nodes[0] not in self.graph:
            return False
        return all(
            self.graph.has_edge(u, v)
            and self.graph.edges[u, v]["move"] == move
            for (u, v), move in zip(zip(nodes, nodes[1:]), path.moves)
        )


def enumerate_lifts(
    mc_path: Path,
    b: int,
    from_source_orbit: bool = False,
    budgets: Budgets = DEFAULT_BUDGETS,
) -> FiberLattice:
    """Build the fiber of ``mc_path``.

    Layer j is the orbit over the j-th MC state; an edge joins consecutive
    layers when it is an HW transition whose move projects onto the j-th MC
    move. Paths start at ``section(source)``, or anywhere in its orbit when
    ``from_source_orbit`` is set. For a solution the two agree, since the
    initial orbit is a single state.

    Raises:
        InvalidPathError: If ``mc_path`` is not valid for ``b``.
        BudgetExceededError: If the fiber holds more than ``max_paths``
            paths.
    """
    validate_path(mc_path, b)
    budgets.check_n(mc_path.source.n)
    start = section(mc_path.source)
    if from_source_orbit:
        first: Tuple[HwState, ...] = tuple(orbit(start))
    else:
        first = (start,)
    layers: List[Tuple[HwState, ...]] = [first]
    for state in mc_path.states[1:]:
        layers.append(tuple(orbit(section(state))))

    graph = nx.DiGraph()
    for j, layer in enumerate(layers):
        graph.add_nodes_from(((j, s) for s in layer), layer=j)
    for j, mc_move in enumerate(mc_path.moves):
        for source in layers[j]:
            for move, target in successors(source, b):
                if project_move(move) == mc_move:
                    graph.add_edge((j, source), (j + 1, target), move=move)

    counts: Dict[Node, int] = {(0, s): 1 for s in layers[0]}
    for j in range(1, len(layers)):
        for s in layers[j]:
            counts[(j, s)] = sum(
                counts.get(u, 0) for u in graph.predecessors((j, s))
            )
    total = sum(counts[(len(layers) - 1, s)] for s in layers[-1])
    budgets.check_paths(total)
    logger.debug(f"Fiber of {mc_path.length}-trip path holds {total} lifts")
    return FiberLattice(mc_path, tuple(layers), graph, total)


__all__ = [
    "FiberLattice",
    "LiftError",
    "LiftStrategy",
    "LiftTrace",
    "canonical_load",
    "enumerate_lifts",
    "lift_path",
    "lift_permutations_in_rotation_subgroup",
    "lift_solution",
]
