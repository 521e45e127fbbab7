"""
Paths in a state graph.

A path alternates states and moves, ``state_0, f_1, state_1, ..., f_k,
state_k``. Paths are the carrier of solutions (solver) and of morphisms
(category); the identity morphism at a state is the path of length zero.
"""

from dataclasses import dataclass
from typing import Generic, Iterator, Optional, Sequence, Tuple, TypeVar

from rivercross.config import RivercrossError
from rivercross.model import (
    InvalidMoveError,
    final_state,
    initial_state,
    successors,
)

S = TypeVar("S")
M = TypeVar("M")


class InvalidPathError(RivercrossError):
    """Raised when a path breaks at some step.

    Attributes:
        step: 1-based index of the first offending transition, or 0 when
            the path is malformed as a whole.
    """

    def __init__(self, message: str, step: int = 0) -> None:
        super().__init__(message)
        self.step = step


@dataclass(frozen=True)
class Path(Generic[S, M]):
    """An alternating sequence of states and moves.

    Attributes:
        states: The k + 1 visited states.
        moves: The k moves; ``moves[i]`` leads from ``states[i]`` to
            ``states[i + 1]``.
    """

    states: Tuple[S, ...]
    moves: Tuple[M, ...] = ()

    def __post_init__(self) -> None:
        if len(self.states) != len(self.moves) + 1:
            raise InvalidPathError(
                f"A path of {len(self.moves)} moves needs "
                f"{len(self.moves) + 1} states, got {len(self.states)}"
            )

    @classmethod
    def identity(cls, state: S) -> "Path[S, M]":
        """Length-zero path at ``state``."""
        return cls((state,), ())

    @property
    def source(self) -> S:
        return self.states[0]

    @property
    def target(self) -> S:
        return self.states[-1]

    @property
    def length(self) -> int:
        return len(self.moves)

    def __len__(self) -> int:
        return len(self.moves)

    def steps(self) -> Iterator[Tuple[S, M, S]]:
        """Iterate ``(state_{i-1}, f_i, state_i)`` triples."""
        for i, move in enumerate(self.moves):
            yield self.states[i], move, self.states[i + 1]

    def segment(self, start: int, stop: int) -> "Path[S, M]":
        """Sub-path from ``states[start]`` to ``states[stop]``."""
        return Path(self.states[start : stop + 1], self.moves[start:stop])

    def then(self, other: "Path[S, M]") -> "Path[S, M]":
        """Concatenate ``other`` after this path (``other ∘ self``)."""
        if other.source != self.target:
            raise InvalidPathError(
                f"Cannot join a path ending at {self.target} with one "
                f"starting at {other.source}"
            )
        return Path(self.states + other.states[1:], self.moves + other.moves)

    def is_simple(self) -> bool:
        """Return True if no state repeats."""
        return len(set(self.states)) == len(self.states)

    def is_solution(self) -> bool:
        """Return True if the path runs from the initial to the final state.

        Only the endpoints are checked; use :func:`validate_path` for the
        transitions.
        """
        first = self.source
        n = getattr(first, "n")
        flavor = getattr(first, "flavor")
        return first == initial_state(n, flavor) and self.target == (
            final_state(n, flavor)
        )

    def sequence(self) -> Tuple[object, ...]:
        """Flat ``(state, move, state, ...)`` tuple."""
        items: list = [self.states[0]]
        for move, state in zip(self.moves, self.states[1:]):
            items.extend((move, state))
        return tuple(items)

    def __str__(self) -> str:
        return " -> ".join(str(item) for item in self.sequence())


def validate_path(path: Path, b: int) -> Path:
    """Check every step of ``path`` is a transition with capacity ``b``.

    Returns:
        The path, unchanged.

    Raises:
        InvalidPathError: At the first offending step.
    """
    for i, (before, move, after) in enumerate(path.steps(), start=1):
        if not before.is_admissible():
            raise InvalidPathError(
                f"Step {i}: state {before} is not admissible", step=i
            )
        if (move, after) not in successors(before, b):
            raise InvalidPathError(
                f"Step {i}: {before} --{move}--> {after} is not a "
                f"transition with b={b}",
                step=i,
            )
    if not path.target.is_admissible():
        raise InvalidPathError(
            f"State {path.target} is not admissible", step=path.length
        )
    return path


def path_from_states(states: Sequence, b: Optional[int] = None) -> Path:
    """Build a path from consecutive states, restoring the moves.

    Args:
        states: At least one state.
        b: If given, the path is also validated against capacity ``b``.

    Raises:
        InvalidPathError: If two consecutive states are not one trip apart.
    """
    if not states:
        raise InvalidPathError("A path needs at least one state")
    moves = []
    for i in range(1, len(states)):
        try:
            moves.append(states[i - 1].move_to(states[i]))
        except InvalidMoveError as e:
            raise InvalidPathError(f"Step {i}: {e}", step=i) from e
    path: Path = Path(tuple(states), tuple(moves))
    if b is not None:
        validate_path(path, b)
    return path
