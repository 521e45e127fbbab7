"""
Core model of the jealous-husbands (HW) and missionaries-and-cannibals (MC)
river-crossing problems.

A state records who is on each bank and where the boat is; the boat is
always empty in a state. A move records the boat load and the bank the boat
leaves from. Transitions are generated by brute force: every safe load of
at most ``b`` people drawn from the boat's bank is tried, and the move is
kept when the resulting state is admissible.
"""

from __future__ import annotations

import itertools
import logging
import re
from dataclasses import dataclass
from enum import Enum, IntEnum
from functools import lru_cache
from typing import (
    Any,
    Dict,
    FrozenSet,
    Iterable,
    List,
    Optional,
    Tuple,
    Union,
)

from rivercross.config import DEFAULT_BUDGETS, Budgets, RivercrossError

logger = logging.getLogger(__name__)


class InvalidStateError(RivercrossError):
    """Raised when a state is malformed or not admissible."""

    pass


class InvalidMoveError(RivercrossError):
    """Raised when a move is malformed or cannot be applied."""

    pass


class ParseError(RivercrossError):
    """Raised when a state or move string cannot be parsed."""

    pass


class Side(str, Enum):
    """River bank, also used for the boat location."""

    LEFT = "L"
    RIGHT = "R"

    @property
    def opposite(self) -> "Side":
        return Side.RIGHT if self is Side.LEFT else Side.LEFT

    @classmethod
    def parse(cls, text: str) -> "Side":
        key = text.strip().upper()
        if key in ("L", "LEFT"):
            return cls.LEFT
        if key in ("R", "RIGHT"):
            return cls.RIGHT
        raise ParseError(f"Unknown bank '{text}'")


class Flavor(str, Enum):
    """Problem flavor."""

    HW = "hw"
    """Jealous husbands: n couples."""

    MC = "mc"
    """Missionaries and cannibals: n of each."""


class Role(IntEnum):
    """Role of a person; wives sort before husbands."""

    WIFE = 0
    HUSBAND = 1

    @property
    def prefix(self) -> str:
        return "w" if self is Role.WIFE else "h"


@dataclass(frozen=True, order=True)
class Person:
    """A wife or husband, indexed 1..n.

    Ordering is wives first, then husbands, each by index, which is the
    order used in the canonical state text form.
    """

    role: Role
    index: int

    def __post_init__(self) -> None:
        if self.index < 1:
            raise InvalidStateError(f"Person index must be >= 1: {self}")

    def __str__(self) -> str:
        return f"{self.role.prefix}{self.index}"

    @property
    def is_wife(self) -> bool:
        return self.role is Role.WIFE

    @property
    def is_husband(self) -> bool:
        return self.role is Role.HUSBAND

    @classmethod
    def parse(cls, token: str) -> "Person":
        match = re.fullmatch(r"([wh])(\d+)", token.strip())
        if match is None:
            raise ParseError(f"Invalid person '{token}'")
        role = Role.WIFE if match.group(1) == "w" else Role.HUSBAND
        return cls(role, int(match.group(2)))


def wife(index: int) -> Person:
    """Return wife ``w_index``."""
    return Person(Role.WIFE, index)


def husband(index: int) -> Person:
    """Return husband ``h_index``."""
    return Person(Role.HUSBAND, index)


def wives(first: int, last: int) -> FrozenSet[Person]:
    """Return the block ``{w_first, ..., w_last}`` (empty if first > last)."""
    return frozenset(wife(i) for i in range(first, last + 1))


def husbands(first: int, last: int) -> FrozenSet[Person]:
    """Return the block ``{h_first, ..., h_last}`` (empty if first > last)."""
    return frozenset(husband(i) for i in range(first, last + 1))


@lru_cache(maxsize=None)
def everyone(n: int) -> FrozenSet[Person]:
    """Return the set U of all 2n people."""
    return wives(1, n) | husbands(1, n)


def format_people(group: Iterable[Person]) -> str:
    return " ".join(str(p) for p in sorted(group))


def is_safe_hw(group: Iterable[Person]) -> bool:
    """Return True if a group of people is safe in the HW problem.

    A group is safe when it contains no husband, or when it contains the
    husband of every wife in it.
    """
    members = frozenset(group)
    husband_ids = {p.index for p in members if p.is_husband}
    if not husband_ids:
        return True
    return all(p.index in husband_ids for p in members if p.is_wife)


def is_safe_mc(cannibals: int, missionaries: int) -> bool:
    """Return True if cannibals never outnumber present missionaries."""
    return missionaries == 0 or cannibals <= missionaries


def capacity(n: int) -> int:
    """Least boat capacity for which an instance of size n is solvable.

    Args:
        n: Number of couples (or missionaries).

    Returns:
        2 for n <= 3, 3 for n in {4, 5}, 4 for n >= 6.

    Raises:
        ValueError: If n < 2.
    """
    if n < 2:
        raise ValueError(f"Instance size must be at least 2, got {n}")
    if n <= 3:
        return 2
    if n <= 5:
        return 3
    return 4


def state_count(n: int, flavor: Flavor) -> int:
    """Closed-form number of admissible states, from the type taxonomy.

    HW has 2^n states of each of types (a) and (b) and 2^n - 2 of type (c);
    MC has n + 1 of each of (a') and (b') and n - 1 of (c'). Both double for
    the boat location.
    """
    if flavor is Flavor.HW:
        return 2 * (3 * 2**n - 2)
    return 2 * (3 * n + 1)


# ============================================================================
# HW states and moves
# ============================================================================


@dataclass(frozen=True)
class HwMove:
    """A boat trip in the HW problem: the load and the departure bank."""

    load: FrozenSet[Person]
    side: Side

    def __str__(self) -> str:
        return f"{{{format_people(self.load)} : {self.side.value}}}"

    @property
    def wife_count(self) -> int:
        return sum(1 for p in self.load if p.is_wife)

    @property
    def husband_count(self) -> int:
        return sum(1 for p in self.load if p.is_husband)

    def is_valid(self, b: int) -> bool:
        """Return True if the load is non-empty, fits and is safe."""
        return 0 < len(self.load) <= b and is_safe_hw(self.load)

    @classmethod
    def parse(cls, text: str) -> "HwMove":
        match = re.fullmatch(r"\{([^:]*):\s*([LR])\s*\}", text.strip())
        if match is None:
            raise ParseError(f"Invalid HW move '{text}'")
        load = frozenset(Person.parse(t) for t in match.group(1).split())
        return cls(load, Side.parse(match.group(2)))


@dataclass(frozen=True)
class HwState:
    """A state of the HW problem: (left, right, boat).

    Attributes:
        left: People on the left bank.
        right: People on the right bank (always U minus left).
        boat: Bank where the (empty) boat is.
        n: Number of couples.
    """

    left: FrozenSet[Person]
    right: FrozenSet[Person]
    boat: Side
    n: int

    def __post_init__(self) -> None:
        universe = everyone(self.n)
        if self.left | self.right != universe or self.left & self.right:
            raise InvalidStateError(
                f"Banks must partition all {2 * self.n} people: "
                f"[{format_people(self.left)} | "
                f"{format_people(self.right)}]"
            )

    @classmethod
    def from_left(
        cls, left: Iterable[Person], boat: Side, n: int
    ) -> "HwState":
        """Build a state from the left bank; the right bank is the rest."""
        left_set = frozenset(left)
        return cls(left_set, everyone(n) - left_set, boat, n)

    @classmethod
    def initial(cls, n: int) -> "HwState":
        return cls(everyone(n), frozenset(), Side.LEFT, n)

    @classmethod
    def final(cls, n: int) -> "HwState":
        return cls(frozenset(), everyone(n), Side.RIGHT, n)

    @property
    def flavor(self) -> Flavor:
        return Flavor.HW

    def bank(self, side: Side) -> FrozenSet[Person]:
        return self.left if side is Side.LEFT else self.right

    def is_admissible(self) -> bool:
        return is_safe_hw(self.left) and is_safe_hw(self.right)

    def apply(self, move: HwMove) -> "HwState":
        """Return the state after ``move``.

        Raises:
            InvalidMoveError: If the move leaves from the wrong bank or
                carries people who are not on the departure bank.
        """
        if move.side is not self.boat:
            raise InvalidMoveError(
                f"Move {move} departs {move.side.value} but the boat is "
                f"on {self.boat.value}"
            )
        departure = self.bank(move.side)
        if not move.load or not move.load <= departure:
            raise InvalidMoveError(f"Move {move} not drawn from {self}")
        if self.boat is Side.LEFT:
            return HwState(
                self.left - move.load,
                self.right | move.load,
                Side.RIGHT,
                self.n,
            )
        return HwState(
            self.left | move.load,
            self.right - move.load,
            Side.LEFT,
            self.n,
        )

    def move_to(self, other: "HwState") -> HwMove:
        """Return the move that turns this state into ``other``."""
        if other.n != self.n or other.boat is self.boat:
            raise InvalidMoveError(f"No single trip from {self} to {other}")
        load = self.bank(self.boat) - other.bank(self.boat)
        if self.bank(self.boat.opposite) | load != other.bank(
            self.boat.opposite
        ):
            raise InvalidMoveError(f"No single trip from {self} to {other}")
        return HwMove(load, self.boat)

    @property
    def sort_key(self) -> Tuple[Any, ...]:
        return (
            tuple(sorted(self.left)),
            tuple(sorted(self.right)),
            self.boat.value,
        )

    def __lt__(self, other: "HwState") -> bool:
        return self.sort_key < other.sort_key

    def __str__(self) -> str:
        return (
            f"[{format_people(self.left)} | {format_people(self.right)}"
            f" : {self.boat.value}]"
        )

    @classmethod
    def parse(cls, text: str, n: Optional[int] = None) -> "HwState":
        """Parse the canonical text form ``[w1 h1 | w2 h2 : L]``.

        Args:
            text: State text.
            n: Instance size; inferred from the largest index if omitted.

        Raises:
            ParseError: If the text is malformed.
            InvalidStateError: If the banks do not partition everyone.
        """
        match = re.fullmatch(
            r"\[\s*([^|]*)\|([^:]*):\s*([LR])\s*\]", text.strip()
        )
        if match is None:
            raise ParseError(f"Invalid HW state '{text}'")
        left = [Person.parse(t) for t in match.group(1).split()]
        right = [Person.parse(t) for t in match.group(2).split()]
        people = left + right
        if n is None:
            n = max((p.index for p in people), default=0)
        if len(people) != len(set(people)):
            raise InvalidStateError(f"Duplicate person in '{text}'")
        return cls(
            frozenset(left), frozenset(right), Side.parse(match.group(3)), n
        )


# ============================================================================
# MC states and moves
# ============================================================================


@dataclass(frozen=True)
class McMove:
    """A boat trip in the MC problem: head counts and departure bank."""

    cannibals: int
    missionaries: int
    side: Side

    def __str__(self) -> str:
        return f"{{({self.cannibals},{self.missionaries}):{self.side.value}}}"

    @property
    def size(self) -> int:
        return self.cannibals + self.missionaries

    def is_valid(self, b: int) -> bool:
        return (
            self.cannibals >= 0
            and self.missionaries >= 0
            and 0 < self.size <= b
            and is_safe_mc(self.cannibals, self.missionaries)
        )

    @classmethod
    def parse(cls, text: str) -> "McMove":
        match = re.fullmatch(
            r"\{\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*:\s*([LR])\s*\}",
            text.strip(),
        )
        if match is None:
            raise ParseError(f"Invalid MC move '{text}'")
        return cls(
            int(match.group(1)),
            int(match.group(2)),
            Side.parse(match.group(3)),
        )


Counts = Tuple[int, int]


@dataclass(frozen=True)
class McState:
    """A state of the MC problem.

    Banks are ``(cannibals, missionaries)`` pairs.
    """

    left: Counts
    right: Counts
    boat: Side
    n: int

    def __post_init__(self) -> None:
        lc, lm = self.left
        rc, rm = self.right
        if min(lc, lm, rc, rm) < 0 or lc + rc != self.n or lm + rm != self.n:
            raise InvalidStateError(
                f"Bank counts must sum to n={self.n}: {self.left}, "
                f"{self.right}"
            )

    @classmethod
    def from_left(
        cls, cannibals: int, missionaries: int, boat: Side, n: int
    ) -> "McState":
        return cls(
            (cannibals, missionaries),
            (n - cannibals, n - missionaries),
            boat,
            n,
        )

    @classmethod
    def initial(cls, n: int) -> "McState":
        return cls((n, n), (0, 0), Side.LEFT, n)

    @classmethod
    def final(cls, n: int) -> "McState":
        return cls((0, 0), (n, n), Side.RIGHT, n)

    @property
    def flavor(self) -> Flavor:
        return Flavor.MC

    def bank(self, side: Side) -> Counts:
        return self.left if side is Side.LEFT else self.right

    def is_admissible(self) -> bool:
        return is_safe_mc(*self.left) and is_safe_mc(*self.right)

    def apply(self, move: McMove) -> "McState":
        """Return the state after ``move``.

        Raises:
            InvalidMoveError: If the move cannot be drawn from the boat's
                bank.
        """
        if move.side is not self.boat:
            raise InvalidMoveError(
                f"Move {move} departs {move.side.value} but the boat is "
                f"on {self.boat.value}"
            )
        dc, dm = self.bank(move.side)
        if move.size == 0 or move.cannibals > dc or move.missionaries > dm:
            raise InvalidMoveError(f"Move {move} not drawn from {self}")
        sign = -1 if self.boat is Side.LEFT else 1
        return McState.from_left(
            self.left[0] + sign * move.cannibals,
            self.left[1] + sign * move.missionaries,
            self.boat.opposite,
            self.n,
        )

    def move_to(self, other: "McState") -> McMove:
        """Return the move that turns this state into ``other``."""
        if other.n != self.n or other.boat is self.boat:
            raise InvalidMoveError(f"No single trip from {self} to {other}")
        before = self.bank(self.boat)
        after = other.bank(self.boat)
        move = McMove(
            before[0] - after[0], before[1] - after[1], self.boat
        )
        if move.cannibals < 0 or move.missionaries < 0 or move.size == 0:
            raise InvalidMoveError(f"No single trip from {self} to {other}")
        return move

    @property
    def sort_key(self) -> Tuple[Any, ...]:
        return (self.left, self.right, self.boat.value)

    def __lt__(self, other: "McState") -> bool:
        return self.sort_key < other.sort_key

    def __str__(self) -> str:
        return (
            f"[({self.left[0]},{self.left[1]})|"
            f"({self.right[0]},{self.right[1]}):{self.boat.value}]"
        )

    @classmethod
    def parse(cls, text: str) -> "McState":
        """Parse the canonical text form ``[(2,3)|(1,0):L]``."""
        match = re.fullmatch(
            r"\[\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*\|\s*"
            r"\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*:\s*([LR])\s*\]",
            text.strip(),
        )
        if match is None:
            raise ParseError(f"Invalid MC state '{text}'")
        lc, lm, rc, rm = (int(match.group(i)) for i in range(1, 5))
        return cls((lc, lm), (rc, rm), Side.parse(match.group(5)), lc + rc)


State = Union[HwState, McState]
Move = Union[HwMove, McMove]


def initial_state(n: int, flavor: Flavor) -> State:
    if flavor is Flavor.HW:
        return HwState.initial(n)
    return McState.initial(n)


def final_state(n: int, flavor: Flavor) -> State:
    if flavor is Flavor.HW:
        return HwState.final(n)
    return McState.final(n)


def parse_state(text: str, flavor: Optional[Flavor] = None) -> State:
    """Parse either state text form; the flavor is detected if omitted."""
    if flavor is None:
        flavor = Flavor.MC if "(" in text else Flavor.HW
    if flavor is Flavor.HW:
        return HwState.parse(text)
    return McState.parse(text)


def parse_move(text: str, flavor: Optional[Flavor] = None) -> Move:
    """Parse either move text form; the flavor is detected if omitted."""
    if flavor is None:
        flavor = Flavor.MC if "(" in text else Flavor.HW
    if flavor is Flavor.HW:
        return HwMove.parse(text)
    return McMove.parse(text)


def state_to_dict(state: State) -> Dict[str, Any]:
    """JSON form of a state, mirroring its fields."""
    if isinstance(state, HwState):
        return {
            "flavor": "hw",
            "n": state.n,
            "left": [str(p) for p in sorted(state.left)],
            "right": [str(p) for p in sorted(state.right)],
            "boat": state.boat.value,
        }
    return {
        "flavor": "mc",
        "n": state.n,
        "left": {"cannibals": state.left[0], "missionaries": state.left[1]},
        "right": {
            "cannibals": state.right[0],
            "missionaries": state.right[1],
        },
        "boat": state.boat.value,
    }


def state_from_dict(data: Dict[str, Any]) -> State:
    """Inverse of :func:`state_to_dict`."""
    boat = Side.parse(data["boat"])
    if data["flavor"] == "hw":
        return HwState(
            frozenset(Person.parse(t) for t in data["left"]),
            frozenset(Person.parse(t) for t in data["right"]),
            boat,
            int(data["n"]),
        )
    left = data["left"]
    right = data["right"]
    return McState(
        (int(left["cannibals"]), int(left["missionaries"])),
        (int(right["cannibals"]), int(right["missionaries"])),
        boat,
        int(data["n"]),
    )


# ============================================================================
# Enumeration and transitions
# ============================================================================


def _hw_candidates(n: int) -> Iterable[HwState]:
    people = sorted(everyone(n))
    for mask in range(2 ** len(people)):
        left = frozenset(p for i, p in enumerate(people) if mask >> i & 1)
        for boat in (Side.LEFT, Side.RIGHT):
            yield HwState.from_left(left, boat, n)


def _mc_candidates(n: int) -> Iterable[McState]:
    for cannibals in range(n + 1):
        for missionaries in range(n + 1):
            for boat in (Side.LEFT, Side.RIGHT):
                yield McState.from_left(cannibals, missionaries, boat, n)


def enumerate_states(
    n: int, flavor: Flavor, budgets: Budgets = DEFAULT_BUDGETS
) -> Tuple[State, ...]:
    """Enumerate all admissible states by brute force.

    HW candidates are all bank partitions of the 2n people times both boat
    locations; MC candidates are all count splits times both locations.
    Candidates are kept when both banks are safe.

    Args:
        n: Instance size.
        flavor: HW or MC.
        budgets: Enumeration budgets (``max_n`` applies).

    Returns:
        Admissible states in canonical order.

    Raises:
        ValueError: If n < 2.
        BudgetExceededError: If n exceeds the configured cap.
    """
    if n < 2:
        raise ValueError(f"Instance size must be at least 2, got {n}")
    budgets.check_n(n)
    candidates: Iterable[State]
    if flavor is Flavor.HW:
        candidates = _hw_candidates(n)
    else:
        candidates = _mc_candidates(n)
    states = sorted(s for s in candidates if s.is_admissible())
    logger.debug(f"Enumerated {len(states)} {flavor.value} states for n={n}")
    return tuple(states)


def _hw_successors(state: HwState, b: int) -> List[Tuple[HwMove, HwState]]:
    departure = sorted(state.bank(state.boat))
    result = []
    for size in range(1, min(b, len(departure)) + 1):
        for load in itertools.combinations(departure, size):
            move = HwMove(frozenset(load), state.boat)
            if not is_safe_hw(move.load):
                continue
            target = state.apply(move)
            if target.is_admissible():
                result.append((move, target))
    return result


def _mc_successors(state: McState, b: int) -> List[Tuple[McMove, McState]]:
    dc, dm = state.bank(state.boat)
    result = []
    for cannibals in range(dc + 1):
        for missionaries in range(dm + 1):
            move = McMove(cannibals, missionaries, state.boat)
            if not move.is_valid(b):
                continue
            target = state.apply(move)
            if target.is_admissible():
                result.append((move, target))
    return result


def successors(state: State, b: int) -> Tuple[Tuple[Move, State], ...]:
    """All (move, resulting state) pairs from ``state`` with capacity ``b``.

    The result is ordered by the resulting state's canonical order.

    Args:
        state: An admissible state.
        b: Boat capacity (at least 1).

    Returns:
        Tuple of (move, state) pairs.
    """
    if b < 1:
        raise ValueError(f"Boat capacity must be at least 1, got {b}")
    pairs: List[Tuple[Any, Any]]
    if isinstance(state, HwState):
        pairs = list(_hw_successors(state, b))
    else:
        pairs = list(_mc_successors(state, b))
    pairs.sort(key=lambda pair: pair[1].sort_key)
    return tuple(pairs)
