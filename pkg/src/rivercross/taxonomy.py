"""
State types and transition cases of the HW and MC problems.

Transitions are generated by brute force in :mod:`rivercross.model`; the
case taxonomy here classifies them after the fact and serves as a
cross-check of the generator. A trip from the right bank is classified as
the mirror image of the corresponding trip from the left bank.

States fall into three types by where the husbands (missionaries) are:

- (a) none on the left bank,
- (b) all on the left bank,
- (c) on both banks, in which case each husband is with his wife and the
  banks hold equal numbers of cannibals and missionaries.

Left-to-right trips fall into six cases (right-to-left trips mirror them):

- i) from (a): some wives;
- ii) from (b): some wives;
- iii) from (b): all husbands and no wives;
- iv) from (b): the husbands of every wife on the far bank, plus possibly
  some couples;
- v) from (c): some wives and all husbands of the departure bank;
- vi) from (c): some couples.
"""

from dataclasses import dataclass
from enum import Enum
from typing import FrozenSet, Union

from rivercross.config import RivercrossError
from rivercross.model import (
    Flavor,
    HwMove,
    HwState,
    McMove,
    McState,
    Move,
    Person,
    Side,
    State,
)


class UnclassifiableTransitionError(RivercrossError):
    """Raised when a transition matches no case; indicates a model bug."""

    pass


class StateType(str, Enum):
    """Type of a state by the location of the husbands/missionaries."""

    A = "a"
    B = "b"
    C = "c"

    def label(self, flavor: Flavor) -> str:
        """Return the printed label, primed for MC (e.g. ``b'``)."""
        return self.value + ("'" if flavor is Flavor.MC else "")


class TransitionCase(str, Enum):
    """The six cases of a trip, named after the departure-side pattern."""

    I = "i"  # noqa: E741
    II = "ii"
    III = "iii"
    IV = "iv"
    V = "v"
    VI = "vi"


@dataclass(frozen=True)
class CaseLabel:
    """Classification of one transition.

    Attributes:
        case: Which of the six cases applies.
        flavor: HW labels print as ``iv``, MC labels as ``iv'``.
        side: Departure bank; RIGHT means the mirrored case.
    """

    case: TransitionCase
    flavor: Flavor
    side: Side

    @property
    def mirrored(self) -> bool:
        return self.side is Side.RIGHT

    def __str__(self) -> str:
        return self.case.value + ("'" if self.flavor is Flavor.MC else "")


def _type_from_count(count: int, n: int) -> StateType:
    if count == 0:
        return StateType.A
    if count == n:
        return StateType.B
    return StateType.C


def classify_state(state: State) -> StateType:
    """Return the type (a), (b) or (c) of an admissible state.

    The type is read off the number of husbands (missionaries) on the left
    bank: none, all, or strictly between.
    """
    if isinstance(state, HwState):
        count = sum(1 for p in state.left if p.is_husband)
    else:
        count = state.left[1]
    return _type_from_count(count, state.n)


def _indices(group: FrozenSet[Person], husbands: bool) -> FrozenSet[int]:
    return frozenset(p.index for p in group if p.is_husband == husbands)


def _classify_hw(move: HwMove, state: HwState) -> TransitionCase:
    departure = state.bank(move.side)
    far = state.bank(move.side.opposite)
    load_wives = _indices(move.load, husbands=False)
    load_husbands = _indices(move.load, husbands=True)
    departure_husbands = _indices(departure, husbands=True)
    kind = _type_from_count(len(departure_husbands), state.n)

    if kind is StateType.A:
        if not load_husbands:
            return TransitionCase.I
    elif kind is StateType.B:
        far_wives = _indices(far, husbands=False)
        if not load_husbands:
            return TransitionCase.II
        if load_wives <= load_husbands and (
            load_husbands - load_wives == far_wives
        ):
            return TransitionCase.IV
        if not load_wives and load_husbands == departure_husbands:
            return TransitionCase.III
    else:
        if load_wives and load_wives == load_husbands:
            return TransitionCase.VI
        if load_husbands == departure_husbands:
            return TransitionCase.V
    raise UnclassifiableTransitionError(
        f"Move {move} from {state} matches no transition case"
    )


def _classify_mc(move: McMove, state: McState) -> TransitionCase:
    x, departure_missionaries = state.bank(move.side)
    n = state.n
    y = n - x
    c, m = move.cannibals, move.missionaries
    kind = _type_from_count(departure_missionaries, n)

    if kind is StateType.A:
        if m == 0 and 0 < c <= x:
            return TransitionCase.I
    elif kind is StateType.B:
        if m == 0 and 0 < c <= x:
            return TransitionCase.II
        if m == y + c and 0 <= c <= x:
            return TransitionCase.IV
        if c == 0 and m == n:
            return TransitionCase.III
    else:
        if m == c and 0 < c <= x:
            return TransitionCase.VI
        if m == x and 0 <= c <= x:
            return TransitionCase.V
    raise UnclassifiableTransitionError(
        f"Move {move} from {state} matches no transition case"
    )


def classify_transition(
    move: Move, from_state: Union[HwState, McState]
) -> CaseLabel:
    """Return the case label of a transition.

    Precedence where two readings coincide: a whole-bank trip from a type
    (b) bank reads as iv rather than iii, and a whole-bank trip from a type
    (c) bank reads as vi rather than v. Both readings lead to the same
    state.

    Args:
        move: The move taken; it must depart from ``from_state.boat``.
        from_state: The state the trip starts from.

    Returns:
        CaseLabel carrying the case, flavor and departure side.

    Raises:
        UnclassifiableTransitionError: If no case applies.
    """
    if move.side is not from_state.boat:
        raise UnclassifiableTransitionError(
            f"Move {move} does not depart from the boat's bank in "
            f"{from_state}"
        )
    if isinstance(move, HwMove) and isinstance(from_state, HwState):
        return CaseLabel(_classify_hw(move, from_state), Flavor.HW, move.side)
    if isinstance(move, McMove) and isinstance(from_state, McState):
        return CaseLabel(_classify_mc(move, from_state), Flavor.MC, move.side)
    raise UnclassifiableTransitionError(
        f"Move {move} and state {from_state} are of different flavors"
    )
