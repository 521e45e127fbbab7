"""
Symmetric-group action on the HW problem.

A permutation of the couple numbers {1..n} relabels people, and through
them sets, states, moves and paths. Relabelling preserves safety and maps
transitions to transitions, so orbits of states are well defined and are
in one-to-one correspondence with MC states: ``project`` forgets identities
(the map g) and ``section`` rebuilds the canonical representative with the
lowest indices on the left bank (the map h).
"""

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import FrozenSet, Iterable, Iterator, Sequence, Tuple

from rivercross.model import (
    HwMove,
    HwState,
    InvalidMoveError,
    InvalidStateError,
    McMove,
    McState,
    Person,
    ParseError,
    husbands,
    wives,
)
from rivercross.paths import InvalidPathError, Path


@dataclass(frozen=True)
class Permutation:
    """A bijection on {1..n} in one-line form.

    ``image[i - 1]`` is the image of ``i``. Products compose right to left:
    ``(p * q)(i) == p(q(i))``, so ``(p * q)·x == p·(q·x)``.
    """

    image: Tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.image:
            raise ValueError("A permutation acts on at least one couple")
        if sorted(self.image) != list(range(1, len(self.image) + 1)):
            raise ValueError(f"{list(self.image)} is not a permutation")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def of(cls, image: Sequence[int]) -> "Permutation":
        return cls(tuple(image))

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Parse the one-line form, e.g. ``[3,1,2]``."""
        body = text.strip().strip("[]")
        try:
            image = tuple(int(t) for t in body.split(",") if t.strip())
            return cls(image)
        except ValueError as e:
            raise ParseError(f"Invalid permutation '{text}': {e}") from e

    @property
    def n(self) -> int:
        return len(self.image)

    def __call__(self, i: int) -> int:
        return self.image[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if other.n != self.n:
            raise ValueError("Cannot compose permutations of different size")
        return Permutation(tuple(self(other(i)) for i in range(1, self.n + 1)))

    def inverse(self) -> "Permutation":
        inverse = [0] * self.n
        for i, target in enumerate(self.image, start=1):
            inverse[target - 1] = i
        return Permutation(tuple(inverse))

    def is_identity(self) -> bool:
        return self.image == tuple(range(1, self.n + 1))

    def is_rotation(self) -> bool:
        """Return True if this is a cyclic block rotation ``i -> i + k``."""
        shift = self.image[0] - 1
        return all(
            target == (i + shift) % self.n + 1
            for i, target in enumerate(self.image)
        )

    def __str__(self) -> str:
        return "[" + ",".join(str(i) for i in self.image) + "]"


def rotation(n: int, shift: int) -> Permutation:
    """The rotation ``i -> ((i - 1 + shift) mod n) + 1``.

    The block form ``(1..p, p+1..n) -> (n-p+1..n, 1..n-p)`` is
    ``rotation(n, n - p)``.
    """
    return Permutation(tuple((i + shift) % n + 1 for i in range(n)))


def rotation_subgroup(n: int) -> FrozenSet[Permutation]:
    """The cyclic subgroup of the n rotations."""
    return frozenset(rotation(n, k) for k in range(n))


@lru_cache(maxsize=None)
def all_permutations(n: int) -> Tuple[Permutation, ...]:
    """All n! permutations, identity first, in lexicographic order."""
    return tuple(
        Permutation(image)
        for image in itertools.permutations(range(1, n + 1))
    )


# ============================================================================
# The action
# ============================================================================


def act_on_person(pi: Permutation, person: Person) -> Person:
    return Person(person.role, pi(person.index))


def act_on_set(pi: Permutation, group: Iterable[Person]) -> FrozenSet[Person]:
    """Relabel every person's index through ``pi``."""
    return frozenset(act_on_person(pi, p) for p in group)


def act_on_state(pi: Permutation, state: HwState) -> HwState:
    """``pi·(L, R, loc) = (pi L, pi R, loc)``."""
    if pi.n != state.n:
        raise InvalidStateError(
            f"Permutation of size {pi.n} cannot act on n={state.n}"
        )
    return HwState(
        act_on_set(pi, state.left),
        act_on_set(pi, state.right),
        state.boat,
        state.n,
    )


def act_on_move(pi: Permutation, move: HwMove) -> HwMove:
    """``pi·(B, loc) = (pi B, loc)``."""
    outside = sorted(p.index for p in move.load if p.index > pi.n)
    if outside:
        raise InvalidMoveError(
            f"Permutation of size {pi.n} cannot relabel couple {outside[0]}"
        )
    return HwMove(act_on_set(pi, move.load), move.side)


def act_on_path(pi: Permutation, path: Path) -> Path:
    """Apply ``pi`` to every state and move of an HW path."""
    return Path(
        tuple(act_on_state(pi, s) for s in path.states),
        tuple(act_on_move(pi, f) for f in path.moves),
    )


# ============================================================================
# Quotient maps
# ============================================================================


def project(state: HwState) -> McState:
    """Forget identities: wives become cannibals, husbands missionaries."""
    left_wives = sum(1 for p in state.left if p.is_wife)
    left_husbands = len(state.left) - left_wives
    return McState.from_left(left_wives, left_husbands, state.boat, state.n)


def project_move(move: HwMove) -> McMove:
    return McMove(move.wife_count, move.husband_count, move.side)


def section(state: McState) -> HwState:
    """Canonical HW representative of an MC state.

    ``L = {w_1..w_c, h_1..h_m}`` for left counts ``(c, m)``; the right bank
    is everyone else.
    """
    cannibals, missionaries = state.left
    return HwState.from_left(
        wives(1, cannibals) | husbands(1, missionaries), state.boat, state.n
    )


def canonical(state: HwState) -> HwState:
    """Canonical representative of the orbit of ``state``."""
    return section(project(state))


def canonical_move(move: HwMove) -> HwMove:
    """Representative of the orbit of a move.

    A move orbit is fixed by its numbers of couples, lone wives and lone
    husbands; the representative numbers couples first, then lone wives,
    then lone husbands.
    """
    wife_ids = {p.index for p in move.load if p.is_wife}
    husband_ids = {p.index for p in move.load if p.is_husband}
    couples = len(wife_ids & husband_ids)
    lone_wives = len(wife_ids - husband_ids)
    lone_husbands = len(husband_ids - wife_ids)
    load = (
        wives(1, couples + lone_wives)
        | husbands(1, couples)
        | husbands(
            couples + lone_wives + 1, couples + lone_wives + lone_husbands
        )
    )
    return HwMove(load, move.side)


@dataclass(frozen=True)
class Orbit:
    """The orbit of an HW state under relabelling.

    Attributes:
        representative: Canonical member, ``section(project(member))``.
        members: Every relabelling of the representative.
    """

    representative: HwState
    members: FrozenSet[HwState]

    @property
    def size(self) -> int:
        return len(self.members)

    def __contains__(self, state: object) -> bool:
        return state in self.members

    def __iter__(self) -> Iterator[HwState]:
        return iter(sorted(self.members))

    def __len__(self) -> int:
        return len(self.members)


def orbit(state: HwState) -> Orbit:
    """Orbit of ``state``, computed by sweeping all n! permutations."""
    members = frozenset(
        act_on_state(pi, state) for pi in all_permutations(state.n)
    )
    return Orbit(canonical(state), members)


def stabilizer(state: HwState) -> Tuple[Permutation, ...]:
    """Permutations fixing ``state``."""
    return tuple(
        pi
        for pi in all_permutations(state.n)
        if act_on_state(pi, state) == state
    )


def orbit_count(states: Iterable[HwState]) -> int:
    """Number of distinct orbits among ``states``."""
    return len({canonical(s) for s in states})


def departure_sorting_permutation(state: HwState) -> Permutation:
    """Permutation that numbers the departure bank's wives first.

    The listing permutation sends ``1..p`` to the departure bank's wife
    numbers in ascending order and ``p+1..n`` to the other bank's wife
    numbers in ascending order; the result is its inverse. Applying it to
    ``state`` puts wives ``w_1..w_p`` on the departure bank.
    """
    departure = sorted(p.index for p in state.bank(state.boat) if p.is_wife)
    far = sorted(
        p.index for p in state.bank(state.boat.opposite) if p.is_wife
    )
    return Permutation(tuple(departure + far)).inverse()


def retarget_suffix(path: Path, step: int, pi: Permutation) -> Path:
    """Relabel a path from transition ``step`` onward by ``pi``.

    When ``pi`` fixes ``states[step - 1]``, the result is again a path: the
    prefix up to ``states[step - 1]`` is kept and every later state and
    move is replaced by its ``pi`` image.

    Raises:
        InvalidPathError: If ``pi`` does not fix ``states[step - 1]``.
    """
    pivot = path.states[step - 1]
    if act_on_state(pi, pivot) != pivot:
        raise InvalidPathError(
            f"{pi} does not stabilise {pivot}", step=step
        )
    tail = act_on_path(pi, path.segment(step - 1, path.length))
    return path.segment(0, step - 1).then(tail)


__all__ = [
    "Orbit",
    "Permutation",
    "act_on_move",
    "act_on_path",
    "act_on_person",
    "act_on_set",
    "act_on_state",
    "all_permutations",
    "canonical",
    "canonical_move",
    "departure_sorting_permutation",
    "orbit",
    "orbit_count",
    "project",
    "project_move",
    "retarget_suffix",
    "rotation",
    "rotation_subgroup",
    "section",
    "stabilizer",
]
