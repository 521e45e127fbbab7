"""Unit tests for the HW and MC state model."""

import pytest

from rivercross.config import BudgetExceededError, Budgets
from rivercross.model import (
    Flavor,
    HwMove,
    HwState,
    InvalidMoveError,
    InvalidStateError,
    McMove,
    McState,
    ParseError,
    Person,
    Side,
    capacity,
    enumerate_states,
    everyone,
    final_state,
    husband,
    husbands,
    initial_state,
    is_safe_hw,
    is_safe_mc,
    parse_move,
    parse_state,
    state_count,
    state_from_dict,
    state_to_dict,
    successors,
    wife,
    wives,
)


# Test capacity formula for n = 2..10
@pytest.mark.parametrize(
    "n,expected",
    [(2, 2), (3, 2), (4, 3), (5, 3), (6, 4), (7, 4), (8, 4), (10, 4)],
)
def test_capacity(n, expected):
    """Least solvable capacity follows the case formula."""
    assert capacity(n) == expected


# Test capacity rejects n below 2
def test_capacity_rejects_small_n():
    """n = 1 is not an instance."""
    with pytest.raises(ValueError):
        capacity(1)


# Test person text form and ordering
def test_person_text_and_order():
    """Wives sort before husbands, each by index."""
    assert str(wife(2)) == "w2"
    assert str(husband(3)) == "h3"
    assert Person.parse("h10") == husband(10)
    assert sorted([husband(1), wife(3), wife(1)]) == [
        wife(1),
        wife(3),
        husband(1),
    ]


# Test person parsing rejects junk
@pytest.mark.parametrize("token", ["x1", "w", "w-1", "1w"])
def test_person_parse_rejects(token):
    """Malformed tokens raise ParseError."""
    with pytest.raises(ParseError):
        Person.parse(token)


# Test wife and husband blocks
def test_blocks():
    """Blocks are inclusive and empty when first > last."""
    assert wives(2, 3) == {wife(2), wife(3)}
    assert husbands(3, 2) == frozenset()
    assert len(everyone(4)) == 8


# Test HW safety rule
@pytest.mark.parametrize(
    "group,safe",
    [
        ([], True),
        ([wife(1), wife(2)], True),
        ([husband(1), husband(2)], True),
        ([wife(1), husband(1)], True),
        ([wife(1), husband(2)], False),
        ([wife(1), wife(2), husband(1)], False),
        ([wife(1), wife(2), husband(1), husband(2), husband(3)], True),
    ],
)
def test_is_safe_hw(group, safe):
    """A wife may be with other men only when her husband is present."""
    assert is_safe_hw(group) is safe


# Test MC safety rule
@pytest.mark.parametrize(
    "cannibals,missionaries,safe",
    [(3, 0, True), (1, 1, True), (2, 1, False), (1, 3, True), (0, 0, True)],
)
def test_is_safe_mc(cannibals, missionaries, safe):
    """Cannibals may not outnumber missionaries who are present."""
    assert is_safe_mc(cannibals, missionaries) is safe


# Test HW state text round trip and canonical form
def test_hw_state_text():
    """Canonical text lists wives then husbands on each bank."""
    state = HwState.parse("[h3 w3 h2 h1 | w2 w1 : R]")
    assert str(state) == "[w3 h1 h2 h3 | w1 w2 : R]"
    assert state.n == 3
    assert HwState.parse(str(state)) == state


# Test HW parse with an empty bank
def test_hw_state_parse_empty_bank():
    """An empty bank parses when n is given."""
    state = HwState.parse("[ | w1 w2 h1 h2 : R]", 2)
    assert state == HwState.final(2)


# Test HW state rejects duplicates and partial banks
@pytest.mark.parametrize(
    "text,error",
    [
        ("[w1 h1 | w1 : L]", InvalidStateError),
        ("[w1 | h1 : X]", ParseError),
        ("w1 | h1 : L", ParseError),
    ],
)
def test_hw_state_parse_rejects(text, error):
    """Malformed or inconsistent text raises."""
    with pytest.raises(error):
        HwState.parse(text)


# Test HW state must partition everyone
def test_hw_state_partition():
    """Banks that miss someone raise InvalidStateError."""
    with pytest.raises(InvalidStateError):
        HwState(frozenset({wife(1)}), frozenset(), Side.LEFT, 1)


# Test MC state text round trip
def test_mc_state_text():
    """Canonical MC text is [(c,m)|(c,m):side]."""
    state = McState.parse("[ (2, 3) | (1,0) : L ]")
    assert str(state) == "[(2,3)|(1,0):L]"
    assert state == McState.from_left(2, 3, Side.LEFT, 3)


# Test MC state rejects inconsistent counts
def test_mc_state_rejects_counts():
    """Missionary counts must sum to n."""
    with pytest.raises(InvalidStateError):
        McState((1, 2), (2, 2), Side.LEFT, 3)


# Test move text forms
def test_move_text():
    """HW and MC moves print with their departure bank."""
    assert str(HwMove(frozenset({wife(3), wife(2)}), Side.LEFT)) == (
        "{w2 w3 : L}"
    )
    assert str(McMove(2, 0, Side.LEFT)) == "{(2,0):L}"
    assert HwMove.parse("{w2 w3 : L}").wife_count == 2
    assert McMove.parse("{(1,1):R}") == McMove(1, 1, Side.RIGHT)


# Test flavor detection in parse helpers
def test_parse_detects_flavor():
    """Parentheses mark MC text."""
    assert parse_state("[(3,3)|(0,0):L]").flavor is Flavor.MC
    assert parse_state("[w1 | h1 : L]").flavor is Flavor.HW
    assert isinstance(parse_move("{(0,2):L}"), McMove)
    assert isinstance(parse_move("{h1 h2 : R}"), HwMove)


# Test admissible state counts against the closed form
@pytest.mark.parametrize(
    "n,flavor,expected",
    [
        (2, Flavor.HW, 20),
        (3, Flavor.HW, 44),
        (4, Flavor.HW, 92),
        (3, Flavor.MC, 20),
        (4, Flavor.MC, 26),
        (6, Flavor.MC, 38),
    ],
)
def test_enumerate_states_count(n, flavor, expected):
    """Brute-force enumeration matches the closed form."""
    states = enumerate_states(n, flavor)
    assert len(states) == expected
    assert state_count(n, flavor) == expected
    assert list(states) == sorted(states)


HW_STATE_COUNTS = {2: 20, 3: 44, 4: 92, 5: 188, 6: 380, 7: 764, 8: 1532}
MC_STATE_COUNTS = {2: 14, 3: 20, 4: 26, 5: 32, 6: 38, 7: 44, 8: 50}


# Test enumeration against the closed form over the whole supported range
@pytest.mark.parametrize(
    "n,flavor,expected",
    [
        pytest.param(
            n,
            Flavor.HW,
            count,
            marks=[pytest.mark.slow] if n >= 7 else [],
        )
        for n, count in HW_STATE_COUNTS.items()
    ]
    + [(n, Flavor.MC, count) for n, count in MC_STATE_COUNTS.items()],
)
def test_state_count_full_range(n, flavor, expected):
    """``2(3·2^n - 2)`` HW and ``2(3n + 1)`` MC states for n = 2..8."""
    assert state_count(n, flavor) == expected
    states = enumerate_states(n, flavor)
    assert len(states) == expected
    assert len(set(states)) == expected
    assert all(s.is_admissible() for s in states)


# Test enumeration respects the n budget
def test_enumerate_states_budget():
    """n above max_n raises before enumerating."""
    with pytest.raises(BudgetExceededError):
        enumerate_states(5, Flavor.HW, Budgets(max_n=4))


# Test enumeration rejects n below 2
def test_enumerate_states_small_n():
    """n = 1 raises ValueError."""
    with pytest.raises(ValueError):
        enumerate_states(1, Flavor.MC)


# Test initial and final states
def test_initial_and_final():
    """Everyone starts left with the boat and ends right."""
    assert initial_state(3, Flavor.MC) == McState((3, 3), (0, 0), Side.LEFT, 3)
    final = final_state(3, Flavor.HW)
    assert final.right == everyone(3)
    assert final.boat is Side.RIGHT


# Test MC successors of the initial state
def test_mc_initial_successors():
    """From (3,3) with b = 2 only (1,0), (2,0) and (1,1) are safe."""
    moves = {move for move, _ in successors(McState.initial(3), 2)}
    assert moves == {
        McMove(1, 0, Side.LEFT),
        McMove(2, 0, Side.LEFT),
        McMove(1, 1, Side.LEFT),
    }


# Test HW successors of the initial state
def test_hw_initial_successors():
    """Single wives, pairs of wives and couples: nine moves."""
    pairs = successors(HwState.initial(3), 2)
    assert len(pairs) == 9
    for move, target in pairs:
        assert move.is_valid(2)
        assert target.is_admissible()
        assert target.boat is Side.RIGHT
    targets = [target for _, target in pairs]
    assert targets == sorted(targets)


# Test successors reject capacity 0
def test_successors_rejects_zero_capacity():
    """b must be at least 1."""
    with pytest.raises(ValueError):
        successors(McState.initial(3), 0)


# Test apply rejects moves from the wrong bank or absent people
def test_apply_rejects():
    """Loads must come from the boat's bank."""
    state = HwState.initial(2)
    with pytest.raises(InvalidMoveError):
        state.apply(HwMove(frozenset({wife(1)}), Side.RIGHT))
    moved = state.apply(HwMove(frozenset({wife(1)}), Side.LEFT))
    with pytest.raises(InvalidMoveError):
        moved.apply(HwMove(frozenset({wife(2)}), Side.RIGHT))
    with pytest.raises(InvalidMoveError):
        McState.initial(3).apply(McMove(0, 0, Side.LEFT))


# Test move_to restores the move between consecutive states
def test_move_to():
    """The move between two states is unique."""
    source = McState.initial(3)
    target = McState.from_left(1, 3, Side.RIGHT, 3)
    assert source.move_to(target) == McMove(2, 0, Side.LEFT)
    with pytest.raises(InvalidMoveError):
        target.move_to(source.apply(McMove(1, 0, Side.LEFT)))


# Test dict forms mirror the fields
@pytest.mark.parametrize(
    "text",
    ["[w3 h1 h2 h3 | w1 w2 : R]", "[(1,1)|(2,2):R]"],
)
def test_state_dict_round_trip(text):
    """from_dict inverts to_dict."""
    state = parse_state(text)
    data = state_to_dict(state)
    assert data["boat"] == "R"
    assert state_from_dict(data) == state
