"""Hypothesis strategies for permutations, states and paths."""

from hypothesis import strategies as st

from rivercross.model import Flavor, enumerate_states
from rivercross.symmetry import Permutation


def sizes(low: int = 2, high: int = 5) -> st.SearchStrategy[int]:
    return st.integers(min_value=low, max_value=high)


def permutations(n: int) -> st.SearchStrategy[Permutation]:
    return st.permutations(range(1, n + 1)).map(Permutation.of)


def hw_states(n: int) -> st.SearchStrategy:
    return st.sampled_from(enumerate_states(n, Flavor.HW))


def mc_states(n: int) -> st.SearchStrategy:
    return st.sampled_from(enumerate_states(n, Flavor.MC))


@st.composite
def acting_pairs(draw, low: int = 2, high: int = 5):
    """A permutation and an HW state of the same size."""
    n = draw(sizes(low, high))
    return draw(permutations(n)), draw(hw_states(n))
