import random

import pytest
from hypothesis import strategies as st

from altperm.blockperm import BlockPerm


@st.composite
def index_sets(draw, min_blocks=1, max_blocks=3, universe=tuple(range(1, 11))):
    k = draw(st.integers(min_blocks, max_blocks))
    elems = draw(st.permutations(universe))
    return tuple(sorted(elems[: 2 * k]))


@st.composite
def block_perms(draw, min_blocks=1, max_blocks=3, universe=tuple(range(1, 11))):
    I = draw(index_sets(min_blocks, max_blocks, universe))
    order = draw(st.permutations(I))
    return BlockPerm(tuple(order))


@pytest.fixture
def rng():
    return random.Random(987654321)
