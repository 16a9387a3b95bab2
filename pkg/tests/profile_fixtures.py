from typing import Iterator

import numpy as np
import pytest
from hypothesis import strategies as st

from clonelab import Profile, SetFamily, all_clone_sets, random_profile, random_tree, tree_to_family


@st.composite
def profiles(draw, max_m: int = 6, max_n: int = 5, min_m: int = 1) -> Profile:
    m = draw(st.integers(min_m, max_m))
    n = draw(st.integers(1, max_n))
    return Profile([draw(st.permutations(range(m))) for _ in range(n)])


@st.composite
def single_peaked_profiles(draw, max_m: int = 6, max_n: int = 5) -> Profile:
    m = draw(st.integers(1, max_m))
    n = draw(st.integers(1, max_n))
    axis = draw(st.permutations(range(m)))
    orders = []
    for _ in range(n):
        # grow an interval of the axis around the peak
        left = right = draw(st.integers(0, m - 1))
        order = [axis[left]]
        while len(order) < m:
            if right == m - 1 or (left > 0 and draw(st.booleans())):
                left -= 1
                order.append(axis[left])
            else:
                right += 1
                order.append(axis[right])
        orders.append(order)
    return Profile(orders)


@st.composite
def blown_up_profiles(draw, max_m: int = 3, max_n: int = 4, max_block: int = 3) -> Profile:
    """
    A single-peaked profile with every candidate replaced by a block of up to `max_block` candidates.
    Each voter ranks a block forwards or backwards, often in the same direction as everybody else.
    """
    outer = draw(single_peaked_profiles(max_m=max_m, max_n=max_n))
    blocks, start = [], 0
    for _ in range(outer.m):
        size = draw(st.integers(1, max_block))
        blocks.append(list(range(start, start + size)))
        start += size

    uniform = draw(st.booleans())
    directions = [draw(st.booleans()) for _ in blocks]
    orders = []
    for ranking in outer.rankings():
        order = []
        for c in ranking:
            backwards = directions[c] if uniform else draw(st.booleans())
            order.extend(blocks[c][::-1] if backwards else blocks[c])
        orders.append(order)
    return Profile(orders)


def random_single_peaked(m: int, n: int, rng: np.random.Generator) -> Profile:
    axis = rng.permutation(m)
    orders = []
    for _ in range(n):
        left = right = int(rng.integers(m))
        order = [axis[left]]
        while len(order) < m:
            if right == m - 1 or (left > 0 and rng.random() < .5):
                left -= 1
                order.append(axis[left])
            else:
                right += 1
                order.append(axis[right])
        orders.append(order)
    return Profile(orders)


def random_profiles(count: int, max_m: int, max_n: int, seed: int = 0) -> Iterator[Profile]:
    rng = np.random.default_rng(seed)
    for _ in range(count):
        yield random_profile(int(rng.integers(1, max_m + 1)), int(rng.integers(1, max_n + 1)), rng)


def random_structures(count: int, max_m: int, seed: int = 0):
    """ Clone structures of random profiles together with random PQ-tree families """
    rng = np.random.default_rng(seed)
    for profile in random_profiles(count, max_m, 4, seed):
        yield all_clone_sets(profile)
        yield tree_to_family(random_tree(int(rng.integers(1, max_m + 1)), rng))


def family_inside(family: SetFamily, clone) -> SetFamily:
    """ The sets of `family` within `clone`, relabeled to 0..|clone|-1 """
    labels = sorted(clone)
    index = {c: i for i, c in enumerate(labels)}
    return SetFamily(len(labels), ([index[c] for c in s] for s in family if s <= clone))



@pytest.fixture
def rng():
    return np.random.default_rng(0)
