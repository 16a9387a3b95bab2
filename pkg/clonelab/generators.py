from typing import List, Union

import numpy as np

from .exceptions import PreconditionError
from .pqtree import NodeKind, PQNode, PQTree, leaf
from .profile import Profile

__all__ = 'random_profile', 'random_tree'

# anything np.random.default_rng accepts
Seed = Union[int, np.random.Generator, None]


def random_profile(m: int, n: int, seed: Seed = None) -> Profile:
    """ `n` independent uniformly random orders over `m` candidates """
    if m < 1 or n < 1:
        raise PreconditionError('A profile needs at least one candidate and one voter')
    rng = np.random.default_rng(seed)
    return Profile([rng.permutation(m) for _ in range(n)])


def _random_node(leaves: List[int], rng: np.random.Generator) -> PQNode:
    if len(leaves) == 1:
        return leaf(leaves[0])
    if len(leaves) == 2 or rng.random() < .5:
        kind, smallest = NodeKind.P, 2
    else:
        kind, smallest = NodeKind.Q, 3

    k = int(rng.integers(smallest, len(leaves) + 1))
    cuts = np.sort(rng.choice(np.arange(1, len(leaves)), k - 1, replace=False))
    children = [_random_node(chunk.tolist(), rng) for chunk in np.split(np.array(leaves), cuts)]
    return PQNode(kind, None, tuple(children))


def random_tree(m: int, seed: Seed = None) -> PQTree:
    if m < 1:
        raise PreconditionError('A tree needs at least one leaf')
    rng = np.random.default_rng(seed)
    return PQTree(_random_node(rng.permutation(m).tolist(), rng).canonical())
