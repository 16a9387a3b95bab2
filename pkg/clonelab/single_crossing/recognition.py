import logging
from itertools import permutations
from typing import List, Optional, Sequence

import networkx as nx
import numpy as np

from ..config import check_limit
from ..exceptions import PreconditionError
from ..interface import VoterOrder
from ..profile import Profile

__all__ = (
    'pair_signs', 'sign_changes', 'is_single_crossing_wrt', 'is_single_crossing', 'brute_force_sc',
    'single_crossing_orders', 'check_voter_order',
)

logger = logging.getLogger(__name__)


def pair_signs(profile: Profile) -> np.ndarray:
    """ `signs[i, k]` tells whether voter `i` prefers the smaller candidate of the `k`-th pair (np.triu_indices) """
    first, second = np.triu_indices(profile.m, 1)
    positions = profile.positions
    return positions[:, first] < positions[:, second]


def sign_changes(signs: np.ndarray) -> np.ndarray:
    """ The number of preference switches of each pair along the voters' axis (the second to last one) """
    return (signs[..., 1:, :] != signs[..., :-1, :]).sum(axis=-2)


def check_voter_order(profile: Profile, order: Sequence[int]):
    if sorted(order) != list(range(profile.n)):
        raise PreconditionError(f'The voters order must be a permutation of 0..{profile.n - 1}')


def is_single_crossing_wrt(profile: Profile, order: Sequence[int]) -> bool:
    check_voter_order(profile, order)
    return bool((sign_changes(pair_signs(profile)[list(order)]) <= 1).all())


def is_single_crossing(profile: Profile) -> Optional[VoterOrder]:
    """
    The voter disagreeing the most with voter 0 can always open the order.
    Every other voter must then follow all the voters that agree with the first one on some pair
    they disagree on, so the order is a topological order of this precedence graph.
    """
    signs = pair_signs(profile)
    first = int((signs != signs[0]).sum(axis=1).argmax())
    agree = (signs == signs[first]).astype(np.float32)

    graph = nx.from_numpy_array((agree @ (1 - agree).T) > 0, create_using=nx.DiGraph)
    if not nx.is_directed_acyclic_graph(graph):
        logger.debug('The precedence graph starting from voter %d has a cycle', first)
        return None

    order = tuple(nx.lexicographical_topological_sort(graph))
    if not is_single_crossing_wrt(profile, order):
        return None
    return order


def single_crossing_orders(profile: Profile, limit: Optional[int] = None) -> List[VoterOrder]:
    """ All the voter orders witnessing single-crossingness """
    check_limit(profile.n, limit, 'sc_oracle_limit', 'The number of voters')
    orders = np.array(list(permutations(range(profile.n))))
    valid = (sign_changes(pair_signs(profile)[orders]) <= 1).all(axis=-1)
    return [tuple(order) for order in orders[valid].tolist()]


def brute_force_sc(profile: Profile, limit: Optional[int] = None) -> Optional[VoterOrder]:
    orders = single_crossing_orders(profile, limit)
    if not orders:
        return None
    return orders[0]
