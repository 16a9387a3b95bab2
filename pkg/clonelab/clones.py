from itertools import combinations
from typing import Optional

import numpy as np

from .config import check_limit
from .exceptions import PreconditionError
from .family import SetFamily
from .interface import Candidates
from .profile import Profile

__all__ = 'is_clone_set', 'all_clone_sets', 'brute_force_clone_sets'


def is_clone_set(profile: Profile, candidates: Candidates) -> bool:
    members = sorted(candidates)
    if not members:
        raise PreconditionError('A clone set must not be empty')
    if members[0] < 0 or members[-1] >= profile.m:
        raise PreconditionError(f'Unknown candidates in {members}')

    ranks = profile.positions[:, members]
    return bool((ranks.max(axis=1) - ranks.min(axis=1) == len(members) - 1).all())


def all_clone_sets(profile: Profile) -> SetFamily:
    """
    Every clone set is an interval of the first voter's order, so we grow each interval
    to the right and keep track of the span it occupies in all the other orders.
    """
    m = profile.m
    first = profile.orders[0]
    sets = []
    for start in range(m):
        ranks = profile.positions[:, first[start:]]
        span = np.maximum.accumulate(ranks, axis=1) - np.minimum.accumulate(ranks, axis=1)
        contiguous = (span == np.arange(m - start)).all(axis=0)
        for length in np.flatnonzero(contiguous):
            sets.append(first[start:start + length + 1].tolist())

    return SetFamily(m, sets)


def brute_force_clone_sets(profile: Profile, limit: Optional[int] = None) -> SetFamily:
    check_limit(profile.m, limit, 'clone_oracle_limit', 'The number of candidates')
    candidates = range(profile.m)
    return SetFamily(profile.m, (
        subset
        for size in range(1, profile.m + 1)
        for subset in combinations(candidates, size)
        if is_clone_set(profile, subset)
    ))
