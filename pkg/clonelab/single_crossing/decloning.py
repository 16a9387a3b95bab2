import logging
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..config import check_limit
from ..exceptions import PreconditionError
from ..family import canonical_key, crosses
from ..interface import CandidateId, CandidateSet
from ..profile import DecloneResult, Profile, declone
from ..search import find_declone, optimal_declone
from .recognition import check_voter_order, is_single_crossing, is_single_crossing_wrt, pair_signs, sign_changes

__all__ = (
    'crossing_pairs', 'crossing_closure', 'crossing_closures', 'laminar_closures', 'is_laminar',
    'sc_declone_fixed', 'brute_force_sc_declone_fixed', 'sc_declone_exact',
)

logger = logging.getLogger(__name__)


def crossing_pairs(profile: Profile, order: Sequence[int]) -> List[Tuple[CandidateId, CandidateId]]:
    """ The pairs whose preference switches more than once along `order` """
    check_voter_order(profile, order)
    first, second = np.triu_indices(profile.m, 1)
    violated = sign_changes(pair_signs(profile)[list(order)]) > 1
    return list(zip(first[violated].tolist(), second[violated].tolist()))


def crossing_closure(profile: Profile, x: CandidateId, y: CandidateId) -> CandidateSet:
    """ The smallest clone set containing both `x` and `y` """
    positions = profile.positions
    inside = np.zeros(profile.m, dtype=bool)
    inside[[x, y]] = True
    while True:
        # everything ranked between two members by some voter joins
        lo = np.where(inside, positions, profile.m).min(axis=1, keepdims=True)
        hi = np.where(inside, positions, -1).max(axis=1, keepdims=True)
        grown = ((positions >= lo) & (positions <= hi)).any(axis=0)
        if (grown == inside).all():
            return frozenset(np.flatnonzero(inside).tolist())
        inside = grown


def crossing_closures(profile: Profile, order: Sequence[int]) -> List[CandidateSet]:
    closures = {crossing_closure(profile, x, y) for x, y in crossing_pairs(profile, order)}
    return sorted(closures, key=canonical_key)


def is_laminar(sets: Sequence[CandidateSet]) -> bool:
    return not any(crosses(a, b) for a, b in combinations(sets, 2))


def laminar_closures(profile: Profile, order: Sequence[int]) -> List[CandidateSet]:
    """ The closures of the crossing pairs, with every two overlapping ones replaced by their union """
    sets = crossing_closures(profile, order)
    merged = True
    while merged:
        merged = False
        for a, b in combinations(sets, 2):
            if crosses(a, b):
                logger.debug('Merging the overlapping closures %s and %s', sorted(a), sorted(b))
                sets = [s for s in sets if s != a and s != b]
                if a | b not in sets:
                    sets.append(a | b)
                merged = True
                break

    return sorted(sets, key=canonical_key)


def sc_declone_fixed(profile: Profile, order: Sequence[int]) -> DecloneResult:
    sets = laminar_closures(profile, order)
    maximal = [s for s in sets if not any(s < t for t in sets)]
    result = declone(profile, maximal)
    logger.info('Decloned %d sets, %d of %d candidates remain', len(maximal), result.profile.m, profile.m)
    return result


def brute_force_sc_declone_fixed(profile: Profile, order: Sequence[int],
                                 limit: Optional[int] = None) -> DecloneResult:
    check_voter_order(profile, order)
    check_limit(profile.m, limit, 'exact_search_limit', 'The number of candidates')
    return optimal_declone(profile, lambda decloned: is_single_crossing_wrt(decloned, order))


def sc_declone_exact(profile: Profile, k: int, limit: Optional[int] = None) -> Optional[DecloneResult]:
    """ A single-crossing decloning with at least `k` candidates, if one exists """
    if k < 1:
        raise PreconditionError(f'The target must be positive, got {k}')
    check_limit(profile.m, limit, 'exact_search_limit', 'The number of candidates')
    if k > profile.m:
        return None
    return find_declone(profile, lambda decloned: is_single_crossing(decloned) is not None, k)
