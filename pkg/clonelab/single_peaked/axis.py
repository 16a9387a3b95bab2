import logging
from itertools import permutations
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..config import check_limit
from ..exceptions import PreconditionError
from ..interface import CandidateId, LinearOrder
from ..profile import Profile, peaks

__all__ = (
    'Axis', 'is_compatible', 'is_single_peaked_wrt', 'is_single_peaked', 'single_peaked_axes', 'brute_force_axis',
    'extreme_peaks',
)

logger = logging.getLogger(__name__)

# the societal axis, leftmost candidate first
Axis = LinearOrder


def _axis_positions(axis: Sequence[CandidateId]) -> np.ndarray:
    positions = np.empty(len(axis), dtype=int)
    positions[list(axis)] = np.arange(len(axis))
    return positions


def _top_sets_are_intervals(places: np.ndarray) -> np.ndarray:
    # places[..., j] is the axis position of the j-th ranked candidate
    span = np.maximum.accumulate(places, axis=-1) - np.minimum.accumulate(places, axis=-1)
    return (span == np.arange(places.shape[-1])).all(axis=-1)


def is_compatible(ranking: Sequence[CandidateId], axis: Sequence[CandidateId]) -> bool:
    """ Every prefix of the ranking occupies an interval of the axis """
    if sorted(ranking) != sorted(axis):
        raise PreconditionError('The ranking and the axis must be over the same candidates')
    return bool(_top_sets_are_intervals(_axis_positions(axis)[list(ranking)]))


def is_single_peaked_wrt(profile: Profile, axis: Sequence[CandidateId]) -> bool:
    if sorted(axis) != list(range(profile.m)):
        raise PreconditionError(f'The axis must be a permutation of 0..{profile.m - 1}')
    return bool(_top_sets_are_intervals(_axis_positions(axis)[profile.orders]).all())


def is_single_peaked(profile: Profile) -> Optional[Axis]:
    """
    Builds the axis from both ends inwards: among the candidates not placed yet, the ones ranked
    last by some voter must be the outermost remaining ones. When there are two of them, or one
    that could go either way, the side is chosen so that every voter still prefers the newly placed
    candidate to the neighbour already placed on that side.
    """
    positions = profile.positions
    remaining = np.ones(profile.m, dtype=bool)
    left, right = [], []

    while remaining.any():
        ranks = np.where(remaining, positions, -1)
        lasts = ranks.argmax(axis=1)
        ends = sorted(set(lasts.tolist()))
        if len(ends) > 2:
            logger.debug('Candidates %s are all ranked last, no axis exists', ends)
            return None
        if remaining.sum() == 1:
            left.append(ends[0])
            break

        inner_left = left[-1] if left else None
        inner_right = right[-1] if right else None

        def beats(candidate, neighbour, voters):
            # the voters prefer `candidate` to the already placed `neighbour`
            if neighbour is None:
                return True
            return bool((positions[voters, candidate] < positions[voters, neighbour]).all())

        if len(ends) == 2:
            x, y = ends
            by_x, by_y = lasts == x, lasts == y
            if beats(x, inner_left, by_x) and beats(y, inner_right, by_y):
                left.append(x)
                right.append(y)
            elif beats(x, inner_right, by_x) and beats(y, inner_left, by_y):
                left.append(y)
                right.append(x)
            else:
                return None
        else:
            x, = ends
            everyone = np.ones(profile.n, dtype=bool)
            if beats(x, inner_left, everyone):
                left.append(x)
            elif beats(x, inner_right, everyone):
                right.append(x)
            else:
                return None

        remaining[ends] = False

    axis = tuple(left + right[::-1])
    if not is_single_peaked_wrt(profile, axis):
        return None
    return axis


def single_peaked_axes(profile: Profile, limit: Optional[int] = None) -> List[Axis]:
    """ All the axes witnessing single-peakedness """
    check_limit(profile.m, limit, 'axis_oracle_limit', 'The number of candidates')
    axes = np.array(list(permutations(range(profile.m))))
    # positions of the candidates along every axis at once
    places = np.empty_like(axes)
    places[np.arange(len(axes))[:, None], axes] = np.arange(profile.m)

    valid = np.ones(len(axes), dtype=bool)
    for ranking in profile.orders:
        valid &= _top_sets_are_intervals(places[:, ranking])
    return [tuple(axis) for axis in axes[valid].tolist()]


def brute_force_axis(profile: Profile, limit: Optional[int] = None) -> Optional[Axis]:
    axes = single_peaked_axes(profile, limit)
    if not axes:
        return None
    return axes[0]


def extreme_peaks(profile: Profile, axis: Sequence[CandidateId]) -> Tuple[CandidateId, CandidateId]:
    """ The leftmost and the rightmost peak along the axis """
    if not is_single_peaked_wrt(profile, axis):
        raise PreconditionError('The profile is not single-peaked with respect to the axis')
    top = peaks(profile)
    if len(top) < 2:
        raise PreconditionError('At least two distinct peaks are required')
    ordered = [c for c in axis if c in top]
    return ordered[0], ordered[-1]
