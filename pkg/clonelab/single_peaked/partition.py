from enum import Enum
from typing import NamedTuple, Sequence

import numpy as np

from ..clones import is_clone_set
from ..exceptions import PreconditionError
from ..interface import CandidateId, Candidates, CandidateSet
from ..profile import Profile
from .axis import is_single_peaked_wrt

__all__ = 'ClonePartition', 'CloneType', 'clone_partition', 'classify_clone_type'


class CloneType(Enum):
    # contiguous along the axis
    FIRST = 'first'
    # split into two blocks around the peaks
    SECOND = 'second'


class ClonePartition(NamedTuple):
    """ Consecutive parts of the axis: a1 > d1 > p > d2 > a2 """
    a1: CandidateSet
    d1: CandidateSet
    p: CandidateSet
    d2: CandidateSet
    a2: CandidateSet


def _runs(profile: Profile, axis: Sequence[CandidateId], clone: Candidates):
    clone = frozenset(clone)
    if len(clone) < 2:
        raise PreconditionError('The clone set must have at least two candidates')
    if not is_clone_set(profile, clone):
        raise PreconditionError(f'{sorted(clone)} is not a clone set')
    if not is_single_peaked_wrt(profile, axis):
        raise PreconditionError('The profile is not single-peaked with respect to the axis')

    inside = np.isin(axis, sorted(clone))
    places = np.flatnonzero(inside)
    # split the members' axis positions wherever a gap occurs
    runs = np.split(places, np.flatnonzero(np.diff(places) > 1) + 1)
    if len(runs) > 2:
        raise PreconditionError(f'The clone set {sorted(clone)} is split into {len(runs)} parts along the axis')
    return runs


def clone_partition(profile: Profile, axis: Sequence[CandidateId], clone: Candidates) -> ClonePartition:
    runs = _runs(profile, axis, clone)
    axis = list(axis)

    def part(start, stop):
        return frozenset(axis[start:stop])

    first, last = runs[0][0], runs[-1][-1] + 1
    if len(runs) == 1:
        # contiguous: the leftmost member alone forms the first part
        left, right = part(first, first + 1), part(first + 1, last)
        middle = frozenset()
    else:
        left, right = part(first, runs[0][-1] + 1), part(runs[1][0], last)
        middle = part(runs[0][-1] + 1, runs[1][0])

    return ClonePartition(part(0, first), left, middle, right, part(last, len(axis)))


def classify_clone_type(profile: Profile, axis: Sequence[CandidateId], clone: Candidates) -> CloneType:
    return CloneType.FIRST if len(_runs(profile, axis, clone)) == 1 else CloneType.SECOND
