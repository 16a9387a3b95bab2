"""
Exhaustive search over the declonings of a profile.

Every sequence of collapses ends in a partition of the candidates into clone sets of the original
profile, so the states are such partitions. A state is expanded by collapsing one minimal clone set
made of at least two of its parts. States are visited in the order of decreasing candidate count.
"""
import heapq
import logging
from typing import Callable, FrozenSet, Iterator, List, Optional, Tuple

from .clones import all_clone_sets
from .family import canonical_key
from .interface import CandidateSet
from .profile import DecloneResult, Profile, declone

__all__ = 'Partition', 'declonings', 'optimal_declone', 'find_declone'

logger = logging.getLogger(__name__)

# only the blocks with at least two candidates
Partition = FrozenSet[CandidateSet]
Accept = Callable[[Profile], bool]


def _key(partition: Partition):
    return sorted(map(canonical_key, partition))


def _collapses(clones: List[CandidateSet], partition: Partition) -> List[CandidateSet]:
    candidates = []
    for clone in clones:
        if len(clone) < 2 or any(block & clone and not block <= clone for block in partition):
            continue
        inside = [block for block in partition if block <= clone]
        # a clone that is already a single part changes nothing
        if len(inside) == 1 and inside[0] == clone:
            continue
        candidates.append(clone)

    return [x for x in candidates if not any(y < x for y in candidates)]


def _merge(partition: Partition, clone: CandidateSet) -> Partition:
    return frozenset([block for block in partition if not block <= clone] + [clone])


def _result(profile: Profile, partition: Partition) -> DecloneResult:
    return declone(profile, sorted(partition, key=canonical_key))


def declonings(profile: Profile, minimum: int = 1) -> Iterator[Tuple[int, DecloneResult]]:
    """ Yields (candidate count, decloning) pairs with non-increasing counts, each partition once """
    m = profile.m
    clones = list(all_clone_sets(profile))
    start: Partition = frozenset()
    heap = [(-m, _key(start), start)]
    seen = {start}
    while heap:
        negative, _, partition = heapq.heappop(heap)
        if -negative < minimum:
            return

        yield -negative, _result(profile, partition)
        for clone in _collapses(clones, partition):
            child = _merge(partition, clone)
            if child not in seen:
                seen.add(child)
                count = m - sum(len(block) - 1 for block in child)
                heapq.heappush(heap, (-count, _key(child), child))


def find_declone(profile: Profile, accept: Accept, minimum: int = 1) -> Optional[DecloneResult]:
    """ The decloning with the most candidates, at least `minimum`, whose profile is accepted """
    visited = 0
    for count, result in declonings(profile, minimum):
        visited += 1
        if accept(result.profile):
            logger.info('Found an accepted decloning with %d candidates after %d states', count, visited)
            return result

    logger.info('No accepted decloning with at least %d candidates among %d states', minimum, visited)
    return None


def optimal_declone(profile: Profile, accept: Accept) -> DecloneResult:
    result = find_declone(profile, accept)
    # collapsing everything is always accepted by the restrictions we search for
    assert result is not None
    return result
