"""
Hard instances of single-crossing decloning, built from Exact Cover by 3-Sets.

Every set S_j gets its own block C_j of 6s candidates ordered by slides, and the blocks are
arranged by a slide over the s sets. Voters come in s groups, one per base element. A block can
stay intact only if the groups of its set's elements are ordered in a way specific to that set,
so the intact blocks of a single-crossing decloning form pairwise disjoint sets.
"""
import logging
from itertools import cycle, islice
from typing import List, NamedTuple, Optional, Sequence, Tuple

from ..exceptions import ParseError, PreconditionError
from ..interface import CandidateSet, LinearOrder
from ..profile import Profile
from ..synthesis import slide

__all__ = 'X3CInstance', 'Reduction', 'x3c_reduction', 'parse_x3c', 'has_exact_cover', 'validate_instance'

logger = logging.getLogger(__name__)


class X3CInstance(NamedTuple):
    # the base set is 0..3k-1
    k: int
    sets: Tuple[Tuple[int, int, int], ...]


class Reduction(NamedTuple):
    profile: Profile
    target: int
    # (set of the instance, the block of candidates encoding it)
    groups: Tuple[Tuple[CandidateSet, CandidateSet], ...]


def validate_instance(instance: X3CInstance):
    if instance.k < 1:
        raise PreconditionError(f'The base set must be non-empty, got k={instance.k}')
    if not instance.sets:
        raise PreconditionError('The instance has no sets')
    for members in instance.sets:
        if len(set(members)) != 3 or not all(0 <= b < 3 * instance.k for b in members):
            raise PreconditionError(f'{members} is not a 3-subset of 0..{3 * instance.k - 1}')


def parse_x3c(text: str, k: Optional[int] = None) -> X3CInstance:
    """ One set per line as three whitespace separated elements, `#` starts a comment """
    sets = []
    for number, line in enumerate(text.splitlines(), 1):
        line = line.split('#', 1)[0].strip()
        if not line:
            continue
        try:
            members = tuple(sorted(map(int, line.split())))
        except ValueError:
            raise ParseError(f'Expected three integers, got {line!r}', number) from None
        if len(members) != 3 or len(set(members)) != 3 or members[0] < 0:
            raise ParseError(f'Expected three distinct non-negative elements, got {line!r}', number)
        sets.append(members)

    if k is None:
        k = -(-(max((s[-1] for s in sets), default=-1) + 1) // 3)
    instance = X3CInstance(k, tuple(sets))
    validate_instance(instance)
    return instance


def has_exact_cover(instance: X3CInstance) -> bool:
    validate_instance(instance)
    sets = [frozenset(s) for s in set(instance.sets)]

    def cover(uncovered: frozenset) -> bool:
        if not uncovered:
            return True
        element = min(uncovered)
        return any(cover(uncovered - s) for s in sets if element in s and s <= uncovered)

    return cover(frozenset(range(3 * instance.k)))


def _swapped(orders: List[LinearOrder], index: int, group: int) -> List[LinearOrder]:
    # exchange the voters 2 * index and 2 * index + 1 inside each of the three groups
    orders = list(orders)
    for start in range(0, len(orders), group):
        a, b = start + 2 * index, start + 2 * index + 1
        orders[a], orders[b] = orders[b], orders[a]
    return orders


def _block(members: Sequence[int], element: int, copy: int, plain: List[LinearOrder],
           swapped: List[LinearOrder]) -> LinearOrder:
    x, y, z = sorted(members)
    group = len(plain) // 3
    if element < x:
        return plain[0]
    if element > z:
        return plain[-1]
    for third, (member, following) in enumerate(((x, y), (y, z), (z, None))):
        if element == member:
            return swapped[third * group + copy]
        if following is not None and element < following:
            return plain[(third + 1) * group - 1]
    raise AssertionError(element)


def x3c_reduction(instance: X3CInstance) -> Reduction:
    validate_instance(instance)
    k = instance.k
    # repeat sets until there are more of them than base elements
    sets = list(islice(cycle(instance.sets), max(len(instance.sets), 3 * k + 1)))
    s = len(sets)
    width, copies = 6 * s, 2 * s

    plain = slide(width).rankings()
    swapped = [_swapped(plain, j, copies) for j in range(s)]
    meta = slide(s).rankings()

    orders = []
    for element in range(s):
        for copy in range(copies):
            row = []
            for j in meta[element]:
                block = _block(sets[j], element, copy, plain, swapped[j])
                row.extend(width * j + c for c in block)
            orders.append(row)

    target = k * (width - 1) + s
    groups = tuple(
        (frozenset(members), frozenset(range(width * j, width * (j + 1)))) for j, members in enumerate(sets)
    )
    logger.info('Reduced an instance with %d sets to %d candidates, %d voters, target %d', s, width * s, len(orders),
                target)
    return Reduction(Profile(orders), target, groups)
