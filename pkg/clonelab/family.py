from typing import Dict, Iterable, Iterator, List, Optional, Tuple

from .exceptions import PreconditionError
from .interface import CandidateId, Candidates, CandidateSet

__all__ = (
    'SetFamily', 'canonical_key', 'string_of_sausages', 'fat_sausage', 'ring_of_sausages', 'embed_family',
    'collapse_family', 'subfamily', 'is_support', 'is_string_of_sausages', 'is_fat_sausage', 'crosses',
    'string_order',
)


def canonical_key(members: Candidates) -> Tuple[int, Tuple[int, ...]]:
    return len(members), tuple(sorted(members))


def crosses(x: Candidates, y: Candidates) -> bool:
    """ Nontrivial intersection: the sets meet, but each has a private element """
    return bool(x & y) and bool(x - y) and bool(y - x)


class SetFamily:
    """ A duplicate-free collection of subsets of 0..m-1, kept sorted by size, then lexicographically """

    def __init__(self, ground: int, sets: Iterable[Candidates]):
        unique = {frozenset(s) for s in sets}
        for s in unique:
            if any(c < 0 or c >= ground for c in s):
                raise PreconditionError(f'The set {sorted(s)} is not a subset of 0..{ground - 1}')

        self.ground = ground
        self.sets: Tuple[CandidateSet, ...] = tuple(sorted(unique, key=canonical_key))
        self._lookup = frozenset(unique)

    @property
    def ground_set(self) -> CandidateSet:
        return frozenset(range(self.ground))

    def __contains__(self, item):
        return frozenset(item) in self._lookup

    def __iter__(self) -> Iterator[CandidateSet]:
        return iter(self.sets)

    def __len__(self):
        return len(self.sets)

    def __eq__(self, other):
        if not isinstance(other, SetFamily):
            return NotImplemented
        return self.ground == other.ground and self._lookup == other._lookup

    def __hash__(self):
        return hash((self.ground, self._lookup))

    def __repr__(self):
        return f'SetFamily({self.ground}, {[sorted(s) for s in self.sets]})'

    def to_lists(self) -> List[List[int]]:
        return [sorted(s) for s in self.sets]


def string_of_sausages(m: int) -> SetFamily:
    return SetFamily(m, (range(i, j + 1) for i in range(m) for j in range(i, m)))


def fat_sausage(m: int) -> SetFamily:
    return SetFamily(m, [*([c] for c in range(m)), range(m)])


def ring_of_sausages(m: int) -> SetFamily:
    """
    Three string segments glued into a cycle: each segment and each pair of cyclically adjacent segments
    is a set. The family satisfies A1-A4, while the three segment pairs form a bicycle chain.
    """
    if m < 3:
        raise PreconditionError('A ring needs at least 3 candidates')
    sizes = [m // 3 + (i < m % 3) for i in range(3)]
    starts = [0, sizes[0], sizes[0] + sizes[1]]
    segments = [range(start, start + size) for start, size in zip(starts, sizes)]

    sets = [range(m)]
    for segment in segments:
        sets.extend(segment[i:j] for i in range(len(segment)) for j in range(i + 1, len(segment) + 1))
    for i in range(3):
        sets.append([*segments[i], *segments[(i + 1) % 3]])
    return SetFamily(m, sets)


def is_support(family: SetFamily, support: Candidates) -> bool:
    support = frozenset(support)
    return support in family and not any(crosses(support, s) for s in family)


def subfamily(family: SetFamily, support: Candidates) -> Tuple[SetFamily, List[CandidateId]]:
    """
    The restriction of `family` to the sets inside `support`, relabeled to 0..|support|-1.
    Returns the family together with the original label of each new candidate.
    """
    if not is_support(family, support):
        raise PreconditionError(f'{sorted(support)} is not a support of the family')
    labels = sorted(support)
    index = {c: i for i, c in enumerate(labels)}
    return SetFamily(len(labels), ([index[c] for c in s] for s in family if s <= support)), labels


def collapse_family(family: SetFamily, support: Candidates) -> Tuple[SetFamily, Dict[CandidateId, CandidateId]]:
    """
    Replaces the support by a single element. Survivors are renumbered in order, the collapsed element
    comes last. Returns the family and the old -> new map of the survivors.
    """
    support = frozenset(support)
    if not is_support(family, support):
        raise PreconditionError(f'{sorted(support)} is not a support of the family')
    survivors = [c for c in range(family.ground) if c not in support]
    relabel = {c: i for i, c in enumerate(survivors)}
    fresh = len(survivors)

    sets = []
    for s in family:
        if s < support:
            continue
        if s >= support:
            sets.append([relabel[c] for c in s - support] + [fresh])
        else:
            sets.append([relabel[c] for c in s])
    return SetFamily(fresh + 1, sets), relabel


def embed_family(outer: SetFamily, element: CandidateId, inner: SetFamily) -> SetFamily:
    """
    Replaces `element` of `outer` by the whole `inner` family. The inner candidates occupy the
    ids element..element+|inner|-1, the later outer candidates are shifted accordingly.
    """
    if not 0 <= element < outer.ground:
        raise PreconditionError(f'Candidate {element} is out of range')
    shift = inner.ground - 1
    block = frozenset(range(element, element + inner.ground))

    def move(c):
        return c if c < element else c + shift

    sets = [{c + element for c in s} for s in inner]
    for s in outer:
        if element in s:
            sets.append({move(c) for c in s if c != element} | block)
        else:
            sets.append({move(c) for c in s})
    return SetFamily(outer.ground + shift, sets)


def _string_order(family: SetFamily) -> Optional[List[CandidateId]]:
    neighbours: Dict[int, List[int]] = {c: [] for c in range(family.ground)}
    for s in family:
        if len(s) == 2:
            a, b = sorted(s)
            neighbours[a].append(b)
            neighbours[b].append(a)

    ends = [c for c, adjacent in neighbours.items() if len(adjacent) == 1]
    if family.ground == 1:
        return [0]
    if len(ends) != 2 or any(len(adjacent) > 2 for adjacent in neighbours.values()):
        return None

    order, previous = [min(ends)], None
    while len(order) < family.ground:
        following = [c for c in neighbours[order[-1]] if c != previous]
        if not following:
            return None
        previous = order[-1]
        order.append(following[0])
    return order


def string_order(family: SetFamily) -> Optional[List[CandidateId]]:
    """ The order of a string of sausages, starting from the smaller endpoint, or None """
    order = _string_order(family)
    if order is None:
        return None
    m = family.ground
    intervals = {frozenset(order[i:j]) for i in range(m) for j in range(i + 1, m + 1)}
    if intervals != set(family.sets):
        return None
    return order


def is_string_of_sausages(family: SetFamily) -> bool:
    return string_order(family) is not None


def is_fat_sausage(family: SetFamily) -> bool:
    return family == fat_sausage(family.ground)

