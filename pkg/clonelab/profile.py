import logging
from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from .exceptions import DecloneError, ProfileError
from .interface import CandidateId, Candidates, CandidateSet, LinearOrder, Orders

__all__ = 'Profile', 'DecloneResult', 'reverse_order', 'declone', 'peaks'

logger = logging.getLogger(__name__)


class Profile:
    """
    An ordered collection of strict rankings over the candidates 0..m-1.

    `orders[i, j]` is the candidate ranked `j`-th by voter `i`, most preferred first.
    """

    def __init__(self, orders: Orders, names: Optional[Sequence[str]] = None):
        orders = np.array(orders, dtype=int)
        if orders.ndim != 2 or orders.shape[0] == 0 or orders.shape[1] == 0:
            raise ProfileError('A profile needs at least one voter and one candidate')
        n, m = orders.shape
        if not (np.sort(orders, axis=1) == np.arange(m)).all():
            raise ProfileError(f'Every order must be a permutation of 0..{m - 1}')
        if names is not None:
            names = tuple(map(str, names))
            if len(names) != m:
                raise ProfileError(f'Expected {m} names, got {len(names)}')
            if len(set(names)) != m:
                raise ProfileError('Candidate names must be unique')

        positions = np.empty_like(orders)
        positions[np.arange(n)[:, None], orders] = np.arange(m)
        orders.flags.writeable = positions.flags.writeable = False

        self._orders = orders
        self._positions = positions
        self.names = names

    @property
    def orders(self) -> np.ndarray:
        return self._orders

    @property
    def positions(self) -> np.ndarray:
        """ `positions[i, c]` is the rank of candidate `c` in the order of voter `i` """
        return self._positions

    @property
    def m(self) -> int:
        return self._orders.shape[1]

    @property
    def n(self) -> int:
        return self._orders.shape[0]

    def order(self, voter: int) -> LinearOrder:
        return tuple(self._orders[voter].tolist())

    def rankings(self) -> List[LinearOrder]:
        return [tuple(row) for row in self._orders.tolist()]

    def name(self, candidate: CandidateId) -> str:
        if self.names is None:
            return str(candidate)
        return self.names[candidate]

    def prefers(self, voter: int, c: CandidateId, d: CandidateId) -> bool:
        return self._positions[voter, c] < self._positions[voter, d]

    def select(self, voters: Iterable[int]) -> 'Profile':
        return Profile(self._orders[list(voters)], self.names)

    def relabel(self, labels: Sequence[CandidateId]) -> 'Profile':
        """ Renames candidate `i` to `labels[i]` """
        labels = np.asarray(labels, dtype=int)
        return Profile(labels[self._orders])

    def __eq__(self, other):
        if not isinstance(other, Profile):
            return NotImplemented
        return self.names == other.names and np.array_equal(self._orders, other._orders)

    def __hash__(self):
        return hash((self.names, self._orders.tobytes(), self._orders.shape))

    def __repr__(self):
        return f'Profile(m={self.m}, n={self.n})'


class DecloneResult(NamedTuple):
    profile: Profile
    # (collapsed set of the original election, fresh candidate of the new one)
    mapping: Tuple[Tuple[CandidateSet, CandidateId], ...]
    survivors: Dict[CandidateId, CandidateId]

    @property
    def blocks(self) -> Tuple[CandidateSet, ...]:
        return tuple(block for block, _ in self.mapping)

    def preimage(self, candidates: Candidates) -> CandidateSet:
        """ The original candidates standing behind `candidates` of the decloned election """
        inverse = {new: frozenset([old]) for old, new in self.survivors.items()}
        inverse.update({new: block for block, new in self.mapping})
        return frozenset().union(*(inverse[c] for c in candidates))


def reverse_order(ranking: Sequence[CandidateId]) -> LinearOrder:
    return tuple(reversed(ranking))


def peaks(profile: Profile) -> CandidateSet:
    return frozenset(profile.orders[:, 0].tolist())


def declone(profile: Profile, sets: Sequence[Candidates]) -> DecloneResult:
    """
    Replaces each of the disjoint clone sets `sets` by a single fresh candidate.

    Surviving candidates are renumbered first, keeping their relative order,
    then the fresh candidates are appended in the order the sets were given.
    """
    sets = [frozenset(s) for s in sets]
    m = profile.m
    owner = np.full(m, -1)
    for index, block in enumerate(sets):
        if not block:
            raise DecloneError('Cannot declone an empty set')
        members = np.array(sorted(block))
        if members.max() >= m or members.min() < 0:
            raise DecloneError(f'The set {sorted(block)} contains unknown candidates')
        if (owner[members] >= 0).any():
            raise DecloneError(f'The set {sorted(block)} overlaps with another decloned set')
        owner[members] = index

        ranks = profile.positions[:, members]
        if not (ranks.max(axis=1) - ranks.min(axis=1) == len(block) - 1).all():
            raise DecloneError(f'The set {sorted(block)} is not contiguous in every order')

    survivors = {int(c): i for i, c in enumerate(np.flatnonzero(owner < 0))}
    fresh = [len(survivors) + index for index in range(len(sets))]
    mapping = tuple(zip(sets, fresh))
    if not sets:
        return DecloneResult(profile, mapping, survivors)

    relabel = np.empty(m, dtype=int)
    for old, new in survivors.items():
        relabel[old] = new
    for block, new in mapping:
        relabel[sorted(block)] = new

    orders = []
    for row in profile.orders:
        # keep the first member of each block, drop the rest
        new_row = relabel[row]
        keep = np.ones(m, dtype=bool)
        keep[1:] = ~((new_row[1:] == new_row[:-1]) & (owner[row[1:]] >= 0))
        orders.append(new_row[keep])

    logger.debug('Decloned %d sets: %d -> %d candidates', len(sets), m, len(orders[0]))
    names = None
    if profile.names is not None:
        names = [profile.names[old] for old in survivors]
        names.extend('{' + '+'.join(profile.names[c] for c in sorted(block)) + '}' for block in sets)
        if len(set(names)) != len(names):
            names = None

    return DecloneResult(Profile(orders, names), mapping, survivors)
