"""
Recognition of clone structures through the five axioms:

A1. singletons and the ground set are present, the empty set is not;
A2. intersecting sets have their union and intersection in the family;
A3. nontrivially intersecting sets have both differences in the family;
A4. each set has at most two proper minimal supersets;
A5. the family contains no bicycle chain.
"""
import logging
from itertools import combinations
from typing import List, NamedTuple, Optional, Sequence, Tuple

import networkx as nx

from .exceptions import PreconditionError
from .family import SetFamily, crosses
from .interface import Candidates, CandidateSet

__all__ = (
    'Violation', 'AxiomReport', 'BicycleChain', 'check_axioms_a1_a4', 'minimal_proper_supersets',
    'find_bicycle_chain', 'is_clone_structure', 'is_bicycle_chain',
)

logger = logging.getLogger(__name__)


class Violation(NamedTuple):
    axiom: str
    witness: Tuple[CandidateSet, ...]


class AxiomReport(NamedTuple):
    violations: Tuple[Violation, ...] = ()

    @property
    def verdict(self) -> bool:
        return not self.violations

    @property
    def axioms(self) -> Tuple[str, ...]:
        return tuple(violation.axiom for violation in self.violations)

    def __bool__(self):
        return self.verdict


class BicycleChain(NamedTuple):
    chain: Tuple[CandidateSet, ...]


def is_bicycle_chain(chain: Sequence[Candidates]) -> bool:
    k = len(chain)
    if k < 3:
        return False
    for i in range(k):
        previous, current, following = chain[i - 1], chain[i], chain[(i + 1) % k]
        if not crosses(previous, current):
            return False
        if previous & current & following:
            return False
        if not current <= previous | following:
            return False
    return True


def _check_a1(family: SetFamily) -> Optional[Violation]:
    for c in range(family.ground):
        if {c} not in family:
            return Violation('A1', (frozenset([c]),))
    if frozenset() in family:
        return Violation('A1', (frozenset(),))
    if family.ground_set not in family:
        return Violation('A1', (family.ground_set,))


def _check_a2(family: SetFamily) -> Optional[Violation]:
    for x, y in combinations(family.sets, 2):
        if x & y and (x | y not in family or x & y not in family):
            return Violation('A2', (x, y))


def _check_a3(family: SetFamily) -> Optional[Violation]:
    for x, y in combinations(family.sets, 2):
        if crosses(x, y) and (x - y not in family or y - x not in family):
            return Violation('A3', (x, y))


def _check_a4(family: SetFamily) -> Optional[Violation]:
    for x in family:
        supersets = minimal_proper_supersets(family, x)
        if len(supersets) > 2:
            return Violation('A4', (x, *supersets))


def check_axioms_a1_a4(family: SetFamily) -> AxiomReport:
    checks = _check_a1, _check_a2, _check_a3, _check_a4
    return AxiomReport(tuple(v for v in (check(family) for check in checks) if v is not None))


def minimal_proper_supersets(family: SetFamily, candidates: Candidates) -> List[CandidateSet]:
    candidates = frozenset(candidates)
    if candidates not in family:
        raise PreconditionError(f'{sorted(candidates)} is not in the family')

    supersets = [z for z in family if candidates < z]
    return [z for z in supersets if not any(candidates < y < z for y in supersets)]


def find_bicycle_chain(family: SetFamily) -> Optional[BicycleChain]:
    sets = family.sets
    for triple in combinations(sets, 3):
        if is_bicycle_chain(triple):
            return BicycleChain(triple)

    # longer chains are cycles in the graph over crossing pairs (X, Y) with edges (X, Y) -> (Y, Z)
    graph = nx.DiGraph()
    followers = {}
    for x in sets:
        followers[x] = [y for y in sets if crosses(x, y)]
        graph.add_nodes_from((x, y) for y in followers[x])

    for x, y in list(graph.nodes):
        for z in followers[y]:
            if not x & y & z and y <= x | z:
                graph.add_edge((x, y), (y, z))

    logger.debug('Pair graph: %d vertices, %d edges', graph.number_of_nodes(), graph.number_of_edges())
    try:
        cycle = nx.find_cycle(graph)
    except nx.NetworkXNoCycle:
        return None

    return BicycleChain(tuple(source[0] for source, _ in cycle))


def is_clone_structure(family: SetFamily) -> AxiomReport:
    report = check_axioms_a1_a4(family)
    chain = find_bicycle_chain(family)
    if chain is not None:
        report = AxiomReport(report.violations + (Violation('A5', chain.chain),))

    logger.info('Clone structure check over %d sets: %s', len(family), report.axioms or 'passed')
    return report
