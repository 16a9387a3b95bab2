import logging
from typing import List, Sequence

import networkx as nx

from ..axioms import is_clone_structure
from ..exceptions import NotACloneStructure
from ..family import SetFamily, canonical_key, is_fat_sausage, is_support, string_order, subfamily
from ..interface import CandidateId, CandidateSet
from .tree import PQNode, PQTree, leaf, p_node, q_node

__all__ = 'decomposition', 'build_tree'

logger = logging.getLogger(__name__)


def _ensure_clone_structure(family: SetFamily):
    report = is_clone_structure(family)
    if not report.verdict:
        raise NotACloneStructure(report)


def _decompose(family: SetFamily) -> List[CandidateSet]:
    wide = [s for s in family if len(s) > 1]
    minimal = [s for s in wide if not any(t < s for t in wide)]

    # consecutive candidates of a string are linked by 2-element sets
    links = nx.Graph()
    links.add_edges_from(tuple(s) for s in wide if len(s) == 2)

    members = set()
    for candidates in minimal:
        if len(candidates) > 2:
            members.add(candidates)
            continue

        support = frozenset(nx.node_connected_component(links, min(candidates)))
        if is_support(family, support):
            members.add(support)

    return sorted(members, key=canonical_key)


def decomposition(family: SetFamily) -> List[CandidateSet]:
    _ensure_clone_structure(family)
    return _decompose(family)


def _relabel(node: PQNode, labels: Sequence[CandidateId]) -> PQNode:
    if node.is_leaf:
        return leaf(labels[node.candidate])
    return PQNode(node.kind, None, tuple(_relabel(child, labels) for child in node.children))


def _graft(node: PQNode, survivors: Sequence[CandidateId], subtrees: Sequence[PQNode]) -> PQNode:
    if node.is_leaf:
        if node.candidate < len(survivors):
            return leaf(survivors[node.candidate])
        return subtrees[node.candidate - len(survivors)]
    return PQNode(node.kind, None, tuple(_graft(child, survivors, subtrees) for child in node.children))


def _build(family: SetFamily) -> PQNode:
    m = family.ground
    if m == 1:
        return leaf(0)

    members = _decompose(family)
    if members == [family.ground_set]:
        if m == 2 or is_fat_sausage(family):
            return p_node(*map(leaf, range(m)))
        return q_node(*map(leaf, string_order(family)))

    subtrees = []
    for support in members:
        inner, labels = subfamily(family, support)
        subtrees.append(_relabel(_build(inner), labels))

    # collapse all the members at once: survivors first, then one element per member
    owner = {c: i for i, support in enumerate(members) for c in support}
    survivors = [c for c in range(m) if c not in owner]
    relabel = {c: i for i, c in enumerate(survivors)}
    relabel.update({c: len(survivors) + i for c, i in owner.items()})
    collapsed = SetFamily(len(survivors) + len(members), (
        {relabel[c] for c in s} for s in family
        if not any(s < support for support in members)
    ))
    logger.debug('Collapsed %d decomposition members: %d -> %d candidates', len(members), m, collapsed.ground)

    return _graft(_build(collapsed), survivors, subtrees)


def build_tree(family: SetFamily) -> PQTree:
    _ensure_clone_structure(family)
    tree = PQTree(_build(family).canonical())
    logger.info('Built a PQ-tree with %d nodes over %d candidates', len(tree.nodes), tree.m)
    return tree
