"""
Implementations under a domain restriction: single-crossing profiles for any clone structure,
and single-peaked profiles for trees whose Q-nodes have internal children only at the ends.
"""
import logging
from typing import Dict, List, Tuple

from ..axioms import is_clone_structure
from ..exceptions import NotACloneStructure, PreconditionError
from ..family import SetFamily
from ..interface import CandidateId
from ..pqtree import NodeKind, PQNode, PQTree, build_tree
from ..profile import Profile, reverse_order
from .composition import Labels, substitute
from .irreducible import implement_string, slide

__all__ = 'implement_single_crossing', 'implement_single_peaked_tree', 'embed_crossing'

logger = logging.getLogger(__name__)


def embed_crossing(outer: Profile, element: CandidateId, inner: Profile) -> Profile:
    """
    Both profiles must be single-crossing w.r.t. their voters' order.
    The outer voters receive the first inner order, then the last outer voter is repeated with the
    remaining inner orders. The inner profile is closed by the reverse of its first order if needed,
    so the embedded block shows up in both directions.
    """
    outers, inners = outer.rankings(), inner.rankings()
    if inners[-1] != reverse_order(inners[0]):
        inners.append(reverse_order(inners[0]))

    orders = [substitute(e, element, inners[0], inner.m) for e in outers]
    orders.extend(substitute(outers[-1], element, q, inner.m) for q in inners[1:])
    return Profile(orders)


def _implement_crossing(node: PQNode) -> Tuple[Profile, Labels]:
    if node.is_leaf:
        return Profile([[0]]), [node.candidate]

    k = len(node.children)
    if node.kind is NodeKind.Q or k == 2:
        profile = implement_string(k)
    else:
        profile = slide(k)

    labels: Labels = [None] * k
    for i in reversed(range(k)):
        child = node.children[i]
        if child.is_leaf:
            labels[i] = child.candidate
            continue
        inner, inner_labels = _implement_crossing(child)
        profile = embed_crossing(profile, i, inner)
        labels = labels[:i] + inner_labels + labels[i + 1:]

    return profile, labels


def implement_single_crossing(family: SetFamily) -> Profile:
    report = is_clone_structure(family)
    if not report.verdict:
        raise NotACloneStructure(report)

    profile, labels = _implement_crossing(build_tree(family).root)
    logger.info('Single-crossing implementation over %d candidates uses %d voters', family.ground, profile.n)
    return profile.relabel(labels)


def _check_restricted(tree: PQTree):
    for node in tree.nodes:
        if node.kind is NodeKind.Q and any(not child.is_leaf for child in node.children[1:-1]):
            raise PreconditionError(f'The Q-node {node!r} has an internal middle child')


def _outer_order(path: List[PQNode], axis: Dict[CandidateId, int]) -> List[CandidateId]:
    """
    Ranks the candidates outside path[0]: the ones under closer ancestors first,
    for each ancestor first the left side moving away from the block, then the right side.
    """
    result = []
    inner = path[0].leaves()
    for ancestor in path[1:]:
        added = ancestor.leaves() - inner
        start = min(axis[c] for c in inner)
        result.extend(sorted((c for c in added if axis[c] < start), key=axis.get, reverse=True))
        result.extend(sorted((c for c in added if axis[c] > start), key=axis.get))
        inner = ancestor.leaves()
    return result


def _descend(node: PQNode, path: List[PQNode], axis: Dict[CandidateId, int], orders: list):
    if node.is_leaf:
        return

    path = [node, *path]
    outside = _outer_order(path, axis)
    k = len(node.children)
    chosen = range(k) if node.kind is NodeKind.P else (0, k - 1)
    for i in chosen:
        block = node.children[i].frontier()
        left = [c for child in node.children[:i] for c in child.frontier()][::-1]
        right = [c for child in node.children[i + 1:] for c in child.frontier()]
        for head in (block, block[::-1]):
            orders.append(head + left + right + outside)
            orders.append(head + right + left + outside)

    for child in node.children:
        _descend(child, path, axis, orders)


def implement_single_peaked_tree(tree: PQTree) -> Profile:
    """
    A profile single-peaked w.r.t. the left-to-right leaf order of `tree`, whose clone structure is
    exactly the one represented by `tree`. Every Q-node may have internal children only at its ends.
    """
    _check_restricted(tree)
    if tree.root.is_leaf:
        return Profile([[0]])

    axis = {c: i for i, c in enumerate(tree.frontier())}
    orders: List[List[CandidateId]] = []
    _descend(tree.root, [], axis, orders)
    unique = list(dict.fromkeys(map(tuple, orders)))
    logger.info('Single-peaked implementation over %d candidates uses %d voters', tree.m, len(unique))
    return Profile(unique)
