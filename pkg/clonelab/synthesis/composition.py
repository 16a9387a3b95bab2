import logging
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..axioms import is_clone_structure
from ..clones import all_clone_sets
from ..exceptions import CompositionError, NotACloneStructure, PreconditionError
from ..family import SetFamily, embed_family
from ..interface import CandidateId
from ..pqtree import NodeKind, PQNode, build_tree
from ..profile import Profile
from .irreducible import implement_fat, implement_string

__all__ = 'compose', 'implement_family', 'substitute'

logger = logging.getLogger(__name__)

Labels = List[Optional[CandidateId]]


def substitute(outer: Sequence[CandidateId], element: CandidateId, block: Sequence[CandidateId],
               size: int) -> List[CandidateId]:
    """
    Replaces `element` in the `outer` order by `block` over 0..size-1.
    The block takes the ids element..element+size-1, later outer ids are shifted.
    """
    result = []
    for c in outer:
        if c == element:
            result.extend(element + b for b in block)
        else:
            result.append(c if c < element else c + size - 1)
    return result


def _pad(orders: List[np.ndarray], n: int) -> List[np.ndarray]:
    return orders + [orders[-1]] * (n - len(orders))


def compose(outer: Profile, element: CandidateId, inner: Profile) -> Profile:
    """
    Embeds the clone structure of `inner` into `outer` in place of `element`.
    The plain substitution is kept when it is exact, otherwise the last voter gets the reversed inner block.
    """
    if not 0 <= element < outer.m:
        raise PreconditionError(f'Candidate {element} is out of range for {outer.m} candidates')
    if inner.m == 1:
        return outer

    expected = embed_family(all_clone_sets(outer), element, all_clone_sets(inner))
    n = max(outer.n, inner.n)
    outers, inners = _pad(list(outer.orders), n), _pad(list(inner.orders), n)

    def build(flip):
        blocks = list(inners)
        if flip:
            blocks[-1] = blocks[-1][::-1]
        return Profile([substitute(e, element, q, inner.m) for e, q in zip(outers, blocks)])

    plain = build(False)
    if all_clone_sets(plain) == expected:
        return plain

    if n == 1:
        outers, inners = outers * 2, inners * 2
    flipped = build(True)
    if all_clone_sets(flipped) != expected:
        raise CompositionError('The flipped composition produced parasite clones')
    logger.debug('Flipped the last voter to embed %d candidates at %d', inner.m, element)
    return flipped


def _implement(node: PQNode) -> Tuple[Profile, Labels]:
    if node.is_leaf:
        return Profile([[0]]), [node.candidate]

    k = len(node.children)
    profile = implement_fat(k) if node.kind is NodeKind.P else implement_string(k)
    labels: Labels = [None] * k
    # the later slots first, so that the ids of the earlier ones don't move
    for i in reversed(range(k)):
        child = node.children[i]
        if child.is_leaf:
            labels[i] = child.candidate
            continue

        inner, inner_labels = _implement(child)
        profile = compose(profile, i, inner)
        labels = labels[:i] + inner_labels + labels[i + 1:]

    return profile, labels


def implement_family(family: SetFamily) -> Profile:
    """ A profile with at most 3 voters whose clone structure is exactly `family` """
    report = is_clone_structure(family)
    if not report.verdict:
        raise NotACloneStructure(report)

    profile, labels = _implement(build_tree(family).root)
    logger.info('Implemented %d sets over %d candidates with %d voters', len(family), family.ground, profile.n)
    return profile.relabel(labels)
