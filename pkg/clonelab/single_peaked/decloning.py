"""
Decloning toward single-peakedness.

Both algorithms walk the PQ-tree of the profile's clone structure. A node stays collapsed into a single
candidate until expanding it keeps the profile single-peaked.
"""
import logging
from collections import deque
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple

from ..clones import all_clone_sets
from ..config import check_limit
from ..interface import CandidateSet
from ..pqtree import NodeKind, PQNode, PQTree, build_tree
from ..profile import DecloneResult, Profile, declone
from ..search import optimal_declone
from .axis import is_single_peaked

__all__ = (
    'Color', 'TreeColoring', 'clone_tree', 'coloring_profile', 'basic_declone_sp', 'declone_sp',
    'brute_force_optimal_sp_declone',
)

logger = logging.getLogger(__name__)


class Color(Enum):
    WHITE = 'white'
    BLACK = 'black'


# node id (preorder index) -> color
TreeColoring = Dict[int, Color]


def _accepts(profile: Profile) -> bool:
    return is_single_peaked(profile) is not None


def clone_tree(profile: Profile) -> PQTree:
    return build_tree(all_clone_sets(profile))


def _collapsed(tree: PQTree, colors: TreeColoring) -> List[CandidateSet]:
    parents = tree.parents()
    blocks = []
    for index, node in enumerate(tree.nodes):
        parent = parents[index]
        if node.is_leaf or colors[index] is Color.WHITE:
            continue
        if parent is None or colors[parent] is Color.WHITE:
            blocks.append(node.leaves())
    return blocks


def coloring_profile(profile: Profile, tree: PQTree, colors: TreeColoring) -> DecloneResult:
    """ Collapses the topmost black internal nodes """
    return declone(profile, _collapsed(tree, colors))


def basic_declone_sp(profile: Profile) -> Tuple[DecloneResult, TreeColoring]:
    tree = clone_tree(profile)
    colors = {index: Color.BLACK for index in range(len(tree.nodes))}
    queue = deque([0])
    while queue:
        index = queue.popleft()
        colors[index] = Color.WHITE
        if tree.nodes[index].is_leaf:
            continue

        if not _accepts(coloring_profile(profile, tree, colors).profile):
            logger.debug('Node %d stays black', index)
            colors[index] = Color.BLACK
            continue

        logger.debug('Node %d is white', index)
        queue.extend(tree.children(index))

    result = coloring_profile(profile, tree, colors)
    logger.info('Basic decloning keeps %d of %d candidates', result.profile.m, profile.m)
    return result, colors


def _wide(parts: Sequence[CandidateSet]) -> List[CandidateSet]:
    return [part for part in parts if len(part) > 1]


def _survivors(blocks: Sequence[CandidateSet], size: int) -> int:
    return size - sum(len(block) - 1 for block in blocks)


class _Expander:
    def __init__(self, profile: Profile):
        self.profile = profile

    def accepts(self, blocks: List[CandidateSet]) -> bool:
        return _accepts(declone(self.profile, blocks).profile)

    def expand(self, node: PQNode, outside: List[CandidateSet]) -> List[CandidateSet]:
        """ The best blocks to split the collapsed `node` into, given the blocks collapsed outside of it """
        if node.is_leaf:
            return []

        parts = [child.leaves() for child in node.children]
        if self.accepts(outside + _wide(parts)):
            result = []
            for index, child in enumerate(node.children):
                others = _wide(parts[:index] + parts[index + 1:])
                result.extend(self.expand(child, outside + others))
            return result

        best = [node.leaves()]
        if node.kind is NodeKind.Q:
            size = len(node.leaves())
            # either the first or the last child is split off, the rest stays collapsed
            for index, rest in ((0, parts[1:]), (-1, parts[:-1])):
                rest = frozenset().union(*rest)
                child = node.children[index]
                if not self.accepts(outside + _wide([child.leaves()]) + [rest]):
                    continue

                option = self.expand(child, outside + [rest]) + [rest]
                if _survivors(option, size) > _survivors(best, size):
                    best = option

            logger.debug('Q-node over %s is split into %s', sorted(node.leaves()), [sorted(b) for b in best])
        return best


def declone_sp(profile: Profile) -> DecloneResult:
    tree = clone_tree(profile)
    blocks = _Expander(profile).expand(tree.root, [])
    result = declone(profile, blocks)
    logger.info('Decloning keeps %d of %d candidates', result.profile.m, profile.m)
    return result


def brute_force_optimal_sp_declone(profile: Profile, limit: Optional[int] = None) -> DecloneResult:
    check_limit(profile.m, limit, 'sp_declone_oracle_limit', 'The number of candidates')
    return optimal_declone(profile, _accepts)
