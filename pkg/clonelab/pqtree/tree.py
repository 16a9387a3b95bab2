from enum import Enum
from typing import Iterator, List, NamedTuple, Optional, Sequence, Tuple

from ..exceptions import PreconditionError, TreeError
from ..family import SetFamily
from ..interface import CandidateId, Candidates, CandidateSet

__all__ = (
    'NodeKind', 'PQNode', 'PQTree', 'leaf', 'p_node', 'q_node', 'tree_to_family', 'is_clone_in_tree', 'to_dot',
)


class NodeKind(Enum):
    LEAF = 'leaf'
    P = 'P'
    Q = 'Q'


class PQNode(NamedTuple):
    kind: NodeKind
    candidate: Optional[CandidateId] = None
    children: Tuple['PQNode', ...] = ()

    @property
    def is_leaf(self) -> bool:
        return self.kind is NodeKind.LEAF

    def frontier(self) -> List[CandidateId]:
        if self.is_leaf:
            return [self.candidate]
        return [c for child in self.children for c in child.frontier()]

    def leaves(self) -> CandidateSet:
        return frozenset(self.frontier())

    def min_leaf(self) -> CandidateId:
        return min(self.frontier())

    def canonical(self) -> 'PQNode':
        if self.is_leaf:
            return self
        children = [child.canonical() for child in self.children]
        if self.kind is NodeKind.P:
            children.sort(key=PQNode.min_leaf)
        elif children[0].min_leaf() > children[-1].min_leaf():
            children.reverse()
        return PQNode(self.kind, None, tuple(children))

    def __repr__(self):
        if self.is_leaf:
            return str(self.candidate)
        return f'{self.kind.value}({", ".join(map(repr, self.children))})'


def leaf(candidate: CandidateId) -> PQNode:
    return PQNode(NodeKind.LEAF, candidate)


def p_node(*children: PQNode) -> PQNode:
    return PQNode(NodeKind.P, None, children)


def q_node(*children: PQNode) -> PQNode:
    return PQNode(NodeKind.Q, None, children)


class PQTree:
    """
    An ordered tree whose leaves are the candidates 0..m-1.
    P-nodes may permute their children freely, Q-nodes may only reverse them.
    """

    def __init__(self, root: PQNode):
        self.root = root
        self._nodes = list(_preorder(root))
        self.validate()

    @property
    def m(self) -> int:
        return len(self.frontier())

    @property
    def nodes(self) -> Sequence[PQNode]:
        """ All the nodes in preorder: the index of a node in this list is its id """
        return self._nodes

    def children(self, index: int) -> List[int]:
        """ Ids of the children of the node `index` """
        result, position = [], index + 1
        for child in self._nodes[index].children:
            result.append(position)
            position += _size(child)
        return result

    def parents(self) -> List[Optional[int]]:
        parents: List[Optional[int]] = [None] * len(self._nodes)
        for index in range(len(self._nodes)):
            for child in self.children(index):
                parents[child] = index
        return parents

    def frontier(self) -> List[CandidateId]:
        return self.root.frontier()

    def canonical(self) -> 'PQTree':
        return PQTree(self.root.canonical())

    def validate(self):
        frontier = self.frontier()
        if sorted(frontier) != list(range(len(frontier))):
            raise TreeError(f'The leaves must be exactly 0..m-1, got {frontier}')
        for node in self._nodes:
            if node.is_leaf:
                if node.children or node.candidate is None:
                    raise TreeError('A leaf must carry a candidate and no children')
            elif node.candidate is not None:
                raise TreeError('Only leaves carry candidates')
            elif len(node.children) < 2 or (node.kind is NodeKind.Q and len(node.children) < 3):
                raise TreeError(f'Not enough children for a {node.kind.value}-node: {len(node.children)}')

    def __eq__(self, other):
        if not isinstance(other, PQTree):
            return NotImplemented
        return self.root == other.root

    def __hash__(self):
        return hash(self.root)

    def __repr__(self):
        return f'PQTree({self.root!r})'


def _preorder(node: PQNode) -> Iterator[PQNode]:
    yield node
    for child in node.children:
        yield from _preorder(child)


def _size(node: PQNode) -> int:
    return 1 + sum(map(_size, node.children))


def _consecutive_unions(node: PQNode) -> Iterator[CandidateSet]:
    blocks = [child.leaves() for child in node.children]
    k = len(blocks)
    for start in range(k):
        for stop in range(start + 2, k + 1):
            if stop - start < k:
                yield frozenset().union(*blocks[start:stop])


def tree_to_family(tree: PQTree) -> SetFamily:
    sets = []
    for node in tree.nodes:
        sets.append(node.leaves())
        if node.kind is NodeKind.Q:
            sets.extend(_consecutive_unions(node))
    return SetFamily(tree.m, sets)


def is_clone_in_tree(tree: PQTree, candidates: Candidates) -> bool:
    candidates = frozenset(candidates)
    if not candidates:
        raise PreconditionError('The set must not be empty')

    # descend to the lowest node containing the whole set
    node = tree.root
    if not candidates <= node.leaves():
        return False
    while True:
        if node.leaves() == candidates:
            return True
        inside = [child for child in node.children if candidates <= child.leaves()]
        if not inside:
            break
        node, = inside

    if node.kind is not NodeKind.Q:
        return False
    touched = [i for i, child in enumerate(node.children) if child.leaves() & candidates]
    if touched != list(range(touched[0], touched[-1] + 1)):
        return False
    return all(node.children[i].leaves() <= candidates for i in touched)


def to_dot(tree: PQTree, names: Optional[Sequence[str]] = None, colors: Optional[dict] = None) -> str:
    """
    Graphviz source of the tree: P-nodes are circles, Q-nodes are boxes.
    `colors` optionally maps node ids to 'white' or 'black' fills.
    """
    lines = ['digraph pqtree {', '  ordering=out;']
    for index, node in enumerate(tree.nodes):
        if node.is_leaf:
            label = str(node.candidate) if names is None else names[node.candidate]
            label = label.replace('\\', '\\\\').replace('"', '\\"')
            attributes = ['shape=plaintext', f'label="{label}"']
        else:
            attributes = ['shape=circle' if node.kind is NodeKind.P else 'shape=box', f'label="{node.kind.value}"']
        if colors is not None and index in colors:
            color = getattr(colors[index], 'value', colors[index])
            font = 'white' if color == 'black' else 'black'
            attributes.extend(['style=filled', f'fillcolor={color}', f'fontcolor={font}'])
        lines.append(f'  n{index} [{", ".join(attributes)}];')

    for index in range(len(tree.nodes)):
        for child in tree.children(index):
            lines.append(f'  n{index} -> n{child};')
    lines.append('}')
    return '\n'.join(lines) + '\n'
