from .decomposition import build_tree, decomposition
from .tree import NodeKind, PQNode, PQTree, is_clone_in_tree, leaf, p_node, q_node, to_dot, tree_to_family
