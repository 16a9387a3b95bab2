import pytest
from profile_fixtures import random_structures

from clonelab import (
    NotACloneStructure, PQTree, SetFamily, all_clone_sets, build_tree, decomposition, fat_sausage, leaf, p_node,
    q_node, random_tree, ring_of_sausages, string_of_sausages, tree_to_family,
)


def test_decomposition(nested_strings):
    family = SetFamily(4, [[0], [1], [2], [3], [1, 2], [0, 1, 2, 3]])
    assert decomposition(family) == [{1, 2}]
    assert decomposition(string_of_sausages(4)) == [{0, 1, 2, 3}]
    assert decomposition(fat_sausage(4)) == [{0, 1, 2, 3}]
    assert decomposition(nested_strings) == [{1, 2, 3}]

    with pytest.raises(NotACloneStructure, match='A5') as e:
        decomposition(ring_of_sausages(6))
    assert e.value.report.axioms == ('A5',)


def test_build_tree(nested_strings, example_profile):
    family = SetFamily(4, [[0], [1], [2], [3], [1, 2], [0, 1, 2, 3]])
    assert build_tree(family) == PQTree(p_node(leaf(0), p_node(leaf(1), leaf(2)), leaf(3)))
    assert build_tree(nested_strings) == PQTree(q_node(leaf(0), q_node(leaf(1), leaf(2), leaf(3)), leaf(4)))
    assert repr(build_tree(all_clone_sets(example_profile)).root) == 'P(0, P(1, P(2, 3)))'

    assert build_tree(SetFamily(1, [[0]])) == PQTree(leaf(0))
    assert build_tree(string_of_sausages(2)) == PQTree(p_node(leaf(0), leaf(1)))
    assert build_tree(fat_sausage(5)) == PQTree(p_node(*map(leaf, range(5))))
    assert repr(build_tree(SetFamily(3, [[0], [1], [2], [0, 2], [1, 2], [0, 1, 2]])).root) == 'Q(0, 2, 1)'


def test_embedded_q_node():
    # Q(0, P(1, 2), 3)
    family = SetFamily(4, [[0], [1], [2], [3], [1, 2], [0, 1, 2], [1, 2, 3], [0, 1, 2, 3]])
    assert repr(build_tree(family).root) == 'Q(0, P(1, 2), 3)'


def test_round_trip(subtests):
    for seed in range(40):
        tree = random_tree(1 + seed % 9, seed)
        with subtests.test(tree=repr(tree)):
            assert build_tree(tree_to_family(tree)) == tree

    for family in random_structures(20, 7, seed=3):
        with subtests.test(family=family.to_lists()):
            assert tree_to_family(build_tree(family)) == family
