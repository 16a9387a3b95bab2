import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from profile_fixtures import profiles, random_structures

from clonelab import (
    CloneLabError, CompositionError, NotACloneStructure, PreconditionError, Profile, SetFamily, all_clone_sets, compose,
    embed_family, fat_sausage, implement_family, implement_fat, implement_string, ring_of_sausages, string_of_sausages,
    substitute,
)


def test_substitute():
    assert substitute([0, 1, 2], 1, [1, 0], 2) == [0, 2, 1, 3]
    assert substitute([2, 0, 1], 2, [0, 1, 2], 3) == [2, 3, 4, 0, 1]
    assert substitute([1, 0], 0, [0], 1) == [1, 0]


@pytest.mark.parametrize('outer,element,inner', (
    (implement_string(3), 1, implement_fat(3)),
    (implement_string(3), 1, implement_string(3)),
    (implement_fat(4), 0, implement_string(2)),
    (implement_fat(3), 2, implement_fat(5)),
    (implement_fat(5), 4, implement_string(4)),
))
def test_compose(outer, element, inner):
    profile = compose(outer, element, inner)
    assert profile.m == outer.m + inner.m - 1
    assert profile.n <= max(outer.n, inner.n, 2)
    assert all_clone_sets(profile) == embed_family(all_clone_sets(outer), element, all_clone_sets(inner))


def test_compose_trivial():
    outer = implement_fat(3)
    assert compose(outer, 1, Profile([[0]])) is outer
    with pytest.raises(PreconditionError, match='out of range'):
        compose(outer, 3, implement_fat(2))


def test_nested_strings(nested_strings, nested_strings_profile):
    assert nested_strings_profile.rankings() == [(0, 1, 2, 3, 4), (0, 3, 2, 1, 4)]
    assert all_clone_sets(nested_strings_profile) == nested_strings


@pytest.mark.parametrize('family', (
    string_of_sausages(1), string_of_sausages(6), fat_sausage(2), fat_sausage(7),
    embed_family(fat_sausage(3), 0, string_of_sausages(4)),
    embed_family(embed_family(fat_sausage(3), 2, fat_sausage(4)), 0, string_of_sausages(3)),
))
def test_implement(family):
    profile = implement_family(family)
    assert profile.n <= 3
    assert all_clone_sets(profile) == family


def test_implement_random(subtests):
    for family in random_structures(30, 8, seed=7):
        with subtests.test(family=family.to_lists()):
            profile = implement_family(family)
            assert profile.n <= 3
            assert all_clone_sets(profile) == family


@given(profiles(max_m=7, max_n=4), st.data())
@settings(max_examples=100, deadline=None)
def test_implementation_survives_reversal(profile, data):
    family = all_clone_sets(profile)
    implemented = implement_family(family)
    flipped = data.draw(st.sets(st.integers(0, implemented.n - 1)))
    orders = [ranking[::-1] if i in flipped else ranking for i, ranking in enumerate(implemented.rankings())]
    assert all_clone_sets(Profile(orders)) == family


def test_not_a_structure():
    with pytest.raises(NotACloneStructure) as e:
        implement_family(ring_of_sausages(6))
    assert e.value.report.axioms == ('A5',)


def test_compose_mismatch(monkeypatch):
    monkeypatch.setattr('clonelab.synthesis.composition.embed_family', lambda outer, element, inner: SetFamily(5, []))
    with pytest.raises(CompositionError, match='parasite') as e:
        compose(implement_string(3), 1, implement_string(3))
    assert isinstance(e.value, CloneLabError)
