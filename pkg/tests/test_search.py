from profile_fixtures import random_profiles

from clonelab import Profile, all_clone_sets, declonings, find_declone, optimal_declone


def test_string_declonings():
    states = list(declonings(Profile([range(3)])))
    assert [count for count, _ in states] == [3, 2, 2, 1]
    assert [result.blocks for _, result in states] == [(), ({0, 1},), ({1, 2},), ({0, 1, 2},)]

    # every composition of 4 into intervals
    assert len(list(declonings(Profile([range(4)])))) == 8
    assert len(list(declonings(Profile([range(4)]), minimum=3))) == 4


def test_fat_declonings():
    counts = [count for count, _ in declonings(Profile([[0, 1, 2], [1, 0, 2], [1, 2, 0]]))]
    assert counts == [3, 1]


def test_states_are_clone_partitions(subtests):
    for profile in random_profiles(20, 6, 4, seed=1):
        with subtests.test(profile=profile.rankings()):
            clones = all_clone_sets(profile)
            seen = set()
            previous = profile.m
            for count, result in declonings(profile):
                assert count == result.profile.m <= previous
                assert all(block in clones for block in result.blocks)
                key = frozenset(result.blocks)
                assert key not in seen
                seen.add(key)
                previous = count

            assert count == 1


def test_find(example_profile):
    result = find_declone(example_profile, lambda profile: profile.m <= 2)
    assert result.profile.m == 2
    assert result.blocks == ({1, 2, 3},)

    assert find_declone(example_profile, lambda profile: False) is None
    assert find_declone(example_profile, lambda profile: profile.m == 1, minimum=2) is None
    assert optimal_declone(example_profile, lambda profile: True).profile == example_profile
