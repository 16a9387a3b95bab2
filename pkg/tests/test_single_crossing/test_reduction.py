import pytest

from clonelab import (
    ParseError, PreconditionError, X3CInstance, all_clone_sets, has_exact_cover, is_single_crossing, parse_x3c,
    sc_declone_exact, validate_instance, x3c_reduction,
)


def test_parse():
    instance = parse_x3c('# two sets\n2 1 0\n\n3 4 5  # the second one\n')
    assert instance == X3CInstance(2, ((0, 1, 2), (3, 4, 5)))
    assert parse_x3c('0 1 2\n', k=2).k == 2
    assert parse_x3c('0 1 3\n').k == 2


@pytest.mark.parametrize('text,line', (
    ('0 1 2\n0 1\n', 2),
    ('0 1 2\n\n0 1 x\n', 3),
    ('0 0 1\n', 1),
    ('0 1 -2\n', 1),
    ('0 1 2 3\n', 1),
))
def test_parse_errors(text, line):
    with pytest.raises(ParseError, match=f'line {line}:') as e:
        parse_x3c(text)
    assert e.value.line == line


def test_invalid_instances():
    with pytest.raises(PreconditionError, match='no sets'):
        parse_x3c('# nothing here\n', k=1)
    with pytest.raises(PreconditionError, match='not a 3-subset'):
        parse_x3c('0 1 5\n', k=1)
    with pytest.raises(PreconditionError, match='non-empty'):
        validate_instance(X3CInstance(0, ((0, 1, 2),)))


def test_exact_cover():
    assert has_exact_cover(X3CInstance(1, ((0, 1, 2),)))
    assert has_exact_cover(X3CInstance(2, ((0, 1, 2), (1, 2, 3), (3, 4, 5))))
    assert not has_exact_cover(X3CInstance(2, ((0, 1, 2), (0, 3, 4), (1, 3, 5), (2, 4, 5))))
    assert not has_exact_cover(X3CInstance(2, ((0, 1, 2), (2, 3, 4))))


def test_reduction_shape():
    reduction = x3c_reduction(X3CInstance(1, ((0, 1, 2),)))
    profile = reduction.profile
    # the single set is repeated 4 times, each copy gets 24 candidates
    assert profile.m == 96
    assert profile.n == 32
    assert reduction.target == 27
    assert len(reduction.groups) == 4
    assert all(members == {0, 1, 2} and len(block) == 24 for members, block in reduction.groups)
    assert frozenset().union(*(block for _, block in reduction.groups)) == set(range(96))

    wide = [s for s in all_clone_sets(profile) if 1 < len(s) < profile.m]
    assert sorted(wide, key=min) == [block for _, block in reduction.groups]
    assert is_single_crossing(profile) is None


def test_yes_instance():
    reduction = x3c_reduction(X3CInstance(1, ((0, 1, 2),)))
    result = sc_declone_exact(reduction.profile, reduction.target, limit=reduction.profile.m)
    assert result is not None
    assert result.profile.m == reduction.target
    assert is_single_crossing(result.profile) is not None
    # exactly one copy of the set stays intact
    assert len(result.blocks) == 3

    assert sc_declone_exact(reduction.profile, reduction.target + 1, limit=reduction.profile.m) is None


@pytest.mark.slow
@pytest.mark.parametrize('sets,answer', (
    (((0, 1, 2), (3, 4, 5)), True),
    (((0, 1, 2), (0, 3, 4), (1, 3, 5), (2, 4, 5)), False),
))
def test_feasibility_matches_cover(sets, answer):
    instance = X3CInstance(2, sets)
    assert has_exact_cover(instance) == answer

    reduction = x3c_reduction(instance)
    assert reduction.profile.m == 294
    assert reduction.target == 89
    result = sc_declone_exact(reduction.profile, reduction.target, limit=reduction.profile.m)
    assert (result is not None) == answer
    if answer:
        intact = [members for members, block in reduction.groups if block not in result.blocks]
        assert sorted(map(sorted, intact)) == [[0, 1, 2], [3, 4, 5]]
