import json

import pytest

from clonelab import (
    PROFILE_SERIALIZER, ChainSerializer, ParseError, PQTree, Profile, ProfileError, ProfileJsonSerializer,
    ProfileTextSerializer, ReportModel, SerializerError, TreeError, X3CInstance, declone, declone_to_json,
    dump_profile, family_from_json, family_to_json, is_clone_structure, leaf, load_model, p_node, parse_profile,
    profile_from_json, profile_to_json, q_node, reduction_to_json, report_to_json,
    ring_of_sausages, string_of_sausages, to_json, tree_from_json, tree_to_json, x3c_reduction,
)


def test_text_format(example_profile, example_text):
    assert parse_profile(example_text) == example_profile
    assert parse_profile(example_text.encode()) == example_profile
    assert dump_profile(example_profile) == example_text

    profile = parse_profile('# three candidates\n3 2\n\n0, 1,2\n2,1 , 0  # reversed\n')
    assert profile == Profile([[0, 1, 2], [2, 1, 0]])
    assert dump_profile(profile) == '3 2\n0,1,2\n2,1,0\n'


def test_decloned_text(example_profile):
    decloned = declone(example_profile, [{2, 3}]).profile
    text = dump_profile(decloned)
    assert text == '3 3\nnames: a,b,{c+d}\na,b,{c+d}\nb,{c+d},a\na,b,{c+d}\n'

    parsed = parse_profile(text)
    assert parsed == decloned
    assert parsed.names == decloned.names
    assert dump_profile(parsed) == text

    twice = declone(decloned, [{1, 2}]).profile
    assert parse_profile(dump_profile(twice)).names == ('a', '{b+{c+d}}')


@pytest.mark.parametrize('name', ('x,y', 'x#y', ' x', 'x\ny'))
def test_unwritable_names(name):
    profile = Profile([[0, 1], [1, 0]], names=[name, 'b'])
    with pytest.raises(SerializerError, match="can't be written"):
        dump_profile(profile)

    # the chain falls back to JSON
    chain = ChainSerializer(ProfileTextSerializer(), ProfileJsonSerializer())
    assert chain.dumps(profile).startswith('{')
    assert chain.loads(chain.dumps(profile)).names == (name, 'b')


@pytest.mark.parametrize('text,line,message', (
    ('', 1, 'header'),
    ('# only a comment\n', 1, 'header'),
    ('x y\n', 1, 'header'),
    ('0 2\n', 1, 'at least one'),
    ('2 1\nnames: a\n0,1\n', 2, 'non-empty names'),
    ('2 1\nnames: a,\n0,1\n', 2, 'non-empty names'),
    ('2 1\nnames: a,a\n0,1\n', 2, 'unique'),
    ('2 1\nnames: a,b\na,c\n', 3, 'Unknown candidate'),
    ('2 1\n0,2\n', 2, 'out of range'),
    ('3 1\n0,1\n', 2, 'Expected 3 candidates'),
    ('2 1\n0,0\n', 2, 'repeated'),
    ('2 1\n0,1\n1,0\n', 3, 'found more'),
    ('# c\n2 2\n\n0,1\n', 4, 'found 1'),
    ('2 2\n', 1, 'found 0'),
))
def test_text_errors(text, line, message):
    with pytest.raises(ParseError, match=message) as e:
        parse_profile(text)
    assert e.value.line == line
    assert str(e.value).startswith(f'line {line}:')


def test_encoding():
    with pytest.raises(ProfileError, match='UTF-8'):
        parse_profile(b'\xff\xfe')


def test_json(example_profile):
    data = to_json(profile_to_json(example_profile))
    assert data.endswith('}\n')
    assert json.loads(data) == {'m': 4, 'names': list('abcd'), 'orders': [list(o) for o in example_profile.rankings()]}
    assert profile_from_json(data) == example_profile
    assert profile_from_json(json.loads(data)) == example_profile

    unnamed = Profile([[1, 0]])
    assert json.loads(to_json(profile_to_json(unnamed))) == {'m': 2, 'orders': [[1, 0]]}


@pytest.mark.parametrize('data', (
    '{"m": 3, "orders": [[0, 1]]}',
    '{"m": 2, "orders": [[0, 0]]}',
    '{"m": 2, "orders": [[0, 1]], "voters": 1}',
    '{"m": 2}',
    '{"m": 2, "orders": ',
))
def test_json_errors(data):
    with pytest.raises(ProfileError):
        profile_from_json(data)


def test_serializers(example_profile, example_text):
    text, json_ = ProfileTextSerializer(), ProfileJsonSerializer()
    assert text.loads(text.dumps(example_profile)) == example_profile
    assert json_.loads(json_.dumps(example_profile)) == example_profile

    with pytest.raises(SerializerError):
        json_.loads(example_text)

    assert PROFILE_SERIALIZER.loads(example_text) == example_profile
    assert PROFILE_SERIALIZER.loads(json_.dumps(example_profile)) == example_profile
    assert PROFILE_SERIALIZER.dumps(example_profile) == json_.dumps(example_profile)

    with pytest.raises(SerializerError, match='No serializer'):
        ChainSerializer(json_).loads(example_text)
    # a text file is recognized, so its errors are not swallowed
    with pytest.raises(ParseError):
        PROFILE_SERIALIZER.loads('4 3\na,b\n')


def test_family():
    family = string_of_sausages(3)
    model = family_to_json(family)
    assert model.m == 3
    assert model.sets == [[0], [1], [2], [0, 1], [1, 2], [0, 1, 2]]
    assert family_from_json(to_json(model)) == family

    with pytest.raises(SerializerError, match='FamilyModel'):
        family_from_json('{"sets": [[0]]}')


def test_tree():
    tree = PQTree(q_node(leaf(0), p_node(leaf(1), leaf(2)), leaf(3)))
    data = to_json(tree_to_json(tree))
    assert json.loads(data)['kind'] == 'Q'
    assert json.loads(data)['children'][0] == {'kind': 'leaf', 'candidate': 0, 'children': []}
    assert tree_from_json(data) == tree
    assert tree_from_json(json.loads(data)) == tree

    with pytest.raises(TreeError, match='Unknown node kind'):
        tree_from_json('{"kind": "R", "children": []}')
    with pytest.raises(TreeError, match='exactly'):
        tree_from_json({'kind': 'P', 'children': [{'kind': 'leaf', 'candidate': c} for c in (0, 3)]})
    with pytest.raises(TreeError):
        tree_from_json('{"kind": "P", "color": "red"}')


def test_report():
    report = is_clone_structure(ring_of_sausages(6))
    model = report_to_json(report)
    assert model.verdict is False
    assert {v.axiom for v in model.violations} == {'A5'}
    assert load_model(ReportModel, to_json(model)) == model

    assert json.loads(to_json(report_to_json(is_clone_structure(string_of_sausages(3))))) == {
        'verdict': True, 'violations': [],
    }


def test_declone(example_profile):
    model = declone_to_json(declone(example_profile, [{2, 3}]))
    data = json.loads(to_json(model))
    assert data['mapping'] == [{'members': [2, 3], 'candidate': 2}]
    assert data['survivors'] == {'0': 0, '1': 1}
    assert profile_from_json(data['profile']).rankings() == [(0, 1, 2), (1, 2, 0), (0, 1, 2)]


def test_reduction():
    model = reduction_to_json(x3c_reduction(X3CInstance(1, ((0, 1, 2),))))
    assert model.target == 27
    assert model.profile.m == 96
    assert [group.members for group in model.groups] == [[0, 1, 2]] * 4
    assert model.groups[1].candidates == list(range(24, 48))
