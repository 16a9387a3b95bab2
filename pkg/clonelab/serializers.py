import json
from abc import ABC, abstractmethod
from contextlib import suppress
from typing import Dict, List, Optional, Sequence, Union

from .axioms import AxiomReport
from .compat import NoExtra, model_dump, model_rebuild, model_validate
from .exceptions import ParseError, ProfileError, SerializerError, TreeError
from .family import SetFamily
from .pqtree import NodeKind, PQNode, PQTree
from .profile import DecloneResult, Profile
from .single_crossing import Reduction

__all__ = (
    'Serializer', 'ProfileTextSerializer', 'ProfileJsonSerializer', 'ChainSerializer', 'PROFILE_SERIALIZER',
    'ProfileModel', 'FamilyModel', 'TreeModel', 'ViolationModel', 'ReportModel', 'BlockModel', 'DecloneModel',
    'AxisModel', 'VoterOrderModel', 'GroupModel', 'ReductionModel',
    'parse_profile', 'dump_profile', 'profile_to_json', 'profile_from_json', 'family_to_json', 'family_from_json',
    'tree_to_json', 'tree_from_json', 'report_to_json', 'declone_to_json', 'reduction_to_json',
    'to_json', 'load_model',
)

Text = Union[str, bytes]


class ProfileModel(NoExtra):
    m: int
    names: Optional[List[str]] = None
    orders: List[List[int]]


class FamilyModel(NoExtra):
    m: int
    sets: List[List[int]]


class TreeModel(NoExtra):
    kind: str
    candidate: Optional[int] = None
    children: List['TreeModel'] = []


model_rebuild(TreeModel)


class ViolationModel(NoExtra):
    axiom: str
    witness: List[List[int]]


class ReportModel(NoExtra):
    verdict: bool
    violations: List[ViolationModel]


class BlockModel(NoExtra):
    members: List[int]
    candidate: int


class DecloneModel(NoExtra):
    profile: ProfileModel
    mapping: List[BlockModel]
    # JSON keys are strings
    survivors: Dict[str, int]


class AxisModel(NoExtra):
    axis: List[int]


class VoterOrderModel(NoExtra):
    order: List[int]


class GroupModel(NoExtra):
    # a set of the instance and the block of candidates encoding it
    members: List[int]
    candidates: List[int]


class ReductionModel(NoExtra):
    profile: ProfileModel
    target: int
    groups: List[GroupModel]


def _decode(data: Text) -> str:
    if isinstance(data, bytes):
        try:
            return data.decode('utf-8')
        except UnicodeDecodeError as e:
            raise ProfileError('The input is not valid UTF-8') from e
    return data


def to_json(model: NoExtra) -> str:
    return json.dumps(model_dump(model, exclude_none=True), indent=2) + '\n'


def load_model(cls, data: Union[Text, dict], error=SerializerError):
    try:
        if not isinstance(data, dict):
            data = json.loads(_decode(data))
        return model_validate(cls, data)
    except ValueError as e:
        raise error(f'Invalid {cls.__name__}: {e}') from e


# profiles


def _significant_lines(text: str):
    for number, line in enumerate(text.split('\n'), 1):
        line = line.split('#', 1)[0].strip()
        if line:
            yield number, line


def parse_profile(data: Text) -> Profile:
    """
    Reads the text format: the header `m n`, an optional `names: a,b,...` line,
    then n orders of comma separated names or indices, most preferred first.
    Errors are reported with the number of the offending line in the file.
    """
    lines = list(_significant_lines(_decode(data)))
    if not lines:
        raise ParseError('The header `m n` is missing', 1)

    number, header = lines.pop(0)
    try:
        m, n = map(int, header.split())
    except ValueError:
        raise ParseError(f'Expected the header `m n`, got {header!r}', number) from None
    if m < 1 or n < 1:
        raise ParseError(f'A profile needs at least one candidate and one voter, got {header!r}', number)

    names = None
    if lines and lines[0][1].startswith('names:'):
        number, line = lines.pop(0)
        names = [name.strip() for name in line[len('names:'):].split(',')]
        if len(names) != m or not all(names):
            raise ParseError(f'Expected {m} non-empty names', number)
        if len(set(names)) != m:
            raise ParseError('Candidate names must be unique', number)
    lookup = {name: i for i, name in enumerate(names or ())}

    def candidate(token: str, number: int) -> int:
        if token in lookup:
            return lookup[token]
        try:
            index = int(token)
        except ValueError:
            raise ParseError(f'Unknown candidate {token!r}', number) from None
        if not 0 <= index < m:
            raise ParseError(f'Candidate {index} is out of range', number)
        return index

    orders = []
    for number, line in lines:
        if len(orders) == n:
            raise ParseError(f'Expected {n} orders, found more', number)
        order = [candidate(token.strip(), number) for token in line.split(',')]
        if len(order) != m:
            raise ParseError(f'Expected {m} candidates, got {len(order)}', number)
        if len(set(order)) != m:
            raise ParseError('A candidate is repeated', number)
        orders.append(order)

    if len(orders) != n:
        last = lines[-1][0] if lines else number
        raise ParseError(f'Expected {n} orders, found {len(orders)}', last)

    return Profile(orders, names)


def dump_profile(profile: Profile) -> str:
    lines = [f'{profile.m} {profile.n}']
    if profile.names is not None:
        for name in profile.names:
            if name != name.strip() or any(c in name for c in ',#\n'):
                raise SerializerError(f"The name {name!r} can't be written in the text format")
        lines.append('names: ' + ','.join(profile.names))
    for order in profile.rankings():
        lines.append(','.join(map(profile.name, order)))
    return '\n'.join(lines) + '\n'


def profile_to_json(profile: Profile) -> ProfileModel:
    names = None if profile.names is None else list(profile.names)
    return ProfileModel(m=profile.m, names=names, orders=[list(order) for order in profile.rankings()])


def profile_from_json(data: Union[Text, dict]) -> Profile:
    model = load_model(ProfileModel, data, ProfileError)
    profile = Profile(model.orders, model.names)
    if profile.m != model.m:
        raise ProfileError(f'Expected {model.m} candidates, got {profile.m}')
    return profile


class Serializer(ABC):
    @abstractmethod
    def dumps(self, profile: Profile) -> str:
        """ Writes the `profile` to a string """

    @abstractmethod
    def loads(self, data: Text) -> Profile:
        """ Reads the profile, raises SerializerError if the data is in a different format """


class ProfileTextSerializer(Serializer):
    def dumps(self, profile: Profile) -> str:
        return dump_profile(profile)

    def loads(self, data: Text) -> Profile:
        return parse_profile(data)


class ProfileJsonSerializer(Serializer):
    def dumps(self, profile: Profile) -> str:
        return to_json(profile_to_json(profile))

    def loads(self, data: Text) -> Profile:
        if not _decode(data).lstrip().startswith('{'):
            raise SerializerError('Not a JSON object')
        return profile_from_json(data)


class ChainSerializer(Serializer):
    def __init__(self, *serializers: Serializer):
        self.serializers = serializers

    def dumps(self, profile: Profile) -> str:
        for serializer in self.serializers:
            with suppress(SerializerError):
                return serializer.dumps(profile)

        raise SerializerError(f'No serializer was able to save the profile {profile!r}.')

    def loads(self, data: Text) -> Profile:
        for serializer in self.serializers:
            with suppress(SerializerError):
                return serializer.loads(data)

        raise SerializerError('No serializer was able to load the profile.')


PROFILE_SERIALIZER = ChainSerializer(ProfileJsonSerializer(), ProfileTextSerializer())


# families and trees


def family_to_json(family: SetFamily) -> FamilyModel:
    return FamilyModel(m=family.ground, sets=family.to_lists())


def family_from_json(data: Union[Text, dict]) -> SetFamily:
    model = load_model(FamilyModel, data)
    return SetFamily(model.m, model.sets)


def _node_to_json(node: PQNode) -> TreeModel:
    if node.is_leaf:
        return TreeModel(kind=node.kind.value, candidate=node.candidate)
    return TreeModel(kind=node.kind.value, children=list(map(_node_to_json, node.children)))


def _node_from_json(model: TreeModel) -> PQNode:
    try:
        kind = NodeKind(model.kind)
    except ValueError:
        raise TreeError(f'Unknown node kind {model.kind!r}') from None
    return PQNode(kind, model.candidate, tuple(map(_node_from_json, model.children)))


def tree_to_json(tree: PQTree) -> TreeModel:
    return _node_to_json(tree.root)


def tree_from_json(data: Union[Text, dict]) -> PQTree:
    return PQTree(_node_from_json(load_model(TreeModel, data, TreeError)))


# results


def _sets(sets: Sequence) -> List[List[int]]:
    return [sorted(s) for s in sets]


def report_to_json(report: AxiomReport) -> ReportModel:
    return ReportModel(verdict=report.verdict, violations=[
        ViolationModel(axiom=violation.axiom, witness=_sets(violation.witness)) for violation in report.violations
    ])


def declone_to_json(result: DecloneResult) -> DecloneModel:
    return DecloneModel(
        profile=profile_to_json(result.profile),
        mapping=[BlockModel(members=sorted(block), candidate=new) for block, new in result.mapping],
        survivors={str(old): new for old, new in result.survivors.items()},
    )


def reduction_to_json(reduction: Reduction) -> ReductionModel:
    return ReductionModel(
        profile=profile_to_json(reduction.profile), target=reduction.target,
        groups=[GroupModel(members=sorted(s), candidates=sorted(c)) for s, c in reduction.groups],
    )
