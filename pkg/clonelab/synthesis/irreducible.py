from ..exceptions import PreconditionError
from ..profile import Profile

__all__ = 'implement_string', 'implement_fat', 'slide'


def implement_string(m: int) -> Profile:
    """ A single order, whose clone sets are exactly its intervals """
    if m < 1:
        raise PreconditionError('At least one candidate is required')
    return Profile([range(m)])


def implement_fat(m: int) -> Profile:
    """ A profile whose only clone sets are the singletons and the ground set, with as few voters as possible """
    if m < 2:
        raise PreconditionError('A fat sausage needs at least 2 candidates')
    if m == 2:
        return Profile([[0, 1]])
    if m == 3:
        return Profile([[0, 1, 2], [1, 0, 2], [1, 2, 0]])

    k = m // 2
    xs, ys = list(range(k)), list(range(k, 2 * k))
    interleaved = [c for pair in zip(ys, xs) for c in pair]
    if m % 2 == 0:
        return Profile([xs + ys, interleaved])

    z = 2 * k
    return Profile([xs + ys[:-1] + [z, ys[-1]], interleaved + [z]])


def slide(m: int) -> Profile:
    """ Candidate 0 starts on top and moves one position down with every next voter """
    if m <= 2:
        raise PreconditionError('A slide needs at least 3 candidates')
    rest = list(range(1, m))
    return Profile([rest[:i] + [0] + rest[i:] for i in range(m)])
