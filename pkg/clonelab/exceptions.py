class CloneLabError(Exception):
    pass


class ProfileError(CloneLabError, ValueError):
    """The profile is malformed"""


class ParseError(ProfileError):
    """The profile file doesn't follow the text format"""

    def __init__(self, message: str, line: int):
        super().__init__(f'line {line}: {message}')
        self.line = line


class DecloneError(CloneLabError, ValueError):
    """The sets can't be decloned: they overlap or are not contiguous"""


class NotACloneStructure(CloneLabError, ValueError):
    """The family violates one of the clone structure axioms"""

    def __init__(self, report):
        tags = ', '.join(violation.axiom for violation in report.violations)
        super().__init__(f'The family is not a clone structure: {tags}')
        self.report = report


class TreeError(CloneLabError, ValueError):
    """The PQ-tree is malformed"""


class PreconditionError(CloneLabError, ValueError):
    """The input doesn't satisfy the operation's requirements"""


class InstanceTooLarge(PreconditionError):
    """The exhaustive routine would not finish in reasonable time"""


class SerializerError(CloneLabError):
    """The current serializer can't work with the given object"""


class CompositionError(CloneLabError):
    """The composed profile doesn't implement the embedded clone structure"""
