"""Exception hierarchy.

Domain errors (bad input) map to CLI exit code 1, resource errors to exit
code 2.  Internal errors flag a bug in a construction that should be total
on valid input.
"""


class LamstdError(Exception):
    exit_code = 1


class ParseError(LamstdError):
    def __init__(self, message: str, position: int, expected: frozenset[str] = frozenset()):
        self.position = position
        self.expected = expected
        detail = f"{message} at position {position}"
        if expected:
            detail += f" (expected one of: {', '.join(sorted(expected))})"
        super().__init__(detail)


class IndexOutOfRange(LamstdError):
    pass


class PreconditionViolated(LamstdError):
    pass


class InvalidTrace(LamstdError):
    pass


class NotNormalForm(LamstdError):
    pass


class EndpointMismatch(LamstdError):
    pass


class ShapeMismatch(LamstdError):
    pass


class ResourceLimit(LamstdError):
    exit_code = 2


class InternalError(LamstdError):
    """A construction produced an ill-formed certificate."""


class MonotonicityViolation(InternalError):
    pass


class NonLeftmostStep(InternalError):
    pass
