"""Exception hierarchy shared by the library and the CLI."""


class ProxEnumError(Exception):
    """Base class for every error raised by proxenum."""


class VertexRangeError(ProxEnumError, IndexError):
    """A vertex id lies outside ``0..n-1``."""


class ArgumentError(ProxEnumError, ValueError):
    """An operation's precondition does not hold for its arguments."""


class ClassMembershipError(ArgumentError):
    """A graph was expected to belong to a class and does not."""


class CapabilityError(ProxEnumError):
    """The requested (class, mode) pair has no enumerator."""


class CapacityError(ProxEnumError):
    """Input exceeds a configured size cap."""


class GraphParseError(ProxEnumError, ValueError):
    """Malformed graph file."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
