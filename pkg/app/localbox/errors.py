'''
Exception hierarchy shared by every localbox module.

All errors derive from ValueError so callers that only
care about "bad input" can keep catching ValueError.

(c) 2025
'''


class LocalBoxError(ValueError):
    """Base class for all localbox errors."""


class FormatError(LocalBoxError):
    """
    Raised when a graph or representation document cannot be parsed.

    Args:
        msg (str): Description of the problem.
        line (int | None): 1-based line number for line oriented formats.
        offset (int | None): 0-based byte offset for byte oriented formats.
    """

    def __init__(self, msg: str, line: int | None = None, offset: int | None = None):
        where = ""
        if line is not None:
            where = f" (line {line})"
        elif offset is not None:
            where = f" (offset {offset})"
        super().__init__(msg + where)
        self.line = line
        self.offset = offset


class DomainError(LocalBoxError):
    """An argument lies outside the mathematical domain of the operation."""


class PreconditionError(LocalBoxError):
    """A precondition of the operation does not hold for the given input."""


class ValidationError(LocalBoxError):
    """An input object (cover, family, block representation...) fails verification."""


class HypothesisError(LocalBoxError):
    """The hypothesis of the theorem an operation relies on is not satisfied."""


class ShapeError(LocalBoxError):
    """A representation does not have the required type (1,1) shape."""


class AuditError(LocalBoxError):
    """An audited guarantee failed. Always a bug, never a user error."""
