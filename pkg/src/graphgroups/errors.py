"""Exception hierarchy. The CLI maps each class to an exit code."""


class GroupsError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInput(GroupsError, ValueError):
    """Malformed data: bad symbols, unknown ids, alphabet mismatches."""


class ParseError(InvalidInput):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class PreconditionError(GroupsError):
    """Input is well formed but violates an operation's precondition."""


class BoundExceeded(GroupsError):
    def __init__(self, message, live=None):
        self.live = live
        super().__init__(message)


class VerificationError(GroupsError):
    """A certificate failed an independent recheck."""
