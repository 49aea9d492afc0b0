"""Exception types shared across the package."""


class BaslabError(Exception):
    """Base class for all package-specific errors."""


class SpecParseError(BaslabError):
    """A textual spec (root-system string, vector, quiver file) failed to parse."""

    def __init__(self, message, line=1, col=0):
        super().__init__(f"{message} (line {line}, column {col})")
        self.line = line
        self.col = col


class RankMismatchError(BaslabError):
    """Operands live in spaces of different rank."""


class DomainError(BaslabError):
    """Input outside an operation's stated precondition."""


class InternalCheckError(BaslabError):
    """A guaranteed-by-theory condition failed; indicates an implementation bug."""
