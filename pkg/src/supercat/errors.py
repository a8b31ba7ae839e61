"""Exception types shared across the package."""


class SupercatError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(SupercatError, ValueError):
    """A path string contains a character outside the chosen alphabet.

    ``index`` is the 0-based position of the offending character.
    """

    def __init__(self, message: str, index: int):
        super().__init__(message)
        self.index = index


class DomainError(SupercatError, ValueError):
    """An argument lies outside an operation's documented domain."""
