"""Exception hierarchy shared by the library and the command line."""


class GwaError(Exception):
    """Base class for every error raised by :mod:`gwa`."""


class InvalidArgument(GwaError, ValueError):
    """An argument violates a documented precondition."""


class Unsupported(GwaError):
    """Input lies outside what the decision procedures cover.

    Typical causes: ``q`` is a root of unity, a defining polynomial is
    constant, or an enumeration cap was exceeded.
    """


class Inapplicable(GwaError):
    """A theorem hypothesis (simple roots, simplicity criterion) fails."""


class StructuralError(GwaError):
    """Malformed symbolic data, e.g. adding unlike cyclotomic monomials."""


class ParseError(GwaError):
    """Syntax error with a character position and the expected tokens."""

    def __init__(self, message, position=None, expected=()):
        self.position = position
        self.expected = tuple(expected)
        detail = message
        if position is not None:
            detail = f"{message} at position {position}"
        if self.expected:
            detail += f" (expected one of: {', '.join(self.expected)})"
        super().__init__(detail)


class SemanticError(GwaError):
    """Well-formed input whose values are not acceptable (e.g. ``q=0``)."""
