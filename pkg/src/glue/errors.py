"""Exception types shared across the package."""


class GlueError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(GlueError):
    """Malformed source text; syntax errors carry a 1-based line/column."""

    def __init__(self, message, line=None, col=None):
        if line is not None:
            message = f"{line}:{col}: {message}"
        super().__init__(message)
        self.line = line
        self.col = col


class IllTyped(GlueError):
    """Typing judgment failed; message names the failing subject and rule."""


class UnknownOp(IllTyped):
    """Operation name not declared in the signature."""


class Uninhabited(GlueError):
    """The generator found no term of the requested type in the given context."""


class FuelExhausted(GlueError):
    """Rewrite engine exceeded its step budget; indicates a bug, not bad input."""
