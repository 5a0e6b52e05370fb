"""Exception types shared across the toolkit.

The CLI maps these onto its exit-code contract: DSL and validation
problems are usage-level failures (exit 1), precondition rejections are
exit 2, and reports whose verdicts are blocked by truncation exit 3.
"""


class ToolkitError(Exception):
    """Base class for all toolkit errors."""


class DSLError(ToolkitError):
    """Syntax error in the text DSL, with a character position."""

    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class ValidationError(ToolkitError):
    """Structurally invalid input (inhomogeneous generator, bad modulus, ...)."""


class PreconditionError(ToolkitError):
    """Operation rejected because a documented precondition fails."""
