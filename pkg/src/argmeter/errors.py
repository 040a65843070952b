"""Exception hierarchy shared across the toolkit.

Everything raised on purpose derives from ArgmeterError so the CLI and the
HTTP service can map domain failures to exit code 1 / 4xx uniformly.
"""


class ArgmeterError(Exception):
    """Base class for all domain errors."""


class UnknownArgumentError(ArgmeterError):
    """An argument id was used that is not a node of the graph at hand."""


class ResourceLimitError(ArgmeterError):
    """An enumeration would exceed the configured size cap."""


class ParseError(ArgmeterError):
    """A document could not be parsed; carries a 1-based position."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column}" if column is not None else "") + ")"
        super().__init__(message + where)


class EmptyModelsError(ArgmeterError):
    """A degree-of-conflict computation met a formula set with no restricted models."""


class ArgumentConstructionError(ArgmeterError):
    """A support/claim pair violates one of the three argument conditions."""


class NotEntailedError(ArgumentConstructionError):
    """The support does not entail the claim."""


class InconsistentSupportError(ArgumentConstructionError):
    """The support is inconsistent."""


class NonMinimalSupportError(ArgumentConstructionError):
    """A proper subset of the support already entails the claim."""


class AttackVerificationError(ArgmeterError):
    """A declared arc of an instantiated graph fails its attack-kind check."""


class AlreadyCommittedError(ArgmeterError):
    """A resolution query targeted an argument that is no longer undecided."""


class CommitmentConflictError(ArgmeterError):
    """An answer would force an in-committed argument to out."""


class NoUndecidedError(ArgmeterError):
    """A recommendation was requested but no argument is undecided."""


class EmptyHistoryError(ArgmeterError):
    """An undo was requested on a session with no answers yet."""
