"""Exception hierarchy.

Unsatisfiable systems are values (empty results), never exceptions; these
classes are for malformed input and for computations that cannot proceed.
"""


class TreecountError(Exception):
    """Base class for all library errors."""


class InputFormatError(TreecountError, ValueError):
    """Malformed text input (graph file, config file, polynomial, CLI value)."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class FormulaSyntaxError(InputFormatError):
    def __init__(self, message, line, column):
        self.column = column
        self.line = line
        TreecountError.__init__(self, f"line {line}, column {column}: {message}")


class DomainError(TreecountError, ValueError):
    """Argument outside the operation's domain."""


class NoPathError(TreecountError):
    pass


class LocalCycleError(TreecountError):
    """Two distinct shortest paths exist, so the region is not tree-like."""


class NotATreeMetricError(TreecountError, ValueError):
    def __init__(self, message, witness):
        self.witness = tuple(witness)
        super().__init__(message)


class CapacityError(TreecountError):
    pass


class GenerationFailedError(TreecountError):
    pass


class ComplexityError(TreecountError):
    pass
