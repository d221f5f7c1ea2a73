"""Exception types shared across the package."""


class PreconditionError(ValueError):
    """An input does not satisfy the structural precondition of an algorithm."""


class ResourceLimitError(RuntimeError):
    """A size cap, enumeration budget or time limit would be exceeded."""


class ParseError(ValueError):
    """Malformed instance, graph, solution or CNF text."""

    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
