class GraphError(ValueError):
    """Malformed graph input (loops, out-of-range ids, bad vertex sets)."""


class PreconditionError(ValueError):
    """An operation was called on an input outside its stated domain.

    ``which`` names the failed condition so callers (notably the CLI) can
    report it without parsing the message.
    """

    def __init__(self, which: str, message: str | None = None):
        super().__init__(message or which)
        self.which = which


class ColouringError(PreconditionError):
    pass


class CertificationError(RuntimeError):
    """A construction produced a set that failed its own postcondition."""


class ParseError(GraphError):
    """Input file could not be read as an edge list or DIMACS graph."""
