"""Exception types shared across the package."""


class WsysError(Exception):
    """Base class for all library-specific errors."""


class VocabularyMismatchError(WsysError):
    """A theory or condition mentions atoms outside the evaluating vocabulary."""


class CapExceededError(WsysError):
    """The exhaustive solver refused an instance above the variable cap."""

    def __init__(self, n_vars, cap):
        super().__init__(
            f"instance has {n_vars} variables, exceeding the exhaustive-solver "
            f"cap of {cap}; raise the cap or export WCNF for an external solver"
        )
        self.n_vars = n_vars
        self.cap = cap


class TransformError(WsysError):
    """A rewrite was asked to run outside its stated precondition."""


class TightnessError(WsysError):
    """Completion-based translation refused a non-tight program."""

    def __init__(self, cycle):
        super().__init__(
            "program is not tight; positive dependency cycle: "
            + " -> ".join(list(cycle) + [cycle[0]])
        )
        self.cycle = tuple(cycle)


class ParseError(WsysError):
    """Input text rejected by one of the format parsers.

    Carries a SourceSpan (see formats module) pointing at the offending token.
    """

    def __init__(self, message, span):
        super().__init__(f"{span.line}:{span.column}: {message}")
        self.message = message
        self.span = span
