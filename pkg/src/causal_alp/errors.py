"""Exception hierarchy shared by every module."""


class CausalALPError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(CausalALPError):
    """Raised when program text cannot be turned into an abductive program.

    ``diagnostics`` holds the error-level :class:`~causal_alp.parser.ParseDiagnostic`
    records; the message is the first of them.
    """

    def __init__(self, diagnostics):
        self.diagnostics = list(diagnostics)
        first = self.diagnostics[0]
        super().__init__(f"{first.line}:{first.column}: {first.message}")


class InvalidWorldError(CausalALPError):
    pass


class ResourceLimitError(CausalALPError):
    """The alphabet is too large for exhaustive enumeration."""


class DomainError(CausalALPError):
    """An operation was applied outside the class of objects it is defined for."""


class CounterfactualUnsupportedError(DomainError):
    """Intervening on a program that carries observations."""


class ContractError(CausalALPError):
    """A documented precondition was violated by the caller."""
