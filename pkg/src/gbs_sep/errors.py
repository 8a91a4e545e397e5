"""Exception types shared across the package."""


class GbsSepError(Exception):
    """Base class for all errors raised by gbs_sep."""


class DomainError(GbsSepError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ParseError(GbsSepError, ValueError):
    """Malformed word, prime-set or graph input."""


class PreconditionError(GbsSepError, ValueError):
    """The input is well formed but violates an operation's precondition."""


class BoundExceeded(GbsSepError):
    """A brute-force search would exceed its configured size bound."""


class InternalError(GbsSepError, RuntimeError):
    """A result that the underlying theory rules out; indicates a bug or a bound set too low."""
