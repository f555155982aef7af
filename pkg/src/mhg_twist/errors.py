"""Exception types shared across the package.

Everything derives from ValueError so casual callers can catch one thing;
the split exists so tests can pin which precondition tripped.
"""


class EngineError(ValueError):
    """Base class for all errors raised by this package."""


class InvalidDiameterError(EngineError):
    """Diameter outside the supported range for the requested operation."""


class NotAUnitError(EngineError):
    """Cycle twist parameter k is not a unit modulo n."""


class DimensionMismatchError(EngineError):
    """Two objects built over different distance alphabets were combined."""


class OutOfAlphabetError(EngineError):
    """A distance value falls outside the alphabet {1..delta}."""


class InvalidInputError(EngineError):
    """An argument fails a documented precondition."""


class InvalidStateError(EngineError):
    """An operation was requested in a state where it is undefined."""


class BudgetError(EngineError):
    """The request exceeds a hard-coded computational budget."""


class DisconnectedGraphError(EngineError):
    """A graph operation that needs connectivity met a disconnected graph."""
