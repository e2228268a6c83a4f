class EngineError(Exception):
    """Base class for errors raised by the category engine."""


class MismatchError(EngineError):
    """Raised when morphisms do not share the required source or target."""


class LiftFailure(EngineError):
    """Raised when a filler that the lifting axiom guarantees was not found."""


class CatExceededError(EngineError):
    """Raised when a category computation needs a level above the configured maximum."""


class DualizationUnsupported(EngineError):
    """Raised when the instance offers no duality."""


class InvalidWitness(EngineError):
    """Raised when an input witness does not satisfy its equations."""
