class CategoryError(Exception):
    """Base class for errors raised by structured category instances."""


class FillerNotFound(CategoryError, LookupError):
    """Raised when a filler that the lifting axiom guarantees was not found."""
