class LinalgError(Exception):
    """Base class for exact linear algebra errors."""


class ShapeError(LinalgError, ValueError):
    """Raised when matrix shapes do not fit together."""
