from typing import Optional


class ChainError(Exception):
    """Base class for chain complex errors."""


class ValidationError(ChainError):
    """
    Raised when a complex or chain map breaks its defining equations.

    Attributes:
        degree (Optional[int]): The first degree at which the check failed.
    """

    def __init__(self, message: str, degree: Optional[int] = None):
        super().__init__(message)
        self.degree = degree


class SupportGuardError(ChainError):
    """Raised when a construction would leave the permitted degree window."""


class DocumentError(ChainError):
    """Raised when a document cannot be parsed into a complex or map."""
