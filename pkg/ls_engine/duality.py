from typing import Any

from categories import StructuredCategory

from .certificates import IndcatResult, indcat_of
from .exceptions import DualizationUnsupported
from .ganea import CatResult, cat_of


def _dual(category: StructuredCategory, x: Any) -> Any:
    if not category.supports_duality:
        raise DualizationUnsupported(f"{type(category).__name__} has no duality")
    return category.dualize(x)


def cocat_of(category: StructuredCategory, x: Any, max_n: int = 4) -> CatResult:
    """The category of the dual object; the result refers to the dual."""
    return cat_of(category, _dual(category, x), max_n)


def indcocat_of(category: StructuredCategory, x: Any, max_n: int = 4) -> IndcatResult:
    """The inductive category of the dual object; the certificate is for the dual."""
    return indcat_of(category, _dual(category, x), max_n)
