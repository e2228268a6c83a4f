from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Tuple

from linalg import Matrix

from .exceptions import ValidationError


class Complex:
    """
    A finitely supported chain complex of rational vector spaces.

    The grading is homological: the differential in degree ``n`` maps the
    degree ``n`` space to the degree ``n - 1`` space, so ``diff(n)`` has shape
    ``dim(n - 1) x dim(n)``. Degrees outside the support have dimension 0 and
    missing differentials are zero.

    Attributes:
        dims (Dict[int, int]): Nonzero dimensions by degree.
    """

    __slots__ = ("dims", "_diff", "_hash")

    def __init__(
        self,
        dims: Mapping[int, int],
        diff: Optional[Mapping[int, Matrix]] = None,
    ):
        """
        Initialize a new complex.

        Args:
            dims (Mapping[int, int]): Dimension of each degree.
            diff (Optional[Mapping[int, Matrix]]): Differential by source degree.

        Raises:
            ValidationError: If a dimension is negative or a differential has
                the wrong shape. ``d∘d = 0`` is checked by :func:`validate`.
        """
        clean: Dict[int, int] = {}
        for n, size in dims.items():
            if size < 0:
                raise ValidationError(f"negative dimension in degree {n}", n)
            if size:
                clean[int(n)] = int(size)
        self.dims = dict(sorted(clean.items()))
        self._diff: Dict[int, Matrix] = {}
        for n, matrix in (diff or {}).items():
            expected = (self.dim(n - 1), self.dim(n))
            if matrix.shape != expected:
                raise ValidationError(
                    f"differential in degree {n} has shape {matrix.shape}, expected {expected}",
                    n,
                )
            if not matrix.is_zero():
                self._diff[int(n)] = matrix
        self._hash = None

    @classmethod
    def zero(cls) -> "Complex":
        """Return the empty complex, the zero object."""
        return cls({})

    @classmethod
    def sphere(cls, n: int, rank: int = 1) -> "Complex":
        """Return S(n): the rationals (or ``rank`` copies) in degree n with zero differential."""
        return cls({n: rank})

    @classmethod
    def disc(cls, n: int, rank: int = 1) -> "Complex":
        """Return D(n): one copy in degrees n and n - 1 joined by the identity."""
        return cls({n: rank, n - 1: rank}, {n: Matrix.identity(rank)})

    def dim(self, n: int) -> int:
        return self.dims.get(n, 0)

    def diff(self, n: int) -> Matrix:
        matrix = self._diff.get(n)
        if matrix is None:
            return Matrix.zeros(self.dim(n - 1), self.dim(n))
        return matrix

    @property
    def support(self) -> List[int]:
        return list(self.dims)

    @property
    def total_dim(self) -> int:
        return sum(self.dims.values())

    def degree_range(self) -> Optional[Tuple[int, int]]:
        """Return the lowest and highest supported degrees, or None for the zero complex."""
        if not self.dims:
            return None
        degrees = self.support
        return degrees[0], degrees[-1]

    def is_zero(self) -> bool:
        return not self.dims

    def differentials(self) -> Dict[int, Matrix]:
        """Return the nonzero differentials by source degree."""
        return dict(self._diff)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Complex):
            return False
        return self.dims == other.dims and self._diff == other._diff

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(
                (tuple(self.dims.items()), tuple(sorted(self._diff.items(), key=lambda kv: kv[0])))
            )
        return self._hash

    def __repr__(self) -> str:
        dims = ", ".join(f"{n}:{k}" for n, k in self.dims.items())
        return f"Complex({{{dims}}}, nonzero d in {sorted(self._diff)})"


@dataclass(frozen=True)
class ValidationReport:
    """
    Outcome of :func:`validate`.

    Attributes:
        ok (bool): Whether every check passed.
        degree (Optional[int]): The first failing degree.
        message (str): Human-readable description of the failure.
    """

    ok: bool
    degree: Optional[int] = None
    message: str = ""

    def raise_for_failure(self) -> None:
        if not self.ok:
            raise ValidationError(self.message, self.degree)


def validate(x: Complex) -> ValidationReport:
    """
    Check shape coherence and ``d∘d = 0`` in every degree.

    Args:
        x (Complex): The complex to check.

    Returns:
        ValidationReport: ``ok`` or the first offending degree, lowest first.
    """
    for n in sorted(x.differentials()):
        matrix = x.diff(n)
        if matrix.shape != (x.dim(n - 1), x.dim(n)):
            return ValidationReport(False, n, f"differential in degree {n} has shape {matrix.shape}")
        square = x.diff(n - 1) @ matrix
        if not square.is_zero():
            return ValidationReport(
                False, n, f"d∘d is nonzero from degree {n} to degree {n - 2}"
            )
    return ValidationReport(True)
