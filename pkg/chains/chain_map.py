from typing import Dict, List, Mapping, Optional

from linalg import Matrix, rank

from .complex import Complex
from .exceptions import ChainError, ValidationError


class ChainMap:
    """
    A chain map between finitely supported complexes.

    ``comp(n)`` has shape ``target.dim(n) x source.dim(n)``; missing degrees
    are zero blocks.

    Attributes:
        source (Complex): The domain.
        target (Complex): The codomain.
    """

    __slots__ = ("source", "target", "_comps", "_hash")

    def __init__(
        self,
        source: Complex,
        target: Complex,
        comps: Optional[Mapping[int, Matrix]] = None,
        validate: bool = True,
    ):
        """
        Initialize a new chain map.

        Args:
            source (Complex): The domain.
            target (Complex): The codomain.
            comps (Optional[Mapping[int, Matrix]]): Components by degree.
            validate (bool): Check commutation with the differentials.
                Defaults to True.

        Raises:
            ValidationError: If a component has the wrong shape, or the map
                does not commute with the differentials.
        """
        self.source = source
        self.target = target
        self._comps: Dict[int, Matrix] = {}
        for n, matrix in (comps or {}).items():
            expected = (target.dim(n), source.dim(n))
            if matrix.shape != expected:
                raise ValidationError(
                    f"component in degree {n} has shape {matrix.shape}, expected {expected}",
                    n,
                )
            if not matrix.is_zero():
                self._comps[int(n)] = matrix
        self._hash = None
        if validate:
            degree = self.first_noncommuting_degree()
            if degree is not None:
                raise ValidationError(
                    f"chain map does not commute with the differential in degree {degree}",
                    degree,
                )

    @classmethod
    def identity(cls, x: Complex) -> "ChainMap":
        return cls(x, x, {n: Matrix.identity(k) for n, k in x.dims.items()}, validate=False)

    @classmethod
    def zero(cls, source: Complex, target: Complex) -> "ChainMap":
        return cls(source, target, validate=False)

    def comp(self, n: int) -> Matrix:
        matrix = self._comps.get(n)
        if matrix is None:
            return Matrix.zeros(self.target.dim(n), self.source.dim(n))
        return matrix

    def components(self) -> Dict[int, Matrix]:
        """Return the nonzero components by degree."""
        return dict(self._comps)

    def degrees(self) -> List[int]:
        """Return every degree where source or target is nonzero."""
        return sorted(set(self.source.dims) | set(self.target.dims))

    def first_noncommuting_degree(self) -> Optional[int]:
        """Return the lowest degree n with ``d f_n != f_{n-1} d``, or None."""
        for n in self.degrees():
            left = self.target.diff(n) @ self.comp(n)
            right = self.comp(n - 1) @ self.source.diff(n)
            if left != right:
                return n
        return None

    def is_zero(self) -> bool:
        return not self._comps

    def is_injective(self) -> bool:
        """True iff every component is injective."""
        return all(rank(self.comp(n)) == k for n, k in self.source.dims.items())

    def is_surjective(self) -> bool:
        """True iff every component is surjective."""
        return all(rank(self.comp(n)) == k for n, k in self.target.dims.items())

    def __matmul__(self, other: "ChainMap") -> "ChainMap":
        """Return the composite ``self ∘ other``."""
        if not isinstance(other, ChainMap):
            return NotImplemented
        if other.target != self.source:
            raise ChainError("cannot compose: target of the right map is not the source of the left")
        comps = {
            n: self.comp(n) @ other.comp(n)
            for n in other.source.dims
            if n in self.target.dims
        }
        return ChainMap(other.source, self.target, comps, validate=False)

    def _check_parallel(self, other: "ChainMap") -> None:
        if self.source != other.source or self.target != other.target:
            raise ChainError("maps are not parallel")

    def __add__(self, other: "ChainMap") -> "ChainMap":
        if not isinstance(other, ChainMap):
            return NotImplemented
        self._check_parallel(other)
        comps = {n: self.comp(n) + other.comp(n) for n in set(self._comps) | set(other._comps)}
        return ChainMap(self.source, self.target, comps, validate=False)

    def __neg__(self) -> "ChainMap":
        return ChainMap(
            self.source, self.target, {n: -m for n, m in self._comps.items()}, validate=False
        )

    def __sub__(self, other: "ChainMap") -> "ChainMap":
        if not isinstance(other, ChainMap):
            return NotImplemented
        return self + (-other)

    def scale(self, factor: object) -> "ChainMap":
        return ChainMap(
            self.source,
            self.target,
            {n: m.scale(factor) for n, m in self._comps.items()},
            validate=False,
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ChainMap):
            return False
        return (
            self.source == other.source
            and self.target == other.target
            and self._comps == other._comps
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(
                (self.source, self.target, tuple(sorted(self._comps.items(), key=lambda kv: kv[0])))
            )
        return self._hash

    def __repr__(self) -> str:
        return f"ChainMap({self.source!r} -> {self.target!r}, nonzero in {sorted(self._comps)})"
